#include "cliquemin/rational.hpp"

#include <cctype>

#include "cliquemin/errors.hpp"

namespace cliquemin {

namespace {

Integer parse_integer(std::string_view text, std::size_t base_offset) {
  if (text.empty()) throw ParseError("empty integer", base_offset);
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    i = 1;
    if (text.size() == 1) throw ParseError("sign without digits", base_offset);
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("invalid character '" + std::string(1, text[k]) + "' in rational",
                       base_offset + k);
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  Integer num = parse_integer(text.substr(0, slash), 0);
  Integer den = parse_integer(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational fraction(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

Integer binomial(long x, long y) {
  if (x < 0 || y < 0 || x < y) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(y));
  return r;
}

Integer factorial(long k) {
  if (k < 0) throw DomainError("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Beta::Beta(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ <= 0 || value_ >= 1) {
    throw DomainError("beta must lie in (0,1), got " + to_string(value_));
  }
  Rational inverse = 1 / value_;
  p_ = static_cast<int>(ceil(inverse).get_si()) - 1;
}

Beta Beta::parse(std::string_view text) {
  if (text.find('.') != std::string_view::npos) {
    throw ParseError("beta must be an exact fraction such as 2/7, not a decimal",
                     text.find('.'));
  }
  return Beta(parse_rational(text));
}

}  // namespace cliquemin
