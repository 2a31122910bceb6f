#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cliquemin {

/// Exact arbitrary-precision fraction, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p/q" or a bare integer. Decimal notation is rejected so
/// that no rounding can slip in. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);
/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, and GMP's comparisons assume reduced operands.
Rational fraction(long num, long den);

Rational pow(const Rational& base, unsigned exponent);

/// C(x, y), with C(x, y) = 0 whenever x < y or y < 0.
Integer binomial(long x, long y);
Integer factorial(long k);

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 platform expected");

inline Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }
inline Rational to_rational(std::uint64_t v) { return Rational(to_integer(v)); }

/// The degree-deficiency parameter β of a minimum-degree bound (1-β)n.
///
/// Holds a reduced fraction in the open interval (0,1) together with the
/// integer p = ⌈1/β⌉ - 1, so that 1/(p+1) <= β < 1/p. p is never supplied by
/// callers; every routine that needs it reads it from here.
class Beta {
 public:
  /// Throws DomainError unless 0 < value < 1.
  explicit Beta(Rational value);

  /// Parses an exact "p/q" string.
  static Beta parse(std::string_view text);

  const Rational& value() const noexcept { return value_; }
  int p() const noexcept { return p_; }

  /// The D_- cap (p - t + 1)β for t-cliques.
  Rational cap(int t) const { return Rational(p_ - t + 1) * value_; }

  /// (1-β)n, the minimum degree the parameter stands for.
  Rational min_degree(long n) const { return (1 - value_) * n; }

  /// True iff 1/4 <= β < 1/3, the range of the p = 3 analysis.
  bool in_p3_range() const { return p_ == 3; }

  std::string str() const { return to_string(value_); }

  friend bool operator==(const Beta& a, const Beta& b) { return a.value_ == b.value_; }

 private:
  Rational value_;
  int p_ = 0;
};

}  // namespace cliquemin
