#include "cliquemin/formulas.hpp"

#include <string>

#include "cliquemin/errors.hpp"

namespace cliquemin {

namespace {

Rational binom(long x, long y) { return Rational(binomial(x, y)); }

Rational fact(long k) { return Rational(factorial(k)); }

Rational beta_n(long n, const Beta& beta) {
  const Rational bn = beta.value() * n;
  if (!is_integer(bn)) throw DomainError("beta*n = " + to_string(bn) + " is not an integer");
  const long delta = n - bn.get_num().get_si();
  if (n % 2 != 0 && delta % 2 != 0) {
    throw FamilyUndefinedError("n = " + std::to_string(n) + " and (1-beta)n are both odd");
  }
  return bn;
}

}  // namespace

Rational g_r(const Beta& beta, int r) {
  if (r < 1) throw DomainError("g_r needs r >= 1");
  const Rational& b = beta.value();
  const long p = beta.p();
  Rational sum;
  if (r <= p - 1) sum += binom(p - 1, r) * pow(b, static_cast<unsigned>(r));
  if (r - 1 <= p - 1) sum += binom(p - 1, r - 1) * (1 - (p - 1) * b) * pow(b, static_cast<unsigned>(r - 1));
  if (r >= 2 && r - 2 <= p - 1) {
    sum += binom(p - 1, r - 2) * (1 - p * b) * (1 - (p - 1) * b) * pow(b, static_cast<unsigned>(r - 2)) / 2;
  }
  return sum;
}

Rational predicted_k_r(long n, const Beta& beta, int r, std::uint64_t k3_v0) {
  const std::uint64_t counts[4] = {0, 0, 0, k3_v0};
  return predicted_k_r(n, beta, r, counts);
}

Rational predicted_k_r(long n, const Beta& beta, int r, std::span<const std::uint64_t> v0_counts) {
  const Rational bn = beta_n(n, beta);
  Rational total = g_r(beta, r) * pow(Rational(n), static_cast<unsigned>(r));
  const long p = beta.p();
  for (std::size_t j = 3; j < v0_counts.size() && static_cast<int>(j) <= r; ++j) {
    if (v0_counts[j] == 0) continue;
    const long rest = r - static_cast<long>(j);
    total += binom(p - 1, rest) * pow(bn, static_cast<unsigned>(rest)) * to_rational(v0_counts[j]);
  }
  return total;
}

VerificationReport check_identity_g(const Beta& beta, int t, int which) {
  const Rational& b = beta.value();
  const int p = beta.p();
  VerificationReport rep;
  rep.check_id = "identity-g" + std::to_string(which);
  rep.param("beta", beta.str());
  rep.param("p", p);
  if (which == 1 || which == 2) {
    if (t < 2 || t > p) throw DomainError("identity needs 2 <= t <= p = " + std::to_string(p));
    rep.param("t", t);
    if (which == 1) {
      const Rational lhs = (t + 1) * g_r(beta, t + 1);
      const Rational rhs = (1 - t * b) * g_r(beta, t) + binom(p - 1, t - 2) * ((p + 1) * b - 1) * (1 - (p - 1) * b) *
                                                          (1 - p * b) * pow(b, static_cast<unsigned>(t - 2)) / 2;
      rep.set_sides(lhs, rhs);
    } else {
      const Rational den = (t - 1) + Rational((t + 1) * (p - 2 * t + 2)) * b;
      const Rational lhs = g_r(beta, t + 1) * den;
      const Rational rhs = (1 - t * b) * (p - t + 1) * b * g_r(beta, t) + (t - 1) * (t + 2) * g_r(beta, t + 2);
      rep.set_sides(lhs, rhs);
    }
  } else if (which == 3) {
    if (p < 2) throw DomainError("identity 3 needs p >= 2 (beta < 1/2)");
    const Beta reduced(b / (1 - b));
    rep.param("beta_reduced", reduced.str());
    const Rational lhs = g_r(beta, p) / g_r(beta, p + 1);
    const Rational rhs = (1 + b * g_r(reduced, p - 1) / ((1 - b) * g_r(reduced, p))) / b;
    rep.set_sides(lhs, rhs);
  } else {
    throw DomainError("identity index must be 1, 2 or 3");
  }
  rep.holds = rep.equality;
  return rep;
}

Rational varphi(const Beta& beta, int t, int s) {
  const int p = beta.p();
  if (t < 2 || t > s || s > p + 1) {
    throw DomainError("varphi needs 2 <= t <= s <= p+1 = " + std::to_string(p + 1));
  }
  const Rational& b = beta.value();
  return (1 - t * b) * fact(s) / fact(t) + ((p + 1) * b - 1) * fact(s - 2) / fact(t - 2);
}

CoefficientTable coefficient_table(const Beta& beta) { return coefficient_table(beta.p(), beta.value()); }

CoefficientTable coefficient_table(int p, const Rational& beta) {
  if (p < 2) throw DomainError("coefficient table needs p >= 2");
  if (beta <= 0) throw DomainError("coefficient table needs beta > 0");
  CoefficientTable table;
  table.p = p;
  table.beta = beta;
  const auto size = static_cast<std::size_t>(p) + 1;
  table.C.assign(size, Rational(0));
  table.A.assign(size, Rational(0));
  table.B.assign(size, Rational(0));
  for (int t = p; t >= 3; --t) {
    const auto i = static_cast<std::size_t>(t);
    table.C[i - 1] = (table.C[i] + 1) / ((p - t + 1) * beta);
  }
  const Rational factor = (p + 1) * beta - 1;
  for (int t = 2; t <= p; ++t) {
    const auto i = static_cast<std::size_t>(t);
    table.A[i] = (t - 1) * factor * table.C[i];
    table.B[i] = factor * table.C[i];
  }
  return table;
}

Rational explicit_C(int p, const Rational& beta, int t) {
  const int j = p - t;
  if (j < 0 || t < 2) throw DomainError("explicit C needs 2 <= t <= p");
  Rational sum;
  for (int i = 0; i < j; ++i) sum += fact(i) / pow(beta, static_cast<unsigned>(j - i));
  return sum / fact(j);
}

int r_of_beta(const Beta& beta) {
  const int p = beta.p();
  if (p < 2) throw DomainError("r(beta) needs p >= 2 (beta < 1/2)");
  const auto table = coefficient_table(beta);
  const Rational& b = beta.value();
  // Walk down from t = p; r is one above the largest failing t.
  for (int t = p; t >= 2; --t) {
    const auto i = static_cast<std::size_t>(t);
    const bool a_ok = table.A[i] < 1;
    const bool b_ok = t == p || table.B[i] < (p - t) * b;
    if (!a_ok || !b_ok) return t + 1;
  }
  return 2;
}

EpsilonBound epsilon_p_scan(int p, const Rational& resolution) {
  if (p < 2) throw DomainError("epsilon_p needs p >= 2");
  if (resolution <= 0) throw DomainError("resolution must be positive");
  EpsilonBound out;
  out.p = p;
  out.resolution = resolution;
  const Rational start(1, p + 1);
  const Rational end(1, p);
  Rational lo = start;
  while (true) {
    Rational hi = lo + resolution;
    if (hi >= end) {
      hi = end;
      out.reached_range_end = true;
    }
    const auto table = coefficient_table(p, lo);
    const Rational factor = (p + 1) * hi - 1;
    bool certified = true;
    for (int t = 2; t <= p && certified; ++t) {
      const Rational& c = table.C[static_cast<std::size_t>(t)];
      if ((t - 1) * factor * c >= 1) certified = false;
      if (t < p && factor * c >= (p - t) * lo) certified = false;
    }
    if (!certified) {
      out.reached_range_end = false;
      break;
    }
    ++out.certified_steps;
    lo = hi;
    if (out.reached_range_end) break;
  }
  out.lower_bound = lo - start;
  return out;
}

Rational epsilon_p(int p, const Rational& resolution) { return epsilon_p_scan(p, resolution).lower_bound; }

}  // namespace cliquemin
