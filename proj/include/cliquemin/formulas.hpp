#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cliquemin/rational.hpp"
#include "cliquemin/report.hpp"

namespace cliquemin {

/// g_r(β) = C(p-1,r)β^r + C(p-1,r-1)(1-(p-1)β)β^{r-1}
///        + ½C(p-1,r-2)(1-pβ)(1-(p-1)β)β^{r-2},
/// the normalised r-clique count of the extremal construction. r >= 1
/// (g_1 = 1); zero for r > p+1.
Rational g_r(const Beta& beta, int r);

/// r-clique count of a family member whose inner graph G[V0] has
/// k_3(G[V0]) = k3_v0 and no K_4:
/// g_r(β)n^r + C(p-1, r-3)(βn)^{r-3} k3_v0.
/// Throws DomainError if βn is not an integer and FamilyUndefinedError if n
/// and (1-β)n are both odd.
Rational predicted_k_r(long n, const Beta& beta, int r, std::uint64_t k3_v0);

/// General form: v0_counts[j] = k_j(G[V0]) for j >= 3 (entries 0..2 ignored).
/// Each j-clique inside V0 extends by r-j vertices from distinct outer
/// classes: g_r(β)n^r + Σ_{j>=3} C(p-1, r-j)(βn)^{r-j} k_j(G[V0]).
Rational predicted_k_r(long n, const Beta& beta, int r, std::span<const std::uint64_t> v0_counts);

/// Exact check of one of the three identities relating consecutive g_t:
///   which = 1: (t+1)g_{t+1} = (1-tβ)g_t + ½C(p-1,t-2)((p+1)β-1)(1-(p-1)β)(1-pβ)β^{t-2}
///   which = 2: g_{t+1}(t-1+(t+1)(p-2t+2)β) = (1-tβ)(p-t+1)βg_t + (t-1)(t+2)g_{t+2}
///   which = 3: g_p/g_{p+1} = (1/β)(1 + βg_{p-1}(β')/((1-β)g_p(β'))), β' = β/(1-β)
/// 2 <= t <= p for which = 1, 2; which = 3 ignores t and needs p >= 2.
/// The report holds only when the two sides are equal.
VerificationReport check_identity_g(const Beta& beta, int t, int which);

/// φ̄_t^s = (1-tβ)s!/t! + ((p+1)β-1)(s-2)!/(t-2)! for 2 <= t <= s <= p+1.
Rational varphi(const Beta& beta, int t, int s);

/// Coefficients C_t, A_t = (t-1)((p+1)β-1)C_t and B_t = ((p+1)β-1)C_t for
/// 2 <= t <= p, with C_p = 0 and C_t + 1 = (p-t+1)βC_{t-1}.
struct CoefficientTable {
  int p = 0;
  Rational beta;
  /// Indexed by t; entries 0 and 1 unused.
  std::vector<Rational> C, A, B;
};

CoefficientTable coefficient_table(const Beta& beta);
/// Same recurrence evaluated at an explicit p (β need not satisfy
/// p = ⌈1/β⌉-1; used for interval bounds at the ends of a β-range).
CoefficientTable coefficient_table(int p, const Rational& beta);

/// C_{p-j} = Σ_{0<=i<j} i! β^{i-j} / j!, the closed form of the recurrence.
Rational explicit_C(int p, const Rational& beta, int t);

/// Smallest r >= 2 such that A_t < 1 for r <= t <= p and B_t < (p-t)β for
/// r <= t < p. (At t = p both B_p and (p-t)β vanish, so the strict
/// comparison is only imposed below p.)
int r_of_beta(const Beta& beta);

/// Certified scan for ε_p.
struct EpsilonBound {
  int p = 0;
  Rational resolution;
  /// Every β in [1/(p+1), 1/(p+1) + lower_bound) has r(β) = 2.
  Rational lower_bound;
  long certified_steps = 0;
  /// True when the scan stopped because the range end 1/p was reached.
  bool reached_range_end = false;
};

/// Scans [1/(p+1), 1/p) in steps of `resolution`. On each step interval
/// [b0, b1] the bounds A_t <= (t-1)((p+1)b1-1)C_t(b0) and
/// B_t <= ((p+1)b1-1)C_t(b0) hold because C_t decreases and (p+1)β-1
/// increases in β; the step is certified when those bounds are below 1 and
/// (p-t)b0. The scan stops at the first uncertified step.
EpsilonBound epsilon_p_scan(int p, const Rational& resolution);
Rational epsilon_p(int p, const Rational& resolution);

}  // namespace cliquemin
