#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliquemin/cliques.hpp"
#include "cliquemin/graph.hpp"
#include "cliquemin/rational.hpp"
#include "cliquemin/report.hpp"

namespace cliquemin {

/// Clique structure of one graph for one β, shared by every check run on
/// the same (G, β): the D-tables, clique counts, and the subclique degree
/// tables of all s-cliques (cached per order up to kCacheLimit cliques,
/// streamed beyond that). Not thread-safe.
class Analysis {
 public:
  static constexpr std::size_t kCacheLimit = 200000;

  Analysis(const Graph& g, Beta beta);

  const Graph& graph() const noexcept { return *g_; }
  const Beta& beta() const noexcept { return calc_.beta(); }
  const CliqueCalculus& calc() const noexcept { return calc_; }
  int p() const noexcept { return calc_.p(); }
  int n() const noexcept { return g_->order(); }

  /// k_t, t >= 0.
  std::uint64_t k(int t) const;

  /// Calls f(table) for each s-clique in enumeration order.
  void visit(int s, const std::function<void(const SubcliqueDegrees&)>& f) const;

  /// Throws DomainError naming `who` unless min_degree(G) >= (1-β)n.
  void require_min_degree(const char* who) const { calc_.require_min_degree(who); }

 private:
  const Graph* g_;
  CliqueCalculus calc_;
  mutable CliqueStats stats_;
  mutable std::map<int, std::vector<SubcliqueDegrees>> cache_;
};

struct KeyPair {
  Rational f;
  Rational g;
};

/// Σ f g <= m Σ f + M Σ g - mM|A| given f <= M and g >= m, with equality
/// exactly when every pair has f = M or g = m. A pair breaking the
/// hypotheses is a DomainError naming its index.
VerificationReport verify_keyprp(std::span<const KeyPair> values, const Rational& M, const Rational& m);

enum class DegreeVariant { D, DMinus };

/// For every s-clique S:
///   Σ_{T ∈ K_t(S)} X(T) >= (1-β)s C(s-2,t-1) - (t-1)C(s-1,t) + C(s-2,t-2) X(S)
/// with X = D, or X = D_- (then s <= p+1). For X = D, equality forces every
/// vertex of S to have degree (1-β)n.
VerificationReport verify_subclique_degree_sum(const Analysis& a, int s, int t, DegreeVariant variant);
VerificationReport verify_subclique_degree_sum(const Graph& g, const Beta& beta, int s, int t, DegreeVariant variant);

/// D̃(S) >= 0 for every (t+1)-clique S, 2 <= t <= p.
VerificationReport verify_tilde_nonnegative(const Analysis& a, int t);
VerificationReport verify_tilde_nonnegative(const Graph& g, const Beta& beta, int t);

/// Upper bound on Σ_{S ∈ K_{t+1}} D̃(S):
///   (t-1+(p-2t+2)(t+1)β)k_{t+1} + (t-1)Σ_{K_{t+1}} D_+ - (1-tβ)(p-t+1)βn k_t
///   - (t-1)(t+2)k_{t+2}/n - (1-tβ)n Σ_{K_t} D_+,
/// with equality exactly when every t-clique has D_- in {1-tβ, (p-t+1)β}.
/// The two counting identities behind it are asserted as conditions.
VerificationReport verify_tilde_sum_upper(const Analysis& a, int t);
VerificationReport verify_tilde_sum_upper(const Graph& g, const Beta& beta, int t);

/// 1/3 <= β < 1/2: k_3 >= (1-2β)βn k_2 >= g_3(β)n^3; equality in the
/// triangle bound must come from a family member.
VerificationReport verify_p2_chain(const Analysis& a);
VerificationReport verify_p2_chain(const Graph& g, const Beta& beta);

/// 1/4 <= β < 1/3, three parts:
///  (a) per triangle, D̃(T) >= c D_+(T) - (1-2β) Σ_{e ⊂ T} D_+(e)/(D_+(e)+β),
///      c = (1-2/(29-75β))(4β-1)/(1-2β); equality only for a non-heavy T
///      whose vertices have degree (1-β)n;
///  (b) (1+3β)k_3 + (2/(1-2β))(1-3β+(4β-1)/(29-75β))Σ D_+(T)
///      >= 2(1-2β)βn k_2 + 4k_4/n; equality only for a regular graph whose
///      edges have D(e) in {1-2β, 2β};
///  (c) (2-4β)k_4 >= (1-3β)βn k_3 + (1-3β+(4β-1)/(29-75β))n Σ D_+(T);
///      equality only for a family member.
VerificationReport verify_p3_strengthened(const Analysis& a);
VerificationReport verify_p3_strengthened(const Graph& g, const Beta& beta);

/// 1/4 <= β < 1/3: Σ_{S ∈ K_4} η(S) >= 0. Every 5-clique containing a bad
/// 4-clique must have Σ η̃ > 0 over its 4-subcliques and satisfy the
/// bad-count bounds (b <= 2h/(h-1) for h >= 2 heavy edges, b <= 3 when two
/// heavy edges meet); every bad 4-clique must have the structure reported
/// by diagnose_four_clique.
VerificationReport verify_eta_aggregate(const Analysis& a);
VerificationReport verify_eta_aggregate(const Graph& g, const Beta& beta);

/// φ_t^t = D_-, φ_t^s(S) = Σ over the (s-1)-subcliques U of φ_t^{s-1}(U),
/// and Φ_t^s = min(φ_t^s, φ̄_t^s). 2 <= t <= |S| <= p+1.
/// With PhiRecursion::Capped the recursion sums Φ_t^{s-1} instead of φ_t^{s-1}.
enum class PhiRecursion { Literal, Capped };
inline constexpr PhiRecursion kDefaultPhiRecursion = PhiRecursion::Literal;

Rational phi(const Graph& g, const VertexSet& s, int t, const Beta& beta, PhiRecursion mode = kDefaultPhiRecursion);

struct PhiValue {
  Rational phi;
  Rational capped;  // Φ = min(φ, φ̄)
};
/// φ_t^s and Φ_t^s of the clique selected by mask, from its subclique table.
PhiValue phi_value(const CliqueCalculus& calc, const SubcliqueDegrees& sub, std::uint32_t mask, int t,
                   PhiRecursion mode = kDefaultPhiRecursion);

/// Lower bound Φ_t^s(S) >= (1-tβ)s!/t! + (D_-(S)-(1-sβ))(s-2)!/(t-2)! per
/// s-clique, its aggregate form for s = p+1, and the upper bound on
/// Σ_{S ∈ K_s} Φ_t^s(S). 2 <= t < s <= p+1.
VerificationReport verify_phi(const Analysis& a, int t, int s, PhiRecursion mode = kDefaultPhiRecursion);
VerificationReport verify_phi(const Graph& g, const Beta& beta, int t, int s,
                              PhiRecursion mode = kDefaultPhiRecursion);

/// k_s/(g_s n^s) >= k_t/(g_t n^t) for each (t, s), evaluated as
/// k_s g_t >= k_t g_s n^{s-t}. Each pair needs s = p+1, or G K_{p+2}-free,
/// or 1/4 <= β < 1/3 with s <= 4; otherwise DomainError. Equality must come
/// from a family member whenever the applicable statement says so.
VerificationReport verify_ratio_chain(const Analysis& a, std::span<const std::pair<int, int>> pairs);
VerificationReport verify_ratio_chain(const Graph& g, const Beta& beta, std::span<const std::pair<int, int>> pairs);

/// Under the minimum-degree hypothesis, is_heavy_free(G) must agree with
/// k_{p+2}(G) = 0.
VerificationReport verify_heavy_free_equivalence(const Analysis& a);

enum class Suite { Basic, P2, P3, Phi, Ratio, All };

Suite parse_suite(const std::string& name);
std::string to_string(Suite suite);

/// Every check of the suite that applies to (G, β); checks whose range
/// excludes β are skipped.
std::vector<VerificationReport> run_suite(const Analysis& a, Suite suite);

}  // namespace cliquemin
