#include "cliquemin/verifier.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "cliquemin/errors.hpp"
#include "cliquemin/extremal.hpp"
#include "cliquemin/formulas.hpp"

namespace cliquemin {

namespace {

Rational q(const Integer& z) { return Rational(z); }

Rational fact_ratio(long a, long b) { return Rational(factorial(a)) / Rational(factorial(b)); }

std::string label(const SubcliqueDegrees& sub, std::uint32_t mask) { return clique_label(sub.vertices(mask)); }

std::string pair_label(int t, int s) { return "(" + std::to_string(t) + "," + std::to_string(s) + ")"; }

// nullopt when deciding membership needs a search above the threshold.
std::optional<bool> membership(const Graph& g, const Beta& beta) {
  try {
    return is_member_of_family(g, beta);
  } catch (const RefusalError&) {
    return std::nullopt;
  } catch (const DomainError&) {
    // βn not an integer: no member exists.
    return false;
  }
}

void require_member_on_equality(VerificationReport& rep, const std::string& name, bool equality, const Graph& g,
                                const Beta& beta) {
  if (!equality) {
    rep.require(name, true);
    return;
  }
  const auto member = membership(g, beta);
  if (!member) rep.notes.push_back("membership undecided: inner graph above the search threshold");
  rep.require(name, member.value_or(false));
}

bool vertices_have_min_degree(const Analysis& a, const SubcliqueDegrees& sub, std::uint32_t mask) {
  const Rational target = a.beta().min_degree(a.n());
  for (int i = 0; i < sub.size(); ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    if ((mask & bit) && Rational(static_cast<long>(sub.degree(bit))) != target) return false;
  }
  return true;
}

Rational count(const Analysis& a, int t) { return to_rational(a.k(t)); }

}  // namespace

Analysis::Analysis(const Graph& g, Beta beta) : g_(&g), calc_(g, std::move(beta)) {}

std::uint64_t Analysis::k(int t) const {
  if (t < 0) throw InputError("clique order must be non-negative");
  if (t == 0) return 1;
  if (t > g_->order()) return 0;
  if (t > stats_.max_order) stats_ = count_cliques(*g_, std::max(t, std::min(g_->order(), p() + 3)));
  return stats_.k(t);
}

void Analysis::visit(int s, const std::function<void(const SubcliqueDegrees&)>& f) const {
  if (s < 1 || s > g_->order()) return;
  if (auto it = cache_.find(s); it != cache_.end()) {
    for (const auto& sub : it->second) f(sub);
    return;
  }
  if (k(s) > kCacheLimit) {
    for_each_clique_of_size(*g_, s, [&](std::span<const Vertex> c, std::span<const std::uint64_t>) {
      f(SubcliqueDegrees(*g_, c));
    });
    return;
  }
  auto& list = cache_[s];
  list.reserve(static_cast<std::size_t>(k(s)));
  for_each_clique_of_size(*g_, s, [&](std::span<const Vertex> c, std::span<const std::uint64_t>) {
    list.emplace_back(*g_, c);
  });
  for (const auto& sub : list) f(sub);
}

VerificationReport verify_keyprp(std::span<const KeyPair> values, const Rational& M, const Rational& m) {
  VerificationReport rep;
  rep.check_id = "keyprp";
  rep.param("M", to_string(M));
  rep.param("m", to_string(m));
  rep.param("size", static_cast<long>(values.size()));
  Rational sum_f, sum_g, sum_fg;
  bool extreme = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& [f, g] = values[i];
    if (f > M) throw DomainError("pair " + std::to_string(i) + " has f = " + to_string(f) + " > M = " + to_string(M));
    if (g < m) throw DomainError("pair " + std::to_string(i) + " has g = " + to_string(g) + " < m = " + to_string(m));
    sum_f += f;
    sum_g += g;
    sum_fg += f * g;
    extreme = extreme && (f == M || g == m);
  }
  rep.set_sides(m * sum_f + M * sum_g - m * M * static_cast<long>(values.size()), sum_fg);
  rep.require("equality iff every pair has f = M or g = m", rep.equality == extreme);
  return rep;
}

VerificationReport verify_subclique_degree_sum(const Analysis& a, int s, int t, DegreeVariant variant) {
  if (t < 2 || s <= t) throw DomainError("subclique degree sums need 2 <= t < s, got t = " + std::to_string(t) + ", s = " + std::to_string(s));
  if (variant == DegreeVariant::DMinus && s > a.p() + 1) {
    throw DomainError("the D_- form needs s <= p+1 = " + std::to_string(a.p() + 1) + ", got s = " + std::to_string(s));
  }
  a.require_min_degree("verify_subclique_degree_sum");
  const auto& calc = a.calc();
  const Rational& beta = a.beta().value();

  VerificationReport rep;
  rep.check_id = "subclique-degree-sum";
  rep.param("s", s);
  rep.param("t", t);
  rep.param("variant", variant == DegreeVariant::D ? "D" : "D-");

  const Rational base = (1 - beta) * s * q(binomial(s - 2, t - 1)) - (t - 1) * q(binomial(s - 1, t));
  const Rational coef = q(binomial(s - 2, t - 2));
  bool regular_on_equality = true;
  a.visit(s, [&](const SubcliqueDegrees& sub) {
    const std::uint32_t full = sub.full_mask();
    Rational lhs, rhs;
    if (variant == DegreeVariant::D) {
      lhs = calc.sum_D(sub, full, t);
      rhs = base + coef * calc.D(sub.degree(full));
    } else {
      lhs = calc.sum_D_minus(sub, full, t);
      rhs = base + coef * calc.D_minus(s, sub.degree(full));
    }
    rep.add_instance(lhs, rhs, label(sub, full));
    if (variant == DegreeVariant::D && lhs == rhs && !vertices_have_min_degree(a, sub, full)) {
      regular_on_equality = false;
      rep.add_witness("equality without degree (1-beta)n: " + label(sub, full));
    }
  });
  if (variant == DegreeVariant::D) rep.require("equality only when every vertex of S has degree (1-beta)n", regular_on_equality);
  return rep;
}

VerificationReport verify_subclique_degree_sum(const Graph& g, const Beta& beta, int s, int t, DegreeVariant variant) {
  return verify_subclique_degree_sum(Analysis(g, beta), s, t, variant);
}

VerificationReport verify_tilde_nonnegative(const Analysis& a, int t) {
  if (t < 2 || t > a.p()) throw DomainError("D~ needs 2 <= t <= p = " + std::to_string(a.p()) + ", got t = " + std::to_string(t));
  a.require_min_degree("verify_tilde_nonnegative");
  VerificationReport rep;
  rep.check_id = "tilde-nonnegative";
  rep.param("t", t);
  const Rational zero;
  a.visit(t + 1, [&](const SubcliqueDegrees& sub) {
    rep.add_instance(widetilde_D(a.calc(), sub, sub.full_mask()), zero, label(sub, sub.full_mask()));
  });
  return rep;
}

VerificationReport verify_tilde_nonnegative(const Graph& g, const Beta& beta, int t) {
  return verify_tilde_nonnegative(Analysis(g, beta), t);
}

VerificationReport verify_tilde_sum_upper(const Analysis& a, int t) {
  const int p = a.p();
  if (t < 2 || t > p) throw DomainError("D~ sums need 2 <= t <= p = " + std::to_string(p) + ", got t = " + std::to_string(t));
  a.require_min_degree("verify_tilde_sum_upper");
  const auto& calc = a.calc();
  const Rational& beta = a.beta().value();
  const long n = a.n();

  Rational sum_tilde, plus_upper, minus_upper, nested_minus;
  a.visit(t + 1, [&](const SubcliqueDegrees& sub) {
    const std::uint32_t full = sub.full_mask();
    sum_tilde += widetilde_D(calc, sub, full);
    plus_upper += calc.D_plus(t + 1, sub.degree(full));
    minus_upper += calc.D_minus(t + 1, sub.degree(full));
    nested_minus += calc.sum_D_minus(sub, full, t);
  });
  Rational plus_lower, minus_times_D;
  const Rational low = 1 - t * beta;
  const Rational cap = a.beta().cap(t);
  bool dichotomy = true;
  a.visit(t, [&](const SubcliqueDegrees& sub) {
    const std::size_t d = sub.degree(sub.full_mask());
    plus_lower += calc.D_plus(t, d);
    minus_times_D += calc.D_minus(t, d) * calc.D(d);
    const Rational& m = calc.D_minus(t, d);
    dichotomy = dichotomy && (m == low || m == cap);
  });

  const Rational kt = count(a, t), kt1 = count(a, t + 1), kt2 = count(a, t + 2);
  const Rational lead = (t - 1) + Rational((p - 2 * t + 2) * (t + 1)) * beta;
  const Rational count_form = lead * kt1 - low * cap * n * kt - Rational((t - 1) * (t + 2)) * kt2 / n;
  const Rational upper = count_form + (t - 1) * plus_upper - low * n * plus_lower;

  VerificationReport rep;
  rep.check_id = "tilde-sum-upper";
  rep.param("t", t);
  rep.set_sides(upper, sum_tilde);
  rep.require("equality iff every t-clique has D_- in {1-t*beta, (p-t+1)*beta}", rep.equality == dichotomy);
  rep.require("identity: sum over (t+1)-cliques of sum of D_- over t-subcliques = n sum D_-(T)D(T)",
              nested_minus == n * minus_times_D);
  rep.require("identity: sum of D_- over (t+1)-cliques = (t+2)k_{t+2}/n - sum of D_+",
              minus_upper == Rational(t + 2) * kt2 / n - plus_upper);

  if (plus_upper == 0 && plus_lower == 0) {
    // Without heavy t- or (t+1)-cliques the bound collapses to a relation
    // between k_t, k_{t+1}, k_{t+2} alone, which must be non-negative.
    VerificationReport counts;
    counts.check_id = "tilde-sum-clique-counts";
    counts.param("t", t);
    counts.set_sides(count_form, 0);
    counts.require("agrees with the D_+ form", count_form == upper);
    rep.parts.push_back(std::move(counts));
  }
  return rep;
}

VerificationReport verify_tilde_sum_upper(const Graph& g, const Beta& beta, int t) {
  return verify_tilde_sum_upper(Analysis(g, beta), t);
}

VerificationReport verify_p2_chain(const Analysis& a) {
  if (a.p() != 2) throw DomainError("the triangle chain needs 1/3 <= beta < 1/2, got beta = " + a.beta().str());
  a.require_min_degree("verify_p2_chain");
  const Rational& beta = a.beta().value();
  const long n = a.n();
  const Rational k2 = count(a, 2), k3 = count(a, 3);
  const Rational middle = (1 - 2 * beta) * beta * n * k2;
  const Rational bound = g_r(a.beta(), 3) * n * n * n;

  VerificationReport first;
  first.check_id = "p2-triangles-vs-edges";
  first.set_sides(k3, middle);
  VerificationReport second;
  second.check_id = "p2-edges-vs-extremal";
  second.set_sides(middle, bound);

  VerificationReport rep;
  rep.check_id = "p2-chain";
  rep.parts = {std::move(first), std::move(second)};
  rep.set_sides(k3, bound);
  rep.holds = rep.holds && rep.parts[0].holds && rep.parts[1].holds;
  require_member_on_equality(rep, "equality only for a family member", rep.equality, a.graph(), a.beta());
  return rep;
}

VerificationReport verify_p2_chain(const Graph& g, const Beta& beta) { return verify_p2_chain(Analysis(g, beta)); }

VerificationReport verify_p3_strengthened(const Analysis& a) {
  if (!a.beta().in_p3_range()) throw DomainError("the strengthened bounds need 1/4 <= beta < 1/3, got beta = " + a.beta().str());
  a.require_min_degree("verify_p3_strengthened");
  const auto& calc = a.calc();
  const Rational& beta = a.beta().value();
  const long n = a.n();
  const Rational coef = eta_coefficient(a.beta());
  const Rational c = (1 - 2 / (29 - 75 * beta)) * (4 * beta - 1) / (1 - 2 * beta);

  VerificationReport per_triangle;
  per_triangle.check_id = "p3-triangle-tilde";
  VerificationReport codegree;
  codegree.check_id = "p3-triangle-tilde-codegree";
  bool equality_shape = true;
  Rational plus_triangles;
  a.visit(3, [&](const SubcliqueDegrees& sub) {
    const std::uint32_t full = sub.full_mask();
    const std::size_t d = sub.degree(full);
    const Rational& plus = calc.D_plus(3, d);
    plus_triangles += plus;
    Rational ratio, ratio_codegree;
    for_each_submask_of_size(full, 2, [&](std::uint32_t e) {
      const Rational& pe = calc.D_plus(2, sub.degree(e));
      if (pe > 0) {
        ratio += pe / (pe + beta);
        ratio_codegree += pe / calc.D(sub.degree(e));
      }
    });
    const Rational tilde = widetilde_D(calc, sub, full);
    const Rational rhs = c * plus - (1 - 2 * beta) * ratio;
    per_triangle.add_instance(tilde, rhs, label(sub, full));
    codegree.add_instance(tilde, c * plus - (1 - 2 * beta) * ratio_codegree, label(sub, full));
    if (tilde == rhs && (plus > 0 || !vertices_have_min_degree(a, sub, full))) {
      equality_shape = false;
      per_triangle.add_witness("equality at a heavy triangle or a vertex above (1-beta)n: " + label(sub, full));
    }
  });
  per_triangle.require("equality only at a non-heavy triangle with vertex degrees (1-beta)n", equality_shape);

  const Rational k2 = count(a, 2), k3 = count(a, 3), k4 = count(a, 4), k5 = count(a, 5);
  const Rational excess = 1 - 3 * beta + coef;

  VerificationReport edges_part;
  edges_part.check_id = "p3-edges-triangles";
  edges_part.set_sides((1 + 3 * beta) * k3 + 2 / (1 - 2 * beta) * excess * plus_triangles,
                      2 * (1 - 2 * beta) * beta * n * k2 + 4 * k4 / n);
  if (edges_part.equality) {
    bool edges_ok = true;
    const Rational low = 1 - 2 * beta, high = 2 * beta;
    a.visit(2, [&](const SubcliqueDegrees& sub) {
      const Rational& D = calc.D(sub.degree(sub.full_mask()));
      edges_ok = edges_ok && (D == low || D == high);
    });
    const Rational delta = a.beta().min_degree(n);
    edges_part.require("equality only for a (1-beta)n-regular graph", is_integer(delta) && is_regular(a.graph(), static_cast<int>(delta.get_num().get_si())));
    edges_part.require("equality only when every edge has D(e) in {1-2beta, 2beta}", edges_ok);
  }

  VerificationReport four;
  four.check_id = "p3-triangles-four-cliques";
  four.set_sides((2 - 4 * beta) * k4, (1 - 3 * beta) * beta * n * k3 + excess * n * plus_triangles);
  if (beta == Rational(1, 4)) {
    // Every triangle has D_-(T) = β here, so both sides reduce to k_4 and
    // equality carries no structural information.
    four.notes.push_back("identity at beta = 1/4; equality clause not asserted");
  } else {
    require_member_on_equality(four, "equality only for a family member", four.equality, a.graph(), a.beta());
  }

  Rational plus_four;
  a.visit(4, [&](const SubcliqueDegrees& sub) { plus_four += calc.D_plus(4, sub.degree(sub.full_mask())); });

  VerificationReport rep;
  rep.check_id = "p3-strengthened";
  rep.parts.push_back(std::move(per_triangle));
  rep.parts.push_back(std::move(codegree));
  rep.parts.push_back(std::move(edges_part));
  rep.parts.push_back(std::move(four));
  rep.summarize_parts();
  rep.require("identity: sum of D_+ over 4-cliques = 5k_5/n", plus_four == 5 * k5 / n);
  return rep;
}

VerificationReport verify_p3_strengthened(const Graph& g, const Beta& beta) {
  return verify_p3_strengthened(Analysis(g, beta));
}

VerificationReport verify_eta_aggregate(const Analysis& a) {
  if (!a.beta().in_p3_range()) throw DomainError("eta needs 1/4 <= beta < 1/3, got beta = " + a.beta().str());
  a.require_min_degree("verify_eta_aggregate");
  const auto& calc = a.calc();
  const long n = a.n();
  const auto constants = bad_clique_constants(a.beta());

  VerificationReport rep;
  rep.check_id = "eta-aggregate";
  rep.param("epsilon_denominator", to_string(constants.epsilon_denominator));
  rep.require("epsilon denominator 150beta^2-137beta+30 is positive", constants.epsilon_denominator > 0);

  Rational sum_eta, sum_eta_isolated;
  long bad = 0;
  bool structure = true;
  a.visit(4, [&](const SubcliqueDegrees& sub) {
    const std::uint32_t full = sub.full_mask();
    const Rational value = eta(calc, sub, full);
    sum_eta += value;
    if (sub.degree(full) == 0) sum_eta_isolated += value;
    if (value < 0) {
      ++bad;
      const auto diag = diagnose_four_clique(calc, sub, constants);
      if (!diag.structure_holds()) {
        structure = false;
        rep.add_witness("bad 4-clique without the expected structure: " + label(sub, full));
      }
    }
  });
  rep.set_sides(sum_eta, 0);
  rep.param("bad_4_cliques", bad);
  rep.require("every bad 4-clique has one heavy edge, two heavy triangles, 0 < D(S) < Delta and light triangles below 2Delta",
              structure);

  VerificationReport positive;
  positive.check_id = "eta-bad-5-clique";
  VerificationReport spread;
  spread.check_id = "eta-bad-count-vs-heavy-edges";
  VerificationReport shared;
  shared.check_id = "eta-bad-count-adjacent-heavy-edges";
  bool strict = true;
  Rational sum_tilde_all;
  const Rational zero;
  a.visit(5, [&](const SubcliqueDegrees& sub) {
    const std::uint32_t full = sub.full_mask();
    Rational sum_tilde;
    int bad_here = 0;
    for_each_submask_of_size(full, 4, [&](std::uint32_t m) {
      const Rational value = eta(calc, sub, m);
      if (value < 0) ++bad_here;
      sum_tilde += value / calc.D(sub.degree(m));
    });
    sum_tilde_all += sum_tilde;
    if (bad_here == 0) return;
    const std::string where = label(sub, full);
    positive.add_instance(sum_tilde, zero, where);
    if (sum_tilde == 0) {
      strict = false;
      positive.add_witness("zero sum: " + where);
    }
    std::vector<std::uint32_t> heavy;
    for_each_submask_of_size(full, 2, [&](std::uint32_t e) {
      if (calc.heavy(2, sub.degree(e))) heavy.push_back(e);
    });
    const long h = static_cast<long>(heavy.size());
    if (h >= 2) spread.add_instance(fraction(2 * h, h - 1), bad_here, where);
    bool adjacent = false;
    for (std::size_t i = 0; i < heavy.size(); ++i)
      for (std::size_t j = i + 1; j < heavy.size(); ++j) adjacent = adjacent || (heavy[i] & heavy[j]) != 0;
    if (adjacent) shared.add_instance(3, bad_here, where);
  });
  positive.require("strictly positive", strict);
  rep.require("identity: n sum eta = sum over 5-cliques of sum eta~ + n sum of eta over 4-cliques with D = 0",
              n * sum_eta == sum_tilde_all + n * sum_eta_isolated);
  rep.parts.push_back(std::move(positive));
  rep.parts.push_back(std::move(spread));
  rep.parts.push_back(std::move(shared));
  rep.holds = rep.holds && std::all_of(rep.parts.begin(), rep.parts.end(), [](const auto& p) { return p.holds; });
  return rep;
}

VerificationReport verify_eta_aggregate(const Graph& g, const Beta& beta) {
  return verify_eta_aggregate(Analysis(g, beta));
}

PhiValue phi_value(const CliqueCalculus& calc, const SubcliqueDegrees& sub, std::uint32_t mask, int t,
                   PhiRecursion mode) {
  const int s = std::popcount(mask);
  if (t < 2 || t > s || s > calc.p() + 1) {
    throw DomainError("phi_t^s needs 2 <= t <= s <= p+1 = " + std::to_string(calc.p() + 1) + ", got t = " +
                      std::to_string(t) + ", s = " + std::to_string(s));
  }
  const Beta& beta = calc.beta();
  std::vector<Rational> bound(static_cast<std::size_t>(s) + 1);
  for (int i = t; i <= s; ++i) bound[static_cast<std::size_t>(i)] = varphi(beta, t, i);

  // Values over submasks of `mask`, built level by level from size t.
  std::vector<Rational> value(static_cast<std::size_t>(sub.full_mask()) + 1);
  for_each_submask_of_size(mask, t, [&](std::uint32_t m) { value[m] = calc.D_minus(t, sub.degree(m)); });
  for (int level = t + 1; level <= s; ++level) {
    const Rational& cap = bound[static_cast<std::size_t>(level - 1)];
    for_each_submask_of_size(mask, level, [&](std::uint32_t m) {
      Rational sum;
      for (std::uint32_t rest = m; rest; rest &= rest - 1) {
        const Rational& below = value[m & ~(rest & (~rest + 1))];
        sum += mode == PhiRecursion::Capped && cap < below ? cap : below;
      }
      value[m] = std::move(sum);
    });
  }
  PhiValue out;
  out.phi = value[mask];
  const Rational& top = bound[static_cast<std::size_t>(s)];
  out.capped = out.phi < top ? out.phi : top;
  return out;
}

Rational phi(const Graph& g, const VertexSet& s, int t, const Beta& beta, PhiRecursion mode) {
  const auto members = s.members();
  if (!is_clique(g, members)) throw InputError("phi needs a clique");
  CliqueCalculus calc(g, beta);
  SubcliqueDegrees sub(g, members);
  return phi_value(calc, sub, sub.full_mask(), t, mode).phi;
}

VerificationReport verify_phi(const Analysis& a, int t, int s, PhiRecursion mode) {
  const int p = a.p();
  if (t < 2 || s <= t || s > p + 1) {
    throw DomainError("phi bounds need 2 <= t < s <= p+1 = " + std::to_string(p + 1) + ", got " + pair_label(t, s));
  }
  a.require_min_degree("verify_phi");
  const auto& calc = a.calc();
  const Beta& b = a.beta();
  const Rational& beta = b.value();
  const long n = a.n();

  VerificationReport lower;
  lower.check_id = "phi-lower";
  const Rational head = (1 - t * beta) * fact_ratio(s, t);
  const Rational tail = fact_ratio(s - 2, t - 2);
  Rational sum_capped;
  a.visit(s, [&](const SubcliqueDegrees& sub) {
    const std::uint32_t full = sub.full_mask();
    const auto value = phi_value(calc, sub, full, t, mode);
    sum_capped += value.capped;
    lower.add_instance(value.capped, head + (calc.D_minus(s, sub.degree(full)) - (1 - s * beta)) * tail, label(sub, full));
  });

  VerificationReport rep;
  rep.check_id = "phi";
  rep.param("t", t);
  rep.param("s", s);
  rep.param("recursion", mode == PhiRecursion::Literal ? "literal" : "capped");
  rep.parts.push_back(std::move(lower));

  const Rational ks = count(a, s);
  if (s == p + 1) {
    VerificationReport total;
    total.check_id = "phi-lower-total";
    total.set_sides(sum_capped, ((1 - t * beta) * fact_ratio(p + 1, t) - (1 - (p + 1) * beta) * fact_ratio(p - 1, t - 2)) * ks);
    rep.parts.push_back(std::move(total));
  }

  // Π_{j=i}^{s-1} (1 - jβ)
  auto product = [&](int i) {
    Rational r = 1;
    for (int j = i; j <= s - 1; ++j) r *= 1 - j * beta;
    return r;
  };
  Rational upper = varphi(b, t, s - 1) * s * ks;
  for (int i = t + 1; i <= s - 1; ++i) {
    upper += 2 * ((p + 1) * beta - 1) * fact_ratio(i - 3, t - 2) * count(a, i) * pow(Rational(n), static_cast<unsigned>(s - i)) * product(i);
  }
  upper += ((t + 1) * count(a, t + 1) - b.cap(t) * count(a, t) * n) * pow(Rational(n), static_cast<unsigned>(s - t - 1)) * product(t);
  VerificationReport total_upper;
  total_upper.check_id = "phi-upper-total";
  total_upper.set_sides(upper, sum_capped);
  rep.parts.push_back(std::move(total_upper));
  rep.summarize_parts();
  return rep;
}

VerificationReport verify_phi(const Graph& g, const Beta& beta, int t, int s, PhiRecursion mode) {
  return verify_phi(Analysis(g, beta), t, s, mode);
}

VerificationReport verify_ratio_chain(const Analysis& a, std::span<const std::pair<int, int>> pairs) {
  const int p = a.p();
  a.require_min_degree("verify_ratio_chain");
  const bool clique_free = a.k(p + 2) == 0;
  const long n = a.n();

  VerificationReport rep;
  rep.check_id = "ratio-chain";
  rep.param("k_{p+2}", std::to_string(a.k(p + 2)));
  std::optional<std::optional<bool>> member;
  for (auto [t, s] : pairs) {
    if (t < 2 || s <= t || s > p + 1) {
      throw DomainError("ratio pair " + pair_label(t, s) + " outside 2 <= t < s <= p+1 = " + std::to_string(p + 1));
    }
    const bool p3 = a.beta().in_p3_range() && s <= 4;
    if (!(s == p + 1 || clique_free || p3)) {
      throw DomainError("ratio pair " + pair_label(t, s) + " needs G to be K_{p+2}-free (k_" + std::to_string(p + 2) +
                        " = " + std::to_string(a.k(p + 2)) + ") or s = p+1");
    }
    VerificationReport part;
    part.check_id = "ratio";
    part.param("t", t);
    part.param("s", s);
    part.param("hypothesis", clique_free ? "K_{p+2}-free" : (p3 ? "1/4<=beta<1/3" : "s=p+1"));
    part.set_sides(count(a, s) * g_r(a.beta(), t),
                   count(a, t) * g_r(a.beta(), s) * pow(Rational(n), static_cast<unsigned>(s - t)));
    const bool forces_member = clique_free || p3 || t == 2;
    if (forces_member && part.equality) {
      if (!member) member = membership(a.graph(), a.beta());
      if (!*member) part.notes.push_back("membership undecided: inner graph above the search threshold");
      part.require("equality only for a family member", member->value_or(false));
    }
    rep.parts.push_back(std::move(part));
  }
  rep.summarize_parts();
  return rep;
}

VerificationReport verify_ratio_chain(const Graph& g, const Beta& beta, std::span<const std::pair<int, int>> pairs) {
  return verify_ratio_chain(Analysis(g, beta), pairs);
}

VerificationReport verify_heavy_free_equivalence(const Analysis& a) {
  a.require_min_degree("verify_heavy_free_equivalence");
  VerificationReport rep;
  rep.check_id = "heavy-free-equivalence";
  const bool heavy_free = is_heavy_free(a.graph(), a.beta());
  const bool clique_free = a.k(a.p() + 2) == 0;
  rep.param("heavy_free", heavy_free ? "true" : "false");
  rep.param("k_{p+2}", std::to_string(a.k(a.p() + 2)));
  rep.require("heavy-free iff no (p+2)-clique", heavy_free == clique_free);
  return rep;
}

Suite parse_suite(const std::string& name) {
  if (name == "basic") return Suite::Basic;
  if (name == "p2") return Suite::P2;
  if (name == "p3") return Suite::P3;
  if (name == "phi") return Suite::Phi;
  if (name == "ratio") return Suite::Ratio;
  if (name == "all") return Suite::All;
  throw InputError("unknown suite \"" + name + "\" (expected basic, p2, p3, phi, ratio or all)");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Basic: return "basic";
    case Suite::P2: return "p2";
    case Suite::P3: return "p3";
    case Suite::Phi: return "phi";
    case Suite::Ratio: return "ratio";
    case Suite::All: return "all";
  }
  return "?";
}

std::vector<VerificationReport> run_suite(const Analysis& a, Suite suite) {
  a.require_min_degree("run_suite");
  const int p = a.p();
  const int n = a.n();
  const bool all = suite == Suite::All;
  std::vector<VerificationReport> out;
  if (all || suite == Suite::Basic) {
    for (int s = 3; s <= std::min(p + 2, n); ++s) {
      for (int t = 2; t < s; ++t) {
        out.push_back(verify_subclique_degree_sum(a, s, t, DegreeVariant::D));
        if (s <= p + 1) out.push_back(verify_subclique_degree_sum(a, s, t, DegreeVariant::DMinus));
      }
    }
    for (int t = 2; t <= p; ++t) {
      out.push_back(verify_tilde_nonnegative(a, t));
      out.push_back(verify_tilde_sum_upper(a, t));
    }
    out.push_back(verify_heavy_free_equivalence(a));
  }
  if ((all || suite == Suite::P2) && p == 2) out.push_back(verify_p2_chain(a));
  if ((all || suite == Suite::P3) && a.beta().in_p3_range()) {
    out.push_back(verify_p3_strengthened(a));
    out.push_back(verify_eta_aggregate(a));
  }
  const bool chain_in_suite = suite == Suite::Ratio || (suite == Suite::P2 && p == 2) || (suite == Suite::P3 && a.beta().in_p3_range());
  if (all || suite == Suite::Phi) {
    for (int s = 3; s <= p + 1; ++s)
      for (int t = 2; t < s; ++t) out.push_back(verify_phi(a, t, s));
  }
  if (all || chain_in_suite) {
    const bool every_pair = a.k(p + 2) == 0 || a.beta().in_p3_range();
    std::vector<std::pair<int, int>> pairs;
    for (int s = 3; s <= p + 1; ++s)
      for (int t = 2; t < s; ++t)
        if (every_pair || s == p + 1) pairs.emplace_back(t, s);
    if (!pairs.empty()) out.push_back(verify_ratio_chain(a, pairs));
  }
  return out;
}

}  // namespace cliquemin
