#include "cliquemin/cliques.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cliquemin/errors.hpp"
#include "cliquemin/parallel.hpp"

namespace cliquemin {

std::uint64_t CliqueStats::k(int t) const {
  if (t < 0 || t > max_order) throw std::out_of_range("clique order " + std::to_string(t) + " was not counted");
  return counts[static_cast<std::size_t>(t)];
}

int CliqueStats::clique_number() const {
  int best = 0;
  for (int t = 1; t <= max_order; ++t)
    if (counts[static_cast<std::size_t>(t)] > 0) best = t;
  return best;
}

namespace {

// Counts cliques extending the current one (of size `depth`, ending at v)
// whose remaining vertices lie in `above`: candidates with index > v.
class Counter {
 public:
  Counter(const Graph& g, int r_max, std::vector<std::uint64_t>& counts)
      : g_(g), r_max_(r_max), words_(g.words_per_row()), counts_(counts),
        buf_(words_ * static_cast<std::size_t>(r_max + 1)) {}

  void root(Vertex v) {
    std::uint64_t* mine = buf_.data();
    const auto row = g_.neighbors(v).words();
    for (std::size_t w = 0; w < words_; ++w) mine[w] = row[w];
    mask_above(mine, v);
    extend(1, mine);
  }

 private:
  static void mask_above(std::uint64_t* set, Vertex v) {
    const std::size_t start = static_cast<std::size_t>(v) + 1;
    const std::size_t word = start / kWordBits;
    for (std::size_t w = 0; w < word; ++w) set[w] = 0;
    if (start % kWordBits != 0) set[word] &= ~((std::uint64_t{1} << (start % kWordBits)) - 1);
  }

  void extend(int depth, const std::uint64_t* cand) {
    ++counts_[static_cast<std::size_t>(depth)];
    if (depth == r_max_) return;
    if (depth + 1 == r_max_) {
      counts_[static_cast<std::size_t>(r_max_)] += detail::popcount({cand, words_});
      return;
    }
    std::uint64_t* next = buf_.data() + static_cast<std::size_t>(depth) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const Vertex u = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        const auto row = g_.neighbors(u).words();
        for (std::size_t x = 0; x < words_; ++x) next[x] = cand[x] & row[x];
        mask_above(next, u);
        const bool any = std::any_of(next, next + words_, [](std::uint64_t x) { return x != 0; });
        if (!any) {
          ++counts_[static_cast<std::size_t>(depth + 1)];
          continue;
        }
        extend(depth + 1, next);
      }
    }
  }

  const Graph& g_;
  int r_max_;
  std::size_t words_;
  std::vector<std::uint64_t>& counts_;
  std::vector<std::uint64_t> buf_;
};

void require_clique(const Graph& g, const std::vector<Vertex>& members) {
  if (!is_clique(g, members)) throw InputError("vertex set is not a clique");
}

}  // namespace

CliqueStats count_cliques(const Graph& g, int r_max) {
  if (r_max < 1) throw InputError("r_max must be at least 1");
  const std::size_t workers = std::min<std::size_t>(worker_count(), static_cast<std::size_t>(g.order()));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(static_cast<std::size_t>(r_max) + 1, 0));
  run_workers(workers, [&](std::size_t w) {
    Counter counter(g, r_max, partial[w]);
    for (Vertex v = static_cast<Vertex>(w); v < g.order(); v += static_cast<Vertex>(workers)) counter.root(v);
  });
  CliqueStats stats;
  stats.n = g.order();
  stats.max_order = r_max;
  stats.counts.assign(static_cast<std::size_t>(r_max) + 1, 0);
  for (const auto& part : partial)
    for (std::size_t t = 0; t < part.size(); ++t) stats.counts[t] += part[t];
  stats.counts[0] = 1;
  return stats;
}

std::size_t clique_degree(const Graph& g, const VertexSet& t) {
  require_clique(g, t.members());
  return common_neighbors(g, t).count();
}

SubcliqueDegrees::SubcliqueDegrees(const Graph& g, std::span<const Vertex> clique)
    : vertices_(clique.begin(), clique.end()) {
  if (vertices_.size() > 20) throw InputError("subclique table limited to cliques of at most 20 vertices");
  const std::size_t masks = std::size_t{1} << vertices_.size();
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> common(masks * words);
  auto all = VertexSet::full(static_cast<std::size_t>(g.order()));
  std::copy(all.words().begin(), all.words().end(), common.begin());
  degrees_.assign(masks, 0);
  degrees_[0] = static_cast<std::size_t>(g.order());
  for (std::size_t m = 1; m < masks; ++m) {
    const int low = std::countr_zero(m);
    const std::size_t rest = m & (m - 1);
    const auto row = g.neighbors(vertices_[static_cast<std::size_t>(low)]).words();
    std::uint64_t* mine = common.data() + m * words;
    const std::uint64_t* parent = common.data() + rest * words;
    std::size_t c = 0;
    for (std::size_t w = 0; w < words; ++w) {
      mine[w] = parent[w] & row[w];
      c += static_cast<std::size_t>(std::popcount(mine[w]));
    }
    degrees_[m] = c;
  }
}

std::vector<Vertex> SubcliqueDegrees::vertices(std::uint32_t mask) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if ((mask >> i) & 1U) out.push_back(vertices_[i]);
  return out;
}

CliqueCalculus::CliqueCalculus(const Graph& g, Beta beta) : g_(&g), beta_(std::move(beta)) {
  const int n = g.order();
  meets_min_degree_ = Rational(min_degree(g)) >= beta_.min_degree(n);
  d_.reserve(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) d_.emplace_back(fraction(d, n));
  for (auto& q : d_) q.canonicalize();
  const int t_max = std::min(beta_.p() + 1, n);
  minus_.resize(static_cast<std::size_t>(t_max) + 1);
  plus_.resize(static_cast<std::size_t>(t_max) + 1);
  for (int t = 1; t <= t_max; ++t) {
    const Rational cap = beta_.cap(t);
    auto& lo = minus_[static_cast<std::size_t>(t)];
    auto& hi = plus_[static_cast<std::size_t>(t)];
    lo.reserve(d_.size());
    hi.reserve(d_.size());
    for (const auto& D : d_) {
      lo.push_back(D < cap ? D : cap);
      hi.push_back(D - lo.back());
    }
  }
}

void CliqueCalculus::require_min_degree(const char* who) const {
  if (!meets_min_degree_) {
    throw DomainError(std::string(who) + ": minimum degree " + std::to_string(min_degree(*g_)) + " is below (1-β)n = " +
                      to_string(beta_.min_degree(g_->order())));
  }
}

const Rational& CliqueCalculus::D_minus(int t, std::size_t d) const {
  if (t < 1 || t > beta_.p() + 1) {
    throw DomainError("D_- is defined for clique orders 1..p+1 = " + std::to_string(beta_.p() + 1) + ", got " +
                      std::to_string(t));
  }
  if (static_cast<std::size_t>(t) >= minus_.size()) throw InputError("no clique of order " + std::to_string(t) + " fits in the graph");
  return minus_[static_cast<std::size_t>(t)][d];
}

const Rational& CliqueCalculus::D_plus(int t, std::size_t d) const {
  D_minus(t, d);
  return plus_[static_cast<std::size_t>(t)][d];
}

Rational CliqueCalculus::sum_D_minus(const SubcliqueDegrees& sub, std::uint32_t mask, int t) const {
  Rational sum;
  for_each_submask_of_size(mask, t, [&](std::uint32_t m) { sum += D_minus(t, sub.degree(m)); });
  return sum;
}

Rational CliqueCalculus::sum_D(const SubcliqueDegrees& sub, std::uint32_t mask, int t) const {
  Rational sum;
  for_each_submask_of_size(mask, t, [&](std::uint32_t m) { sum += D(sub.degree(m)); });
  return sum;
}

CliqueDegreeRecord degree_record(const Graph& g, const VertexSet& t, const Beta& beta) {
  const auto members = t.members();
  if (members.empty()) throw InputError("clique must be non-empty");
  require_clique(g, members);
  const int order = static_cast<int>(members.size());
  if (order > beta.p() + 1) {
    throw DomainError("clique of order " + std::to_string(order) + " exceeds p+1 = " + std::to_string(beta.p() + 1));
  }
  CliqueDegreeRecord rec;
  rec.clique = members;
  rec.d = common_neighbors(g, t).count();
  rec.D = Rational(static_cast<long>(rec.d), g.order());
  rec.D.canonicalize();
  const Rational cap = beta.cap(order);
  rec.D_minus = rec.D < cap ? rec.D : cap;
  rec.D_plus = rec.D - rec.D_minus;
  rec.heavy = rec.D_plus > 0;
  return rec;
}

bool is_heavy_free(const Graph& g, const Beta& beta) {
  CliqueCalculus calc(g, beta);
  calc.require_min_degree("is_heavy_free");
  const int t_max = std::min(beta.p() + 1, g.order());
  bool heavy_free = true;
  for_each_clique(g, t_max, [&](std::span<const Vertex> c, std::span<const std::uint64_t> common) {
    if (calc.heavy(static_cast<int>(c.size()), detail::popcount(common))) heavy_free = false;
    return heavy_free;
  });
  return heavy_free;
}

Rational widetilde_D(const CliqueCalculus& calc, const SubcliqueDegrees& sub, std::uint32_t mask) {
  const int t = std::popcount(mask) - 1;
  if (t < 2 || t > calc.p()) {
    throw DomainError("D~ needs a (t+1)-clique with 2 <= t <= p = " + std::to_string(calc.p()) + ", got t = " +
                      std::to_string(t));
  }
  const Rational& beta = calc.beta().value();
  return calc.sum_D_minus(sub, mask, t) - (2 - (t + 1) * beta + (t - 1) * calc.D_minus(t + 1, sub.degree(mask)));
}

Rational widetilde_D(const Graph& g, const VertexSet& s, const Beta& beta) {
  const auto members = s.members();
  require_clique(g, members);
  CliqueCalculus calc(g, beta);
  SubcliqueDegrees sub(g, members);
  return widetilde_D(calc, sub, sub.full_mask());
}

Rational eta_coefficient(const Beta& beta) {
  const Rational& b = beta.value();
  return (4 * b - 1) / (29 - 75 * b);
}

Rational eta(const CliqueCalculus& calc, const SubcliqueDegrees& sub, std::uint32_t mask) {
  if (!calc.beta().in_p3_range()) throw DomainError("eta is defined for 1/4 <= beta < 1/3 only");
  if (std::popcount(mask) != 4) throw DomainError("eta is defined on 4-cliques");
  const Rational& beta = calc.beta().value();
  Rational correction;
  for_each_submask_of_size(mask, 3, [&](std::uint32_t m) {
    const Rational& plus = calc.D_plus(3, sub.degree(m));
    if (plus > 0) correction += plus / (plus + beta);
  });
  return widetilde_D(calc, sub, mask) - eta_coefficient(calc.beta()) * correction;
}

Rational eta(const Graph& g, const VertexSet& s, const Beta& beta) {
  if (!beta.in_p3_range()) throw DomainError("eta is defined for 1/4 <= beta < 1/3 only");
  const auto members = s.members();
  require_clique(g, members);
  CliqueCalculus calc(g, beta);
  SubcliqueDegrees sub(g, members);
  return eta(calc, sub, sub.full_mask());
}

Rational eta_tilde(const Graph& g, const VertexSet& s, const Beta& beta) {
  const Rational value = eta(g, s, beta);
  const std::size_t d = common_neighbors(g, s).count();
  if (d == 0) throw DomainError("eta~ is undefined when D(S) = 0");
  return value * g.order() / Rational(static_cast<long>(d));
}

BadCliqueConstants bad_clique_constants(const Beta& beta) {
  const Rational& b = beta.value();
  BadCliqueConstants c;
  c.epsilon_denominator = 150 * b * b - 137 * b + 30;
  c.epsilon = (4 * b - 1) / c.epsilon_denominator;
  c.Delta = (1 - 3 * b) * (1 + c.epsilon);
  return c;
}

BadFourClique diagnose_four_clique(const CliqueCalculus& calc, const SubcliqueDegrees& sub,
                                   const BadCliqueConstants& constants) {
  const std::uint32_t full = sub.full_mask();
  BadFourClique out;
  out.clique = sub.vertices(full);
  out.eta = eta(calc, sub, full);
  out.D = calc.D(sub.degree(full));
  for_each_submask_of_size(full, 2, [&](std::uint32_t m) {
    if (calc.heavy(2, sub.degree(m))) ++out.heavy_edges;
  });
  int light = 0;
  for_each_submask_of_size(full, 3, [&](std::uint32_t m) {
    if (calc.heavy(3, sub.degree(m))) {
      ++out.heavy_triangles;
    } else {
      ++light;
      out.non_heavy_triangle_D_sum += calc.D(sub.degree(m));
    }
  });
  out.one_heavy_edge_two_heavy_triangles = out.heavy_edges == 1 && out.heavy_triangles == 2;
  out.degree_in_open_range = out.D > 0 && out.D < constants.Delta;
  out.light_triangles_below_two_delta = light == 2 && out.non_heavy_triangle_D_sum < 2 * constants.Delta;
  return out;
}

std::vector<BadFourClique> classify_bad_4cliques(const Graph& g, const Beta& beta) {
  if (!beta.in_p3_range()) throw DomainError("bad 4-cliques are defined for 1/4 <= beta < 1/3 only");
  CliqueCalculus calc(g, beta);
  calc.require_min_degree("classify_bad_4cliques");
  const auto constants = bad_clique_constants(beta);
  std::vector<BadFourClique> out;
  for_each_clique_of_size(g, 4, [&](std::span<const Vertex> c, std::span<const std::uint64_t>) {
    SubcliqueDegrees sub(g, c);
    if (eta(calc, sub, sub.full_mask()) < 0) out.push_back(diagnose_four_clique(calc, sub, constants));
  });
  return out;
}

}  // namespace cliquemin
