#include "cliquemin/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "cliquemin/errors.hpp"
#include "cliquemin/extremal.hpp"
#include "cliquemin/formulas.hpp"
#include "cliquemin/graph_io.hpp"
#include "cliquemin/parallel.hpp"

namespace cliquemin {

std::string to_string(DegreeMode mode) {
  return mode == DegreeMode::MinDegreeExactly ? "min-degree-exactly" : "min-degree-at-least";
}

namespace {

using Mask = std::uint32_t;

Graph graph_from_masks(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((adj[static_cast<std::size_t>(i)] >> j) & 1U) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

struct Branch {
  bool found = false;
  std::uint64_t best = 0;
  std::vector<Graph> witnesses;
  std::uint64_t scanned = 0;
};

void add_unique(std::vector<Graph>& list, Graph g) {
  for (const auto& w : list)
    if (are_isomorphic(w, g)) return;
  list.push_back(std::move(g));
}

class MinCliqueSearch {
 public:
  MinCliqueSearch(int n, int delta, int r, DegreeMode mode)
      : n_(n), delta_(delta), r_(r), mode_(mode), adj_(static_cast<std::size_t>(n), 0),
        deg_(static_cast<std::size_t>(n), 0), rem_(static_cast<std::size_t>(n), n - 1) {
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
  }

  // Explores every completion of the given row of vertex 0.
  Branch run(Mask row0) {
    branch_ = Branch{};
    std::fill(adj_.begin(), adj_.end(), 0);
    std::fill(deg_.begin(), deg_.end(), 0);
    std::fill(rem_.begin(), rem_.end(), n_ - 1);
    rem_[0] = 0;
    for (int j = 1; j < n_; ++j) {
      --rem_[idx(j)];
      if ((row0 >> (j - 1)) & 1U) {
        adj_[0] |= Mask{1} << j;
        adj_[idx(j)] |= 1U;
        ++deg_[0];
        ++deg_[idx(j)];
      }
    }
    if (deg_[0] < delta_) return branch_;
    std::uint64_t count = r_ == 1 ? static_cast<std::uint64_t>(n_) : (r_ == 2 ? static_cast<std::uint64_t>(deg_[0]) : 0);
    if (!row_complete(0)) return branch_;
    dfs(0, count);
    return branch_;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  // Number of k-cliques inside `within` in the current partial graph.
  std::uint64_t cliques_in(Mask within, int k) const {
    if (k == 0) return 1;
    std::uint64_t total = 0;
    while (within) {
      const int v = std::countr_zero(within);
      within &= within - 1;
      total += cliques_in(within & adj_[idx(v)], k - 1);
    }
    return total;
  }

  bool row_complete(int i) const {
    if (i > 0 && deg_[idx(i)] > deg_[idx(i - 1)]) return false;
    for (int v = i + 1; v < n_; ++v)
      if (deg_[idx(v)] > deg_[idx(i)]) return false;
    return true;
  }

  bool degrees_ok(int v) const {
    if (deg_[idx(v)] + rem_[idx(v)] < delta_) return false;
    if (mode_ == DegreeMode::MinDegreeExactly && v == n_ - 1 && deg_[idx(v)] > delta_) return false;
    return true;
  }

  void dfs(std::size_t k, std::uint64_t count) {
    if (k == pairs_.size()) {
      if (mode_ == DegreeMode::MinDegreeExactly && deg_[idx(n_ - 1)] != delta_) return;
      ++branch_.scanned;
      if (!branch_.found || count < branch_.best) {
        branch_.found = true;
        branch_.best = count;
        branch_.witnesses.clear();
      }
      if (count == branch_.best) add_unique(branch_.witnesses, graph_from_masks(adj_));
      return;
    }
    const auto [i, j] = pairs_[k];
    --rem_[idx(i)];
    --rem_[idx(j)];
    const bool closes_row = j == n_ - 1;
    if (degrees_ok(i) && degrees_ok(j) && (!closes_row || row_complete(i))) dfs(k + 1, count);

    const std::uint64_t added = r_ < 2 ? 0 : cliques_in(adj_[idx(i)] & adj_[idx(j)], r_ - 2);
    if (!branch_.found || count + added <= branch_.best) {
      adj_[idx(i)] |= Mask{1} << j;
      adj_[idx(j)] |= Mask{1} << i;
      ++deg_[idx(i)];
      ++deg_[idx(j)];
      if (degrees_ok(i) && degrees_ok(j) && (!closes_row || row_complete(i))) dfs(k + 1, count + added);
      adj_[idx(i)] &= ~(Mask{1} << j);
      adj_[idx(j)] &= ~(Mask{1} << i);
      --deg_[idx(i)];
      --deg_[idx(j)];
    }
    ++rem_[idx(i)];
    ++rem_[idx(j)];
  }

  int n_;
  int delta_;
  int r_;
  DegreeMode mode_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Mask> adj_;
  std::vector<int> deg_;
  std::vector<int> rem_;
  Branch branch_;
};

// Colour refinement on the disjoint union of g and h; returns the stable
// colours of g's vertices followed by h's.
std::vector<int> refine(const Graph& g, const Graph& h) {
  const int n = g.order();
  auto adjacent = [&](int a, int b) {
    if (a < n) return g.adjacent(a, b);
    return h.adjacent(a - n, b - n);
  };
  std::vector<int> colour(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < n; ++v) {
    colour[static_cast<std::size_t>(v)] = g.degree(v);
    colour[static_cast<std::size_t>(n + v)] = h.degree(v);
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(colour.size());
    for (int v = 0; v < 2 * n; ++v) {
      std::vector<int> around;
      const int base = v < n ? 0 : n;
      for (int u = base; u < base + n; ++u)
        if (u != v && adjacent(v, u)) around.push_back(colour[static_cast<std::size_t>(u)]);
      std::sort(around.begin(), around.end());
      auto key = std::make_pair(colour[static_cast<std::size_t>(v)], std::move(around));
      auto it = ids.try_emplace(std::move(key), static_cast<int>(ids.size())).first;
      next[static_cast<std::size_t>(v)] = it->second;
    }
    colour = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return colour;
}

class IsoMatcher {
 public:
  IsoMatcher(const Graph& g, const Graph& h, std::vector<int> colour)
      : g_(g), h_(h), n_(g.order()), colour_(std::move(colour)), map_(static_cast<std::size_t>(n_), -1),
        used_(static_cast<std::size_t>(n_), false) {
    std::map<int, int> freq;
    for (int v = 0; v < n_; ++v) ++freq[colour_[static_cast<std::size_t>(v)]];
    for (int v = 0; v < n_; ++v) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return freq[colour_[static_cast<std::size_t>(a)]] < freq[colour_[static_cast<std::size_t>(b)]];
    });
  }

  bool match(std::size_t k = 0) {
    if (k == order_.size()) return true;
    const int v = order_[k];
    const int c = colour_[static_cast<std::size_t>(v)];
    for (int u = 0; u < n_; ++u) {
      if (used_[static_cast<std::size_t>(u)] || colour_[static_cast<std::size_t>(n_ + u)] != c) continue;
      bool consistent = true;
      for (std::size_t q = 0; q < k && consistent; ++q) {
        const int w = order_[q];
        consistent = g_.adjacent(v, w) == h_.adjacent(u, map_[static_cast<std::size_t>(w)]);
      }
      if (!consistent) continue;
      map_[static_cast<std::size_t>(v)] = u;
      used_[static_cast<std::size_t>(u)] = true;
      if (match(k + 1)) return true;
      used_[static_cast<std::size_t>(u)] = false;
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

 private:
  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

}  // namespace

SearchResult brute_force_k_r(int n, int delta, int r, const SearchOptions& options) {
  if (n < 1 || r < 1) throw DomainError("brute force needs n >= 1 and r >= 1");
  if (delta < 0 || delta >= n) throw DomainError("no graph on " + std::to_string(n) + " vertices has minimum degree " +
                                                 std::to_string(delta));
  if (n > options.threshold || n > 31) {
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    throw RefusalError("exhaustive search on n = " + std::to_string(n) + " exceeds threshold " +
                       std::to_string(options.threshold) + " (search space 2^" + std::to_string(pairs) + " graphs)");
  }
  SearchResult out;
  out.n = n;
  out.delta = delta;
  out.r = r;
  out.mode = options.mode;

  if (n == 1) {
    out.minimum = r == 1 ? 1 : 0;
    out.witnesses.push_back(named::empty(1));
    out.graphs_scanned = 1;
    return out;
  }

  const std::size_t tasks = std::size_t{1} << (n - 1);
  std::vector<Branch> branches(tasks);
  const std::size_t workers = std::min(worker_count(), tasks);
  run_workers(workers, [&](std::size_t w) {
    MinCliqueSearch search(n, delta, r, options.mode);
    for (std::size_t t = w; t < tasks; t += workers) branches[t] = search.run(static_cast<Mask>(t));
  });

  bool found = false;
  for (const auto& b : branches) {
    out.graphs_scanned += b.scanned;
    if (!b.found) continue;
    if (!found || b.best < out.minimum) {
      found = true;
      out.minimum = b.best;
      out.witnesses.clear();
    }
    if (b.best == out.minimum)
      for (const auto& w : b.witnesses) add_unique(out.witnesses, w);
  }
  if (!found) throw DomainError("no graph matches the degree condition");
  std::sort(out.witnesses.begin(), out.witnesses.end(),
            [](const Graph& a, const Graph& b) { return serialize_graph6(a) < serialize_graph6(b); });
  return out;
}

nlohmann::json to_json(const SearchResult& result) {
  nlohmann::json j;
  j["n"] = result.n;
  j["delta"] = result.delta;
  j["r"] = result.r;
  j["interpretation"] = to_string(result.mode);
  j["minimum"] = result.minimum;
  j["graphs_scanned"] = result.graphs_scanned;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : result.witnesses) j["witnesses"].push_back(serialize_graph6(w));
  return j;
}

Graph thin_to_min_degree(const Graph& start, int delta, std::uint64_t seed, std::size_t max_removals) {
  const int n = start.order();
  if (delta < 0 || delta >= n) throw DomainError("thinning needs 0 <= delta < n");
  if (min_degree(start) < delta) throw DomainError("starting graph has minimum degree below delta");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : start.edges()) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  std::vector<Edge> removable;
  for (std::size_t removed = 0; removed < max_removals; ++removed) {
    removable.clear();
    for (int u = 0; u < n; ++u) {
      if (deg[static_cast<std::size_t>(u)] <= delta) continue;
      for (int v = u + 1; v < n; ++v)
        if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] > delta)
          removable.emplace_back(u, v);
    }
    if (removable.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, removable.size() - 1);
    const auto [u, v] = removable[pick(rng)];
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = false;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = false;
    --deg[static_cast<std::size_t>(u)];
    --deg[static_cast<std::size_t>(v)];
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_graph_min_degree(int n, int delta, std::uint64_t seed, std::size_t max_removals) {
  if (n < 1) throw InputError("graph order must be at least 1");
  if (delta < 0 || delta >= n) throw DomainError("random graph needs 0 <= delta < n");
  return thin_to_min_degree(named::complete(n), delta, seed, max_removals);
}

Graph random_partite_graph(int n, int parts, int max_part, std::uint64_t seed) {
  if (n < 1 || parts < 1) throw InputError("random partite graph needs n >= 1 and parts >= 1");
  if (static_cast<long>(parts) * max_part < n) throw DomainError("parts * max_part is below n");
  std::mt19937_64 rng(seed);
  std::vector<int> size(static_cast<std::size_t>(parts), 0);
  std::vector<int> part(static_cast<std::size_t>(n));
  std::vector<int> open;
  for (int v = 0; v < n; ++v) {
    open.clear();
    for (int i = 0; i < parts; ++i)
      if (size[static_cast<std::size_t>(i)] < max_part) open.push_back(i);
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    const int i = open[pick(rng)];
    part[static_cast<std::size_t>(v)] = i;
    ++size[static_cast<std::size_t>(i)];
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto dg = g.degree_sequence();
  auto dh = h.degree_sequence();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  auto colour = refine(g, h);
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> cg(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<int> ch(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
  std::sort(cg.begin(), cg.end());
  std::sort(ch.begin(), ch.end());
  if (cg != ch) return false;
  IsoMatcher matcher(g, h, std::move(colour));
  return matcher.match();
}

VerificationReport check_extremal_uniqueness(int n, const Beta& beta, int r, const SearchOptions& options) {
  const Rational delta_q = beta.min_degree(n);
  if (!is_integer(delta_q)) throw DomainError("(1-beta)n = " + to_string(delta_q) + " is not an integer");
  const int delta = static_cast<int>(delta_q.get_num().get_si());
  const auto result = brute_force_k_r(n, delta, r, options);
  const Rational target = g_r(beta, r) * pow(Rational(n), static_cast<unsigned>(r));

  VerificationReport rep;
  rep.check_id = "extremal-uniqueness";
  rep.param("n", n);
  rep.param("beta", beta.str());
  rep.param("r", r);
  rep.param("delta", delta);
  rep.param("interpretation", to_string(result.mode));
  rep.param("minimum", static_cast<long>(result.minimum));
  rep.param("graphs_scanned", static_cast<long>(result.graphs_scanned));
  rep.set_sides(to_rational(result.minimum), target);

  bool feasible = false;
  std::string status;
  try {
    const auto params = extremal_params(n, beta);
    feasible = params.feasibility == Feasibility::Feasible;
    status = to_string(params.feasibility);
  } catch (const FamilyUndefinedError&) {
    status = "family undefined";
  }
  rep.param("feasibility", status);
  rep.require("minimum equals g_r(beta)n^r exactly when (n,beta) is feasible", rep.equality == feasible);
  if (rep.equality) {
    bool all_members = true;
    for (const auto& w : result.witnesses) {
      const bool member = is_member_of_family(w, beta);
      all_members = all_members && member;
      if (!member) rep.add_witness("non-member " + serialize_graph6(w));
    }
    rep.require("every extremal graph is a family member", all_members);
  }
  for (const auto& w : result.witnesses) rep.notes.push_back("witness " + serialize_graph6(w));
  return rep;
}

}  // namespace cliquemin
