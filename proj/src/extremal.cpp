#include "cliquemin/extremal.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

#include "cliquemin/cliques.hpp"
#include "cliquemin/errors.hpp"

namespace cliquemin {

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Infeasible: return "infeasible";
    case Feasibility::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

long exact_long(const Rational& q, const char* what) {
  if (!is_integer(q)) throw DomainError(std::string(what) + " = " + to_string(q) + " is not an integer");
  return q.get_num().get_si();
}

class InnerSearch {
 public:
  InnerSearch(int n, int d) : n_(n), d_(d), adj_(static_cast<std::size_t>(n), 0), deg_(static_cast<std::size_t>(n), 0),
                              rem_(static_cast<std::size_t>(n), n - 1) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
  }

  void run() { dfs(0, 0); }

  bool found() const { return found_; }
  std::uint64_t best() const { return best_; }
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  std::size_t idx(int v) const { return static_cast<std::size_t>(v); }

  void dfs(std::size_t k, std::uint64_t tri) {
    if (found_ && best_ == 0) return;
    if (k == pairs_.size()) {
      if (!found_ || tri < best_) {
        found_ = true;
        best_ = tri;
        witness_ = adj_;
      }
      return;
    }
    const auto [i, j] = pairs_[k];
    --rem_[idx(i)];
    --rem_[idx(j)];
    // Vertex 0 is adjacent to the last d vertices in the lexicographically
    // least labelling of any d-regular graph.
    const bool forced = i == 0;
    const bool want_edge = j >= n_ - d_;
    if (!forced || !want_edge) {
      if (deg_[idx(i)] + rem_[idx(i)] >= d_ && deg_[idx(j)] + rem_[idx(j)] >= d_) dfs(k + 1, tri);
    }
    if (!forced || want_edge) {
      if (deg_[idx(i)] < d_ && deg_[idx(j)] < d_) {
        const std::uint64_t added = static_cast<std::uint64_t>(std::popcount(adj_[idx(i)] & adj_[idx(j)]));
        if (!found_ || tri + added < best_) {
          adj_[idx(i)] |= 1U << j;
          adj_[idx(j)] |= 1U << i;
          ++deg_[idx(i)];
          ++deg_[idx(j)];
          if (deg_[idx(i)] + rem_[idx(i)] >= d_ && deg_[idx(j)] + rem_[idx(j)] >= d_) dfs(k + 1, tri + added);
          adj_[idx(i)] &= ~(1U << j);
          adj_[idx(j)] &= ~(1U << i);
          --deg_[idx(i)];
          --deg_[idx(j)];
        }
      }
    }
    ++rem_[idx(i)];
    ++rem_[idx(j)];
  }

  int n_;
  int d_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> deg_;
  std::vector<int> rem_;
  bool found_ = false;
  std::uint64_t best_ = 0;
  std::vector<std::uint32_t> witness_;
};

std::uint64_t triangles(const Graph& g) { return g.order() < 3 ? 0 : count_cliques(g, 3).k(3); }

// Whether a d0-regular inner graph with k3 triangles is triangle-minimal.
bool inner_is_minimal(const ExtremalParams& params, std::uint64_t k3, int threshold) {
  if (k3 == 0) return true;
  if (params.feasibility == Feasibility::Feasible) return false;
  if (params.v0_size > threshold) {
    throw RefusalError("deciding triangle-minimality of a " + std::to_string(params.v0_degree) + "-regular graph on " +
                       std::to_string(params.v0_size) + " vertices needs a search above the threshold " +
                       std::to_string(threshold));
  }
  const auto best = k3_reg_min_bruteforce(static_cast<int>(params.v0_size), static_cast<int>(params.v0_degree), threshold);
  return k3 == best.triangles;
}

}  // namespace

ExtremalParams extremal_params(long n, const Beta& beta, int threshold) {
  if (n < 1) throw DomainError("n must be positive");
  const Rational& b = beta.value();
  ExtremalParams out;
  out.n = n;
  out.beta = b;
  out.p = beta.p();
  out.class_size = exact_long(b * n, "beta*n");
  out.delta = n - out.class_size;
  out.v0_size = n - (out.p - 1) * out.class_size;
  out.v0_degree = n - out.p * out.class_size;
  out.parity_ok = n % 2 == 0 || out.delta % 2 == 0;
  if (!out.parity_ok) {
    throw FamilyUndefinedError("n = " + std::to_string(n) + " and (1-beta)n = " + std::to_string(out.delta) +
                               " are both odd");
  }
  if (out.v0_size % 2 == 0 || out.v0_degree == 0 || (out.v0_degree == 2 && out.v0_size >= 4)) {
    out.feasibility = Feasibility::Feasible;
  } else if (out.v0_size <= threshold) {
    const auto best = k3_reg_min_bruteforce(static_cast<int>(out.v0_size), static_cast<int>(out.v0_degree), threshold);
    out.feasibility = best.triangles == 0 ? Feasibility::Feasible : Feasibility::Infeasible;
  }
  return out;
}

Graph triangle_free_regular(int n0, int d0) {
  if (n0 < 1 || d0 < 0) throw UnsupportedError("inner graph needs n0 >= 1 and d0 >= 0");
  if (d0 == 0) return named::empty(n0);
  if (d0 == 2 && n0 >= 4) return named::cycle(n0);
  if (n0 % 2 == 0 && d0 <= n0 / 2) {
    const int h = n0 / 2;
    std::vector<Edge> edges;
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < d0; ++j) edges.emplace_back(i, h + (i + j) % h);
    return Graph::from_edges(n0, edges);
  }
  throw UnsupportedError("no triangle-free " + std::to_string(d0) + "-regular construction on " + std::to_string(n0) +
                         " vertices");
}

InnerMinimum k3_reg_min_bruteforce(int n0, int d0, int threshold) {
  if (n0 < 1 || d0 < 0 || d0 >= n0) {
    throw DomainError("no " + std::to_string(d0) + "-regular graph on " + std::to_string(n0) + " vertices");
  }
  if ((n0 * d0) % 2 != 0) {
    throw DomainError("no " + std::to_string(d0) + "-regular graph on " + std::to_string(n0) +
                      " vertices (odd degree sum)");
  }
  if (n0 > threshold) {
    throw RefusalError("exhaustive regular-graph search on " + std::to_string(n0) + " vertices exceeds threshold " +
                       std::to_string(threshold));
  }
  InnerSearch search(n0, d0);
  search.run();
  if (!search.found()) throw DomainError("no regular graph found");
  std::vector<Edge> edges;
  const auto& rows = search.witness();
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j)
      if ((rows[static_cast<std::size_t>(i)] >> j) & 1U) edges.emplace_back(i, j);
  return {search.best(), Graph::from_edges(n0, edges)};
}

Graph build_extremal(long n, const Beta& beta, int threshold) {
  const auto params = extremal_params(n, beta, threshold);
  const int n0 = static_cast<int>(params.v0_size);
  const int d0 = static_cast<int>(params.v0_degree);
  std::optional<Graph> inner;
  if (params.feasibility == Feasibility::Feasible) {
    try {
      inner = triangle_free_regular(n0, d0);
    } catch (const UnsupportedError&) {
      if (n0 > threshold) throw;
    }
  } else if (params.feasibility == Feasibility::Unknown) {
    throw UnsupportedError("feasibility of (" + std::to_string(n) + ", " + beta.str() +
                           ") is unknown and the inner part is above the search threshold");
  }
  if (!inner) inner = k3_reg_min_bruteforce(n0, d0, threshold).witness;

  std::vector<int> part(static_cast<std::size_t>(n), 0);
  for (long v = n0; v < n; ++v) part[static_cast<std::size_t>(v)] = 1 + static_cast<int>((v - n0) / params.class_size);
  std::vector<Edge> edges = inner->edges();
  for (int u = 0; u < n; ++u)
    for (int v = std::max(u + 1, n0); v < n; ++v)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
  return Graph::from_edges(static_cast<int>(n), edges);
}

bool is_member_of_family(const Graph& g, const Beta& beta, int threshold) {
  const long n = g.order();
  ExtremalParams params;
  try {
    params = extremal_params(n, beta, threshold);
  } catch (const FamilyUndefinedError&) {
    return false;
  }
  if (!is_regular(g, static_cast<int>(params.delta))) return false;

  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<VertexSet> non_nbr(un);
  for (Vertex v = 0; v < n; ++v) non_nbr[static_cast<std::size_t>(v)] = VertexSet::full(un) - g.neighbors(v);

  // Candidate outer classes: sets M with |M| = βn and non_nbr(u) = M for all u in M.
  std::vector<VertexSet> classes;
  std::vector<bool> seen(un, false);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    const auto& m = non_nbr[static_cast<std::size_t>(v)];
    if (static_cast<long>(m.count()) != params.class_size) continue;
    bool twins = true;
    m.for_each([&](Vertex u) { twins = twins && non_nbr[static_cast<std::size_t>(u)] == m; });
    if (!twins) continue;
    m.for_each([&](Vertex u) { seen[static_cast<std::size_t>(u)] = true; });
    classes.push_back(m);
  }
  const int need = params.p - 1;
  if (static_cast<int>(classes.size()) < need) return false;

  // Try every choice of p-1 candidate classes as V1..V_{p-1}.
  std::vector<int> pick(static_cast<std::size_t>(need));
  for (int i = 0; i < need; ++i) pick[static_cast<std::size_t>(i)] = i;
  const int total = static_cast<int>(classes.size());
  while (true) {
    VertexSet v0 = VertexSet::full(un);
    for (int i : pick) v0 -= classes[static_cast<std::size_t>(i)];
    if (static_cast<long>(v0.count()) == params.v0_size) {
      // Regularity of G and the class structure force G[V0] to be
      // (1-pβ)n-regular, so only triangle-minimality remains.
      const std::uint64_t k3 = triangles(induced_subgraph(g, v0));
      if (inner_is_minimal(params, k3, threshold)) return true;
    }
    int i = need - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - need + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < need; ++k) pick[static_cast<std::size_t>(k)] = pick[static_cast<std::size_t>(k - 1)] + 1;
  }
  return false;
}

}  // namespace cliquemin
