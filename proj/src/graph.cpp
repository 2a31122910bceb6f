#include "cliquemin/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cliquemin/errors.hpp"

namespace cliquemin {

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % kWordBits != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % kWordBits)) - 1;
  }
  return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
  return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= universe) {
      throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe));
    }
    s.insert(v);
  }
  return s;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw InputError("graph order must be at least 1");
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    rows[static_cast<std::size_t>(u)].insert(v);
    rows[static_cast<std::size_t>(v)].insert(u);
  }
  return Graph(n, std::move(rows));
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw InputError("graph order must be at least 1");
  for (int u = 0; u < n; ++u) {
    const auto& row = rows[static_cast<std::size_t>(u)];
    if (row.universe() != rows.size()) throw InputError("adjacency row has the wrong width");
    if (row.contains(u)) throw InputError("self-loop at vertex " + std::to_string(u));
    bool symmetric = true;
    row.for_each([&](Vertex v) { symmetric = symmetric && rows[static_cast<std::size_t>(v)].contains(u); });
    if (!symmetric) throw InputError("adjacency rows are not symmetric at vertex " + std::to_string(u));
  }
  return Graph(n, std::move(rows));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    rows_[static_cast<std::size_t>(u)].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
  return d;
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_regular(const Graph& g, int degree) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
  VertexSet out = VertexSet::full(static_cast<std::size_t>(g.order()));
  s.for_each([&](Vertex v) { out &= g.neighbors(v); });
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("induced subgraph of an empty vertex set");
  const auto members = s.members();
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    g.neighbors(members[i]).for_each([&](Vertex v) {
      int j = index[static_cast<std::size_t>(v)];
      if (j > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), j);
    });
  }
  return Graph::from_edges(static_cast<int>(members.size()), edges);
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[j] < 0 || vertices[j] >= g.order()) return false;
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(g.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) throw InputError("permutation has the wrong length");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph::from_edges(g.order(), edges);
}

namespace named {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph empty(int n) { return Graph::from_edges(n, std::span<const Edge>{}); }

Graph complete_multipartite(std::span<const int> part_sizes) {
  const int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  std::vector<int> part(static_cast<std::size_t>(n));
  int v = 0;
  for (std::size_t i = 0; i < part_sizes.size(); ++i)
    for (int k = 0; k < part_sizes[i]; ++k) part[static_cast<std::size_t>(v++)] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part[static_cast<std::size_t>(a)] != part[static_cast<std::size_t>(b)]) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

Graph complete_multipartite(std::initializer_list<int> part_sizes) {
  return complete_multipartite(std::span<const int>(part_sizes.begin(), part_sizes.size()));
}

Graph turan(int n, int q) {
  std::vector<int> sizes(static_cast<std::size_t>(q), n / q);
  for (int i = 0; i < n % q; ++i) ++sizes[static_cast<std::size_t>(i)];
  return complete_multipartite(sizes);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, edges);
}

}  // namespace named

}  // namespace cliquemin
