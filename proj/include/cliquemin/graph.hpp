#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace cliquemin {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// A subset of {0, ..., universe-1} stored as packed 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe)) {}

  static VertexSet full(std::size_t universe);
  /// Throws InputError if a member is outside the universe.
  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);
  static VertexSet of(std::size_t universe, std::span<const Vertex> members);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const {
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (static_cast<std::size_t>(v) % kWordBits)) & 1U;
  }
  void insert(Vertex v) {
    words_[static_cast<std::size_t>(v) / kWordBits] |= std::uint64_t{1} << (static_cast<std::size_t>(v) % kWordBits);
  }
  void erase(Vertex v) {
    words_[static_cast<std::size_t>(v) / kWordBits] &= ~(std::uint64_t{1} << (static_cast<std::size_t>(v) % kWordBits));
  }

  std::size_t count() const noexcept;
  bool empty() const noexcept;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one packed bit row per vertex, so the common
/// neighbourhood of a vertex set is a word-wise AND of rows.
class Graph {
 public:
  /// Throws InputError on an out-of-range endpoint or a self-loop. Duplicate
  /// pairs (in either orientation) are merged.
  static Graph from_edges(int n, std::span<const Edge> edges);
  /// Takes symmetric, loop-free rows; throws InputError otherwise.
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_for(static_cast<std::size_t>(n_)); }

  const VertexSet& neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  int degree(Vertex v) const { return static_cast<int>(rows_[static_cast<std::size_t>(v)].count()); }

  std::size_t edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<VertexSet> rows) : n_(n), rows_(std::move(rows)) {}

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

inline Graph graph_from_edges(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }
inline Graph graph_from_edges(int n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_regular(const Graph& g, int degree);

/// Intersection of the neighbourhoods of the members of s; V(G) for s = ∅.
VertexSet common_neighbors(const Graph& g, const VertexSet& s);

/// Subgraph induced by s, relabelled in ascending index order.
/// Throws InputError for an empty s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);

/// Graph with the same vertices and exactly the non-edges of g.
Graph complement(const Graph& g);

/// Graph on the vertex set {0..n-1} with relabelled adjacency: vertex v of g
/// becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Named graphs used throughout the tests and the CLI.
namespace named {
Graph complete(int n);
Graph cycle(int n);
Graph empty(int n);
/// Complete multipartite graph with the given part sizes, parts laid out
/// consecutively.
Graph complete_multipartite(std::span<const int> part_sizes);
Graph complete_multipartite(std::initializer_list<int> part_sizes);
/// Balanced complete q-partite graph on n vertices (Turán graph T_q(n)).
Graph turan(int n, int q);
Graph petersen();
}  // namespace named

}  // namespace cliquemin
