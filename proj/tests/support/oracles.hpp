#pragma once

// Independent reference implementations used only by the tests. Nothing
// here calls into the library's clique machinery.

#include <cstdint>
#include <vector>

#include "cliquemin/graph.hpp"
#include "cliquemin/rational.hpp"

namespace oracle {

using cliquemin::Graph;
using cliquemin::Rational;
using cliquemin::Vertex;

// SplitMix64; small, seedable and identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

// G(n, num/den).
Graph random_graph(int n, std::uint64_t num, std::uint64_t den, Rng& rng);

// Random graph with every degree >= delta: start from K_n and delete a
// random sequence of edges, skipping deletions that would break the bound.
Graph random_dense_graph(int n, int delta, Rng& rng);

// k_r for r = 0..n by enumerating every vertex subset (n <= 24).
std::vector<std::uint64_t> subset_clique_counts(const Graph& g);

// All cliques of size s as sorted vertex lists, by subset enumeration.
std::vector<std::vector<Vertex>> subset_cliques(const Graph& g, int s);

// Number of vertices outside `clique` adjacent to all of it.
long common_degree(const Graph& g, const std::vector<Vertex>& clique);

// min(d/n, (p - t + 1)β) computed from scratch.
Rational d_minus(const Graph& g, const std::vector<Vertex>& clique, const Rational& beta, int p);

// p = ceil(1/β) - 1.
int p_of(const Rational& beta);

// Elementary-symmetric count of r-cliques in a member of the family:
// V0 contributes its j-cliques (j = 0, 1, 2 for a triangle-free inner graph)
// and each of the p-1 outer classes at most one vertex.
Rational member_clique_count(long n, const Rational& beta, int r);

// The complete multipartite graph on the given part sizes, built directly.
Graph multipartite(const std::vector<int>& sizes);

}  // namespace oracle
