#include "oracles.hpp"

#include <algorithm>
#include <bit>

namespace oracle {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

Graph random_graph(int n, std::uint64_t num, std::uint64_t den, Rng& rng) {
  std::vector<cliquemin::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(num, den)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_dense_graph(int n, int delta, Rng& rng) {
  std::vector<cliquemin::Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);
  std::vector<int> deg(static_cast<std::size_t>(n), n - 1);
  std::vector<bool> keep(pairs.size(), true);
  const std::size_t attempts = rng.below(pairs.size() + 1);
  for (std::size_t i = 0; i < attempts; ++i) {
    auto [u, v] = pairs[i];
    if (deg[static_cast<std::size_t>(u)] > delta && deg[static_cast<std::size_t>(v)] > delta) {
      keep[i] = false;
      --deg[static_cast<std::size_t>(u)];
      --deg[static_cast<std::size_t>(v)];
    }
  }
  std::vector<cliquemin::Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (keep[i]) edges.push_back(pairs[i]);
  return Graph::from_edges(n, edges);
}

namespace {

bool subset_is_clique(const Graph& g, std::uint32_t mask) {
  for (std::uint32_t a = mask; a; a &= a - 1) {
    const int u = std::countr_zero(a);
    for (std::uint32_t b = a & (a - 1); b; b &= b - 1) {
      if (!g.adjacent(u, std::countr_zero(b))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> subset_clique_counts(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> k(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
    if (subset_is_clique(g, mask)) ++k[static_cast<std::size_t>(std::popcount(mask))];
  return k;
}

std::vector<std::vector<Vertex>> subset_cliques(const Graph& g, int s) {
  std::vector<std::vector<Vertex>> out;
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) != s || !subset_is_clique(g, mask)) continue;
    std::vector<Vertex> c;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) c.push_back(v);
    out.push_back(c);
  }
  return out;
}

long common_degree(const Graph& g, const std::vector<Vertex>& clique) {
  long d = 0;
  for (int v = 0; v < g.order(); ++v) {
    bool all = std::find(clique.begin(), clique.end(), v) == clique.end();
    for (Vertex u : clique) all = all && g.adjacent(u, v);
    if (all) ++d;
  }
  return d;
}

Rational d_minus(const Graph& g, const std::vector<Vertex>& clique, const Rational& beta, int p) {
  Rational D(common_degree(g, clique), g.order());
  D.canonicalize();
  const Rational cap = (p - static_cast<int>(clique.size()) + 1) * beta;
  return D < cap ? D : cap;
}

int p_of(const Rational& beta) {
  int p = 0;
  while (Rational(p + 1) * beta < 1) ++p;
  return p;
}

Rational member_clique_count(long n, const Rational& beta, int r) {
  const int p = p_of(beta);
  const Rational b = beta * n;
  const Rational n0 = (1 - (p - 1) * beta) * n;
  const Rational d0 = (1 - p * beta) * n;
  // e_j(b, ..., b) over p-1 equal classes, built by the usual recurrence.
  std::vector<Rational> e(static_cast<std::size_t>(p), Rational(0));
  e[0] = 1;
  for (int cls = 0; cls < p - 1; ++cls)
    for (int j = p - 1; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * b;
  const Rational inner[3] = {Rational(1), n0, n0 * d0 / 2};
  Rational total;
  for (int j = 0; j <= 2; ++j) {
    const int outer = r - j;
    if (outer >= 0 && outer <= p - 1) total += inner[j] * e[static_cast<std::size_t>(outer)];
  }
  return total;
}

Graph multipartite(const std::vector<int>& sizes) {
  std::vector<int> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) part.insert(part.end(), static_cast<std::size_t>(sizes[i]), static_cast<int>(i));
  std::vector<cliquemin::Edge> edges;
  for (std::size_t u = 0; u < part.size(); ++u)
    for (std::size_t v = u + 1; v < part.size(); ++v)
      if (part[u] != part[v]) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return Graph::from_edges(static_cast<int>(part.size()), edges);
}

}  // namespace oracle
