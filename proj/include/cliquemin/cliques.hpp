#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "cliquemin/graph.hpp"
#include "cliquemin/rational.hpp"

namespace cliquemin {

/// Clique counts k_1, ..., k_{max_order} of a graph.
struct CliqueStats {
  int n = 0;
  int max_order = 0;
  /// counts[t] = k_t for 1 <= t <= max_order; counts[0] = 1 (the empty clique).
  std::vector<std::uint64_t> counts;

  /// k_t. Throws std::out_of_range for t > max_order.
  std::uint64_t k(int t) const;
  /// Largest t <= max_order with k_t > 0.
  int clique_number() const;
};

/// Exact k_t for t = 1..r_max by ascending-index candidate-set recursion.
/// Top-level vertices are split across worker threads (see parallel.hpp);
/// per-worker counts are summed, so the result does not depend on the split.
CliqueStats count_cliques(const Graph& g, int r_max);

namespace detail {

template <class Visitor>
class CliqueWalker {
 public:
  CliqueWalker(const Graph& g, int max_size, Visitor& visit)
      : g_(g), max_size_(max_size), words_(g.words_per_row()), visit_(visit) {
    clique_.resize(static_cast<std::size_t>(max_size));
    common_.assign(words_ * static_cast<std::size_t>(max_size + 1), 0);
    auto all = VertexSet::full(static_cast<std::size_t>(g.order()));
    std::copy(all.words().begin(), all.words().end(), common_.begin());
  }

  // Returns false when the visitor asked to stop.
  bool run(Vertex first_lo = 0, Vertex first_hi = -1, Vertex stride = 1) {
    if (max_size_ < 1) return true;
    if (first_hi < 0) first_hi = g_.order();
    for (Vertex v = first_lo; v < first_hi; v += stride) {
      if (!descend(0, v)) return false;
    }
    return true;
  }

 private:
  bool descend(int depth, Vertex v) {
    clique_[static_cast<std::size_t>(depth)] = v;
    const std::uint64_t* parent = common_.data() + static_cast<std::size_t>(depth) * words_;
    std::uint64_t* mine = common_.data() + static_cast<std::size_t>(depth + 1) * words_;
    const auto row = g_.neighbors(v).words();
    for (std::size_t w = 0; w < words_; ++w) mine[w] = parent[w] & row[w];

    std::span<const Vertex> clique(clique_.data(), static_cast<std::size_t>(depth + 1));
    std::span<const std::uint64_t> common(mine, words_);
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, std::span<const Vertex>, std::span<const std::uint64_t>>, bool>) {
      if (!visit_(clique, common)) return false;
    } else {
      visit_(clique, common);
    }
    if (depth + 1 >= max_size_) return true;

    // Candidates: common neighbours with index above v.
    const std::size_t start = static_cast<std::size_t>(v) + 1;
    for (std::size_t w = start / kWordBits; w < words_; ++w) {
      std::uint64_t bits = mine[w];
      if (w == start / kWordBits) bits &= start % kWordBits == 0 ? ~std::uint64_t{0} : ~((std::uint64_t{1} << (start % kWordBits)) - 1);
      while (bits) {
        const Vertex u = static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        if (!descend(depth + 1, u)) return false;
      }
    }
    return true;
  }

  const Graph& g_;
  int max_size_;
  std::size_t words_;
  Visitor& visit_;
  std::vector<Vertex> clique_;
  std::vector<std::uint64_t> common_;
};

inline std::size_t popcount(std::span<const std::uint64_t> words) {
  std::size_t c = 0;
  for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace detail

/// Calls visit(vertices, common) for every clique with 1..max_size vertices,
/// in a fixed order: vertices ascending, cliques in lexicographic order of
/// their vertex lists. `common` holds the common neighbourhood of the clique,
/// so its popcount is d(T). A visitor returning bool stops the walk on false.
template <class Visitor>
void for_each_clique(const Graph& g, int max_size, Visitor&& visit) {
  detail::CliqueWalker<std::remove_reference_t<Visitor>> walker(g, max_size, visit);
  walker.run();
}

/// Calls visit(vertices, common) only for cliques with exactly `size` vertices.
template <class Visitor>
void for_each_clique_of_size(const Graph& g, int size, Visitor&& visit) {
  for_each_clique(g, size, [&](std::span<const Vertex> c, std::span<const std::uint64_t> common) {
    if (static_cast<int>(c.size()) == size) visit(c, common);
  });
}

/// d(T): number of (|T|+1)-cliques containing T. Throws InputError if T is
/// not a clique of g.
std::size_t clique_degree(const Graph& g, const VertexSet& t);

/// Degree of every subclique of one clique S (|S| <= 20), indexed by the bit
/// mask selecting vertices of S. The empty mask has degree n.
class SubcliqueDegrees {
 public:
  SubcliqueDegrees(const Graph& g, std::span<const Vertex> clique);

  int size() const noexcept { return static_cast<int>(vertices_.size()); }
  std::uint32_t full_mask() const noexcept { return (std::uint32_t{1} << vertices_.size()) - 1; }
  std::size_t degree(std::uint32_t mask) const { return degrees_[mask]; }
  std::vector<Vertex> vertices(std::uint32_t mask) const;
  std::span<const Vertex> clique() const noexcept { return vertices_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::size_t> degrees_;
};

/// Calls f(mask) for each submask of `full` with exactly k bits, ascending.
template <class F>
void for_each_submask_of_size(std::uint32_t full, int k, F&& f) {
  for (std::uint32_t m = 0; m <= full; ++m) {
    if ((m & ~full) == 0 && std::popcount(m) == k) f(m);
  }
}

/// D, D_- and D_+ for one graph and one β, tabulated by (t, d).
///
/// D(T) = d(T)/n. D_-(T) = min(D(T), (p-t+1)β) and D_+(T) = D(T) - D_-(T)
/// for t-cliques with 1 <= t <= p+1; asking for larger t is a DomainError.
class CliqueCalculus {
 public:
  CliqueCalculus(const Graph& g, Beta beta);

  const Graph& graph() const noexcept { return *g_; }
  const Beta& beta() const noexcept { return beta_; }
  int p() const noexcept { return beta_.p(); }
  int n() const noexcept { return g_->order(); }

  /// min_degree(G) >= (1-β)n.
  bool meets_min_degree() const noexcept { return meets_min_degree_; }
  /// Throws DomainError naming `who` when the minimum-degree hypothesis fails.
  void require_min_degree(const char* who) const;

  const Rational& D(std::size_t d) const { return d_[d]; }
  const Rational& D_minus(int t, std::size_t d) const;
  const Rational& D_plus(int t, std::size_t d) const;
  bool heavy(int t, std::size_t d) const { return D_plus(t, d) > 0; }

  /// Σ_{T ∈ K_t(S)} D_-(T) over the t-subcliques of the clique selected by mask.
  Rational sum_D_minus(const SubcliqueDegrees& sub, std::uint32_t mask, int t) const;
  Rational sum_D(const SubcliqueDegrees& sub, std::uint32_t mask, int t) const;

 private:
  const Graph* g_;
  Beta beta_;
  bool meets_min_degree_ = false;
  std::vector<Rational> d_;
  std::vector<std::vector<Rational>> minus_;
  std::vector<std::vector<Rational>> plus_;
};

struct CliqueDegreeRecord {
  std::vector<Vertex> clique;
  std::size_t d = 0;
  Rational D;
  Rational D_minus;
  Rational D_plus;
  bool heavy = false;
};

/// Throws DomainError if |T| > p+1, InputError if T is not a clique.
CliqueDegreeRecord degree_record(const Graph& g, const VertexSet& t, const Beta& beta);

/// True iff no clique of order <= p+1 is heavy. Requires min_degree(G) >=
/// (1-β)n (DomainError otherwise); under that hypothesis it coincides with
/// G being K_{p+2}-free.
bool is_heavy_free(const Graph& g, const Beta& beta);

/// D̃ of the (t+1)-clique selected by mask (2 <= t <= p):
/// Σ_{T ∈ K_t(S)} D_-(T) - (2 - (t+1)β + (t-1) D_-(S)).
Rational widetilde_D(const CliqueCalculus& calc, const SubcliqueDegrees& sub, std::uint32_t mask);
/// Same, for a clique given as a vertex set. DomainError unless 2 <= |S|-1 <= p.
Rational widetilde_D(const Graph& g, const VertexSet& s, const Beta& beta);

/// Coefficient (4β-1)/(29-75β) of the heavy-triangle correction in η.
Rational eta_coefficient(const Beta& beta);

/// η(S) = D̃(S) - (4β-1)/(29-75β) Σ_{T ∈ K_3(S)} D_+(T)/(D_+(T)+β) for a
/// 4-clique S; defined for 1/4 <= β < 1/3 only.
Rational eta(const CliqueCalculus& calc, const SubcliqueDegrees& sub, std::uint32_t mask);
Rational eta(const Graph& g, const VertexSet& s, const Beta& beta);
/// η(S)/D(S); DomainError when D(S) = 0.
Rational eta_tilde(const Graph& g, const VertexSet& s, const Beta& beta);

/// Constants of the bad-4-clique structure statement:
/// ε = (4β-1)/(150β²-137β+30) and Δ = (1-3β)(1+ε).
struct BadCliqueConstants {
  Rational epsilon_denominator;
  Rational epsilon;
  Rational Delta;
};
BadCliqueConstants bad_clique_constants(const Beta& beta);

struct BadFourClique {
  std::vector<Vertex> clique;
  Rational eta;
  Rational D;
  int heavy_edges = 0;
  int heavy_triangles = 0;
  /// Sum of D over the non-heavy triangles (meaningful when there are two).
  Rational non_heavy_triangle_D_sum;
  bool one_heavy_edge_two_heavy_triangles = false;  // (i)
  bool degree_in_open_range = false;                // (ii) 0 < D(S) < Δ
  bool light_triangles_below_two_delta = false;     // (iii)

  bool structure_holds() const {
    return one_heavy_edge_two_heavy_triangles && degree_in_open_range && light_triangles_below_two_delta;
  }
};

/// Diagnoses one 4-clique (whether or not it is bad).
BadFourClique diagnose_four_clique(const CliqueCalculus& calc, const SubcliqueDegrees& sub,
                                   const BadCliqueConstants& constants);

/// All 4-cliques with η < 0, in enumeration order, with structural flags.
/// Requires 1/4 <= β < 1/3 and the minimum-degree hypothesis (DomainError).
std::vector<BadFourClique> classify_bad_4cliques(const Graph& g, const Beta& beta);

}  // namespace cliquemin
