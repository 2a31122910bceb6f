#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliquemin/graph.hpp"
#include "cliquemin/rational.hpp"
#include "cliquemin/report.hpp"

namespace cliquemin {

enum class DegreeMode { MinDegreeExactly, MinDegreeAtLeast };

std::string to_string(DegreeMode mode);

struct SearchOptions {
  /// Largest n searched; larger instances are refused.
  int threshold = 8;
  DegreeMode mode = DegreeMode::MinDegreeExactly;
};

struct SearchResult {
  int n = 0;
  int delta = 0;
  int r = 0;
  DegreeMode mode = DegreeMode::MinDegreeExactly;
  std::uint64_t minimum = 0;
  /// Minimisers, one per isomorphism class, sorted by graph6 string.
  std::vector<Graph> witnesses;
  std::uint64_t graphs_scanned = 0;
};

/// k_r(n, δ) by exhaustive search over labelled graphs, filling the upper
/// triangle of the adjacency matrix pair by pair. Pruning: degree
/// feasibility, non-increasing degrees along vertex indices, and the partial
/// r-clique count (which only grows) against the best complete graph of the
/// current row-0 branch. Throws RefusalError when n > options.threshold and
/// DomainError when no graph qualifies (δ >= n).
SearchResult brute_force_k_r(int n, int delta, int r, const SearchOptions& options = {});

nlohmann::json to_json(const SearchResult& result);

/// Removes uniformly chosen edges whose endpoints both have degree > delta
/// until none is left or max_removals edges are gone. Deterministic for a
/// given seed. DomainError when `start` has minimum degree below delta.
Graph thin_to_min_degree(const Graph& start, int delta, std::uint64_t seed,
                         std::size_t max_removals = std::numeric_limits<std::size_t>::max());

/// thin_to_min_degree starting from K_n: a random graph with minimum degree
/// exactly delta (delta < n) when run to completion.
Graph random_graph_min_degree(int n, int delta, std::uint64_t seed,
                              std::size_t max_removals = std::numeric_limits<std::size_t>::max());

/// Complete multipartite graph on n vertices whose `parts` classes are
/// filled by assigning each vertex to a random class with room left (at most
/// max_part vertices per class).
Graph random_partite_graph(int n, int parts, int max_part, std::uint64_t seed);

/// Exact isomorphism test by colour refinement and backtracking.
bool are_isomorphic(const Graph& g, const Graph& h);

/// Compares k_r(n, (1-β)n) from the search with g_r(β)n^r: equality must
/// occur exactly when (n, β) is feasible, and then every witness must be a
/// family member. Pairs where the family is undefined count as infeasible.
VerificationReport check_extremal_uniqueness(int n, const Beta& beta, int r, const SearchOptions& options = {});

}  // namespace cliquemin
