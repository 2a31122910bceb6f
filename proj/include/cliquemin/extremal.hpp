#pragma once

#include <optional>
#include <string>

#include "cliquemin/graph.hpp"
#include "cliquemin/rational.hpp"

namespace cliquemin {

enum class Feasibility { Feasible, Infeasible, Unknown };

std::string to_string(Feasibility f);

/// Default size limit for exhaustive searches over inner graphs.
inline constexpr int kDefaultInnerThreshold = 10;

/// Part sizes and degrees of the extremal construction for (n, β).
struct ExtremalParams {
  long n = 0;
  Rational beta;
  int p = 0;
  long delta = 0;       // (1-β)n
  long v0_size = 0;     // (1-(p-1)β)n
  long class_size = 0;  // βn
  long v0_degree = 0;   // (1-pβ)n
  Feasibility feasibility = Feasibility::Unknown;
  bool parity_ok = true;
};

/// Throws DomainError when βn is not an integer, FamilyUndefinedError when n
/// and (1-β)n are both odd. Feasibility for an odd inner part is settled by
/// exhaustive search when v0_size <= threshold.
ExtremalParams extremal_params(long n, const Beta& beta, int threshold = kDefaultInnerThreshold);

/// A d0-regular triangle-free graph on n0 vertices: empty for d0 = 0, the
/// cycle for d0 = 2 and n0 >= 4, and for even n0 with d0 <= n0/2 the
/// bipartite circulant a_i ~ b_{(i+j) mod n0/2}, j < d0. Anything else is an
/// UnsupportedError.
Graph triangle_free_regular(int n0, int d0);

struct InnerMinimum {
  std::uint64_t triangles = 0;
  Graph witness;
};

/// Minimum triangle count over d0-regular graphs on n0 vertices, by
/// exhaustive branch and bound. The witness is the minimiser whose
/// upper-triangle adjacency string (pairs in row-major order) is
/// lexicographically least. Throws DomainError when no d0-regular graph on
/// n0 vertices exists and RefusalError when n0 > threshold.
InnerMinimum k3_reg_min_bruteforce(int n0, int d0, int threshold = kDefaultInnerThreshold);

/// A member of the extremal family: V0 = {0..v0_size-1} carries the inner
/// graph, then the p-1 independent classes of size βn follow in order; all
/// pairs in different parts are adjacent. Throws UnsupportedError when no
/// inner graph can be produced.
Graph build_extremal(long n, const Beta& beta, int threshold = kDefaultInnerThreshold);

/// Exact membership test. Vertices whose non-neighbourhood (including
/// themselves) is an independent set of size βn shared by all its members
/// are the only candidates for the outer classes; every choice of p-1 such
/// sets is tried, and the remainder must carry a triangle-minimal regular
/// graph. Returns false when the family is undefined for (n, β). Throws
/// DomainError when βn is not an integer and RefusalError when deciding
/// triangle-minimality needs a search above the threshold.
bool is_member_of_family(const Graph& g, const Beta& beta, int threshold = kDefaultInnerThreshold);

}  // namespace cliquemin
