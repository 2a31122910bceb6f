#include <gtest/gtest.h>

#include "cliquemin/cliques.hpp"
#include "cliquemin/errors.hpp"
#include "cliquemin/extremal.hpp"
#include "cliquemin/formulas.hpp"
#include "cliquemin/oracle.hpp"
#include "oracles.hpp"

using namespace cliquemin;

namespace {

Beta beta(long num, long den) { return Beta(Rational(num, den)); }

}  // namespace

TEST(ExtremalParams, Examples) {
  const auto a = extremal_params(12, beta(1, 3));
  EXPECT_EQ(a.p, 2);
  EXPECT_EQ(a.delta, 8);
  EXPECT_EQ(a.v0_size, 8);
  EXPECT_EQ(a.class_size, 4);
  EXPECT_EQ(a.v0_degree, 4);
  EXPECT_EQ(a.feasibility, Feasibility::Feasible);

  const auto b = extremal_params(12, beta(5, 12));
  EXPECT_EQ(b.delta, 7);
  EXPECT_EQ(b.v0_size, 7);
  EXPECT_EQ(b.class_size, 5);
  EXPECT_EQ(b.v0_degree, 2);
  EXPECT_EQ(b.feasibility, Feasibility::Feasible);

  EXPECT_THROW(extremal_params(5, beta(2, 5)), FamilyUndefinedError);
  EXPECT_THROW(extremal_params(10, beta(1, 3)), DomainError);
}

TEST(ExtremalParams, OddInnerPart) {
  EXPECT_EQ(extremal_params(7, beta(1, 7)).feasibility, Feasibility::Feasible);
  // v0 = 9, degree 4: no bipartite option, and the search finds no triangle-free one.
  const auto searched = extremal_params(14, beta(5, 14));
  EXPECT_EQ(searched.v0_size, 9);
  EXPECT_EQ(searched.v0_degree, 4);
  EXPECT_EQ(searched.feasibility, Feasibility::Infeasible);
  EXPECT_EQ(extremal_params(14, beta(5, 14), 8).feasibility, Feasibility::Unknown);
  const auto large = extremal_params(33, beta(3, 11));
  EXPECT_EQ(large.v0_size, 15);
  EXPECT_EQ(large.feasibility, Feasibility::Unknown);
}

TEST(TriangleFreeRegular, Examples) {
  const Graph k44 = triangle_free_regular(8, 4);
  EXPECT_TRUE(are_isomorphic(k44, named::complete_multipartite({4, 4})));
  EXPECT_EQ(triangle_free_regular(7, 2), named::cycle(7));
  EXPECT_TRUE(are_isomorphic(triangle_free_regular(6, 3), named::complete_multipartite({3, 3})));
  EXPECT_EQ(triangle_free_regular(5, 0), named::empty(5));
  EXPECT_THROW(triangle_free_regular(9, 4), UnsupportedError);
  EXPECT_THROW(triangle_free_regular(8, 5), UnsupportedError);
}

TEST(TriangleFreeRegular, CirculantsAreRegularAndTriangleFree) {
  for (int n0 = 2; n0 <= 20; n0 += 2)
    for (int d0 = 0; d0 <= n0 / 2; ++d0) {
      const Graph g = triangle_free_regular(n0, d0);
      EXPECT_TRUE(is_regular(g, d0));
      const auto counts = oracle::subset_clique_counts(g);
      if (n0 >= 3) EXPECT_EQ(counts[3], 0u) << n0 << ' ' << d0;
    }
}

TEST(BuildExtremal, Examples) {
  const Graph a = build_extremal(12, beta(1, 3));
  EXPECT_TRUE(are_isomorphic(a, named::turan(12, 3)));
  const auto sa = count_cliques(a, 4);
  EXPECT_EQ(sa.k(3), 64u);
  EXPECT_EQ(sa.k(4), 0u);

  const Graph b = build_extremal(12, beta(5, 12));
  EXPECT_EQ(count_cliques(b, 3).k(3), 35u);
  EXPECT_EQ(induced_subgraph(b, VertexSet::of(12, {0, 1, 2, 3, 4, 5, 6})), named::cycle(7));

  const Graph c = build_extremal(8, beta(1, 4));
  EXPECT_TRUE(are_isomorphic(c, named::turan(8, 4)));
  EXPECT_EQ(count_cliques(c, 4).k(4), 16u);
}

TEST(BuildExtremal, CountsMatchFormula) {
  for (auto [n, num, den] : {std::tuple{20, 1, 5}, {28, 2, 7}, {24, 1, 4}, {18, 5, 18}, {30, 1, 6}}) {
    const Beta b(Rational(num, den));
    const Graph g = build_extremal(n, b);
    const auto stats = count_cliques(g, b.p() + 2);
    EXPECT_TRUE(is_regular(g, static_cast<int>(extremal_params(n, b).delta)));
    for (int r = 2; r <= b.p() + 2; ++r) {
      const Rational expected = oracle::member_clique_count(n, b.value(), r);
      EXPECT_EQ(g_r(b, r) * pow(Rational(n), static_cast<unsigned>(r)), expected);
      EXPECT_EQ(to_rational(stats.k(r)), expected) << n << ' ' << num << '/' << den << " r=" << r;
    }
  }
}

TEST(K3RegMin, Examples) {
  const auto c5 = k3_reg_min_bruteforce(5, 2);
  EXPECT_EQ(c5.triangles, 0u);
  EXPECT_TRUE(are_isomorphic(c5.witness, named::cycle(5)));
  const auto k5 = k3_reg_min_bruteforce(5, 4);
  EXPECT_EQ(k5.triangles, 10u);
  EXPECT_EQ(k5.witness, named::complete(5));
  const auto seven = k3_reg_min_bruteforce(7, 4);
  EXPECT_GT(seven.triangles, 0u);
  EXPECT_TRUE(is_regular(seven.witness, 4));
  EXPECT_EQ(oracle::subset_clique_counts(seven.witness)[3], seven.triangles);
}

TEST(K3RegMin, Errors) {
  EXPECT_THROW(k3_reg_min_bruteforce(5, 3), DomainError);
  EXPECT_THROW(k3_reg_min_bruteforce(4, 4), DomainError);
  EXPECT_THROW(k3_reg_min_bruteforce(11, 2), RefusalError);
}

TEST(IsMember, Examples) {
  EXPECT_TRUE(is_member_of_family(build_extremal(12, beta(1, 3)), beta(1, 3)));
  EXPECT_FALSE(is_member_of_family(named::petersen(), beta(2, 5)));
  EXPECT_TRUE(is_member_of_family(named::complete_multipartite({3, 3}), beta(1, 2)));
  EXPECT_TRUE(is_member_of_family(named::turan(8, 4), beta(1, 4)));
}

TEST(IsMember, RelabelledMembersAndNearMisses) {
  const Beta b = beta(5, 12);
  const Graph g = build_extremal(12, b);
  const std::vector<Vertex> perm = {11, 3, 7, 0, 9, 1, 5, 10, 2, 8, 4, 6};
  EXPECT_TRUE(is_member_of_family(relabel(g, perm), b));

  // Replacing C7 by a different 2-regular graph on V0 is not possible (7 = 3 + 4 gives C3 + C4 with a triangle).
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e.first >= 7 || e.second >= 7) edges.push_back(e);
  for (auto e : {Edge{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}}) edges.push_back(e);
  const Graph h = graph_from_edges(12, edges);
  EXPECT_TRUE(is_regular(h, 7));
  EXPECT_FALSE(is_member_of_family(h, b));

  EXPECT_FALSE(is_member_of_family(named::turan(12, 3), beta(1, 4)));
  EXPECT_FALSE(is_member_of_family(build_extremal(12, beta(1, 3)), beta(5, 12)));
  EXPECT_THROW(is_member_of_family(named::turan(10, 3), beta(1, 3)), DomainError);
}
