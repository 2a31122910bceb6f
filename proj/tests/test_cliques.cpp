#include <gtest/gtest.h>

#include "cliquemin/cliques.hpp"
#include "cliquemin/errors.hpp"
#include "cliquemin/extremal.hpp"
#include "oracles.hpp"

using namespace cliquemin;

namespace {

const Beta kQuarter{Rational(1, 4)};
const Beta kThird{Rational(1, 3)};

Graph k4_minus_edge() { return graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace

TEST(CountCliques, CompleteGraph) {
  const auto stats = count_cliques(named::complete(5), 6);
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(stats.k(r), binomial(5, r).get_ui()) << r;
  EXPECT_EQ(stats.clique_number(), 5);
  EXPECT_THROW(stats.k(7), std::out_of_range);
}

TEST(CountCliques, TripartiteAndCycle) {
  const auto k222 = count_cliques(named::complete_multipartite({2, 2, 2}), 4);
  EXPECT_EQ(k222.k(3), 8u);
  EXPECT_EQ(k222.k(4), 0u);
  EXPECT_EQ(k222.k(2), 12u);
  EXPECT_EQ(count_cliques(named::cycle(5), 3).k(3), 0u);
  EXPECT_EQ(count_cliques(named::petersen(), 3).k(2), 15u);
}

TEST(CountCliques, MatchesSubsetEnumeration) {
  oracle::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(9, 2, 3, rng);
    const auto expected = oracle::subset_clique_counts(g);
    const auto stats = count_cliques(g, 9);
    for (int r = 1; r <= 9; ++r) EXPECT_EQ(stats.k(r), expected[static_cast<std::size_t>(r)]);
  }
}

TEST(ForEachClique, LexicographicOrder) {
  std::vector<std::vector<Vertex>> seen;
  for_each_clique(named::complete(3), 3, [&](std::span<const Vertex> c, std::span<const std::uint64_t>) {
    seen.emplace_back(c.begin(), c.end());
  });
  const std::vector<std::vector<Vertex>> expected = {{0}, {0, 1}, {0, 1, 2}, {0, 2}, {1}, {1, 2}, {2}};
  EXPECT_EQ(seen, expected);
}

TEST(ForEachClique, StopsWhenVisitorReturnsFalse) {
  int visits = 0;
  for_each_clique(named::complete(6), 6, [&](std::span<const Vertex>, std::span<const std::uint64_t>) {
    return ++visits < 4;
  });
  EXPECT_EQ(visits, 4);
}

TEST(CliqueDegree, Examples) {
  EXPECT_EQ(clique_degree(named::complete(5), VertexSet::of(5, {0, 1})), 3u);
  EXPECT_EQ(clique_degree(named::complete_multipartite({2, 2, 2}), VertexSet::of(6, {0, 2, 4})), 0u);
  EXPECT_THROW(clique_degree(named::cycle(5), VertexSet::of(5, {0, 2})), InputError);
}

TEST(CliqueDegree, InnerCycleEdgeOfMember) {
  const Graph g = build_extremal(12, Beta(Rational(5, 12)));
  // V0 is {0..6} and carries C7.
  const Graph inner = induced_subgraph(g, VertexSet::of(12, {0, 1, 2, 3, 4, 5, 6}));
  EXPECT_TRUE(is_regular(inner, 2));
  EXPECT_EQ(count_cliques(inner, 3).k(3), 0u);
  for (const auto& [u, v] : inner.edges()) EXPECT_EQ(clique_degree(g, VertexSet::of(12, {u, v})), 5u);
}

TEST(SubcliqueDegrees, TablesAllSubsets) {
  const Graph g = named::complete_multipartite({2, 2, 2});
  const std::vector<Vertex> tri = {0, 2, 4};
  SubcliqueDegrees sub(g, tri);
  EXPECT_EQ(sub.size(), 3);
  EXPECT_EQ(sub.degree(0), 6u);
  EXPECT_EQ(sub.degree(1), 4u);
  EXPECT_EQ(sub.degree(3), 2u);
  EXPECT_EQ(sub.degree(7), 0u);
  EXPECT_EQ(sub.vertices(5), (std::vector<Vertex>{0, 4}));
  std::vector<std::uint32_t> masks;
  for_each_submask_of_size(sub.full_mask(), 2, [&](std::uint32_t m) { masks.push_back(m); });
  EXPECT_EQ(masks, (std::vector<std::uint32_t>{3, 5, 6}));
}

TEST(DegreeRecord, CompleteGraphQuarter) {
  const Graph k4 = named::complete(4);
  const auto edge = degree_record(k4, VertexSet::of(4, {0, 1}), kQuarter);
  EXPECT_EQ(edge.d, 2u);
  EXPECT_EQ(edge.D, Rational(1, 2));
  EXPECT_EQ(edge.D_minus, Rational(1, 2));
  EXPECT_EQ(edge.D_plus, 0);
  EXPECT_FALSE(edge.heavy);

  const auto tri = degree_record(k4, VertexSet::of(4, {0, 1, 2}), kQuarter);
  EXPECT_EQ(tri.D, Rational(1, 4));
  EXPECT_EQ(tri.D_minus, Rational(1, 4));
  EXPECT_EQ(tri.D_plus, 0);
}

TEST(DegreeRecord, ZeroCapMakesAnyCommonNeighbourHeavy) {
  const auto rec = degree_record(k4_minus_edge(), VertexSet::of(4, {0, 1}), Beta(Rational(1, 2)));
  EXPECT_EQ(rec.D, Rational(1, 2));
  EXPECT_EQ(rec.D_minus, 0);
  EXPECT_TRUE(rec.heavy);
}

TEST(DegreeRecord, Errors) {
  EXPECT_THROW(degree_record(named::complete(4), VertexSet::of(4, {0, 1, 2, 3}), kThird), DomainError);
  EXPECT_THROW(degree_record(named::cycle(5), VertexSet::of(5, {0, 2}), kThird), InputError);
}

TEST(IsHeavyFree, Examples) {
  EXPECT_TRUE(is_heavy_free(named::complete_multipartite({2, 2, 2}), kThird));
  EXPECT_FALSE(is_heavy_free(named::complete(4), kThird));
  EXPECT_TRUE(is_heavy_free(named::turan(8, 4), kQuarter));
  EXPECT_THROW(is_heavy_free(named::cycle(5), kThird), DomainError);
}

TEST(WidetildeD, EqualityCases) {
  EXPECT_EQ(widetilde_D(named::complete(4), VertexSet::of(4, {0, 1, 2, 3}), kQuarter), 0);
  EXPECT_EQ(widetilde_D(named::complete_multipartite({2, 2, 2}), VertexSet::of(6, {0, 2, 4}), kThird), 0);
  EXPECT_THROW(widetilde_D(named::complete(4), VertexSet::of(4, {0, 1}), kQuarter), DomainError);
  // t = 3 needs p >= 3.
  EXPECT_THROW(widetilde_D(named::complete(4), VertexSet::of(4, {0, 1, 2, 3}), kThird), DomainError);
}

TEST(WidetildeD, MatchesHandEvaluationOnRandomGraphs) {
  oracle::Rng rng(17);
  const Rational beta(2, 7);
  const Beta b(beta);
  for (int i = 0; i < 10; ++i) {
    const Graph g = oracle::random_dense_graph(14, 10, rng);
    for (const auto& s : oracle::subset_cliques(g, 3)) {
      Rational sum = 0;
      for (int drop = 0; drop < 3; ++drop) {
        std::vector<Vertex> e;
        for (int j = 0; j < 3; ++j)
          if (j != drop) e.push_back(s[static_cast<std::size_t>(j)]);
        sum += oracle::d_minus(g, e, beta, 3);
      }
      const Rational expected = sum - (2 - 3 * beta + oracle::d_minus(g, s, beta, 3));
      EXPECT_EQ(widetilde_D(g, VertexSet::of(14, s), b), expected);
    }
  }
}

TEST(Eta, RangeAndZeroDegreeGuards) {
  const Graph k4 = named::complete(4);
  const auto all = VertexSet::of(4, {0, 1, 2, 3});
  EXPECT_EQ(eta(k4, all, kQuarter), 0);
  EXPECT_THROW(eta(k4, all, kThird), DomainError);
  EXPECT_THROW(eta_tilde(k4, all, kQuarter), DomainError);
  EXPECT_EQ(eta_coefficient(kQuarter), 0);
}

TEST(Eta, EqualsTildeWithoutHeavyTriangles) {
  const Graph g = named::turan(8, 4);
  const Beta b(Rational(2, 7));
  ASSERT_TRUE(is_heavy_free(g, b));
  for (const auto& s : oracle::subset_cliques(g, 4)) {
    const auto set = VertexSet::of(8, s);
    EXPECT_EQ(eta(g, set, b), widetilde_D(g, set, b));
  }
}

TEST(BadCliqueConstants, ExactValues) {
  const auto c = bad_clique_constants(Beta(Rational(3, 10)));
  const Rational beta(3, 10);
  EXPECT_EQ(c.epsilon_denominator, 150 * beta * beta - 137 * beta + 30);
  EXPECT_EQ(c.epsilon, (4 * beta - 1) / c.epsilon_denominator);
  EXPECT_EQ(c.Delta, (1 - 3 * beta) * (1 + c.epsilon));
}

TEST(ClassifyBad4Cliques, MembersHaveNone) {
  EXPECT_TRUE(classify_bad_4cliques(build_extremal(14, Beta(Rational(2, 7))), Beta(Rational(2, 7))).empty());
  EXPECT_TRUE(classify_bad_4cliques(named::turan(8, 4), kQuarter).empty());
  EXPECT_THROW(classify_bad_4cliques(named::cycle(6), kQuarter), DomainError);
  EXPECT_THROW(classify_bad_4cliques(named::complete(6), kThird), DomainError);
}
