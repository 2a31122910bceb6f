#include <gtest/gtest.h>

#include "cliquemin/errors.hpp"
#include "cliquemin/formulas.hpp"

using namespace cliquemin;

namespace {

Beta beta(long num, long den) { return Beta(Rational(num, den)); }

}  // namespace

TEST(GR, ClosedForms) {
  EXPECT_EQ(g_r(beta(1, 3), 2), Rational(1, 3));
  EXPECT_EQ(g_r(beta(1, 4), 3), Rational(1, 16));
  EXPECT_EQ(g_r(beta(1, 3), 3), Rational(1, 27));
  EXPECT_EQ(g_r(beta(1, 4), 4), Rational(1, 256));
  EXPECT_EQ(g_r(beta(2, 5), 1), 1);
  for (long num : {1L, 2L, 3L}) {
    const Rational b(num, 3 * num + 1);  // p = 3
    EXPECT_EQ(g_r(Beta(b), 2), (1 - b) / 2);
    EXPECT_EQ(g_r(Beta(b), 3), (1 - 2 * b) * (1 - 2 * b) * b);
  }
}

TEST(GR, VanishesExactlyAboveCliqueBound) {
  for (int p = 2; p <= 6; ++p) {
    for (int k = 0; k < 10; ++k) {
      const Beta b(Rational(1, p + 1) + fraction(k, 10) * (Rational(1, p) - Rational(1, p + 1)));
      ASSERT_EQ(b.p(), p);
      for (int r = 2; r <= p + 1; ++r) EXPECT_GT(g_r(b, r), 0) << p << ' ' << r;
      EXPECT_EQ(g_r(b, p + 2), 0);
      EXPECT_EQ(g_r(b, p + 5), 0);
    }
  }
}

TEST(PredictedKR, Examples) {
  EXPECT_EQ(predicted_k_r(12, beta(1, 3), 3, 0), 64);
  EXPECT_EQ(predicted_k_r(12, beta(5, 12), 3, 0), 35);
  EXPECT_EQ(predicted_k_r(8, beta(1, 4), 4, 0), 16);
  EXPECT_THROW(predicted_k_r(10, beta(1, 3), 3, 0), DomainError);
  EXPECT_THROW(predicted_k_r(5, beta(2, 5), 3, 0), FamilyUndefinedError);
}

TEST(PredictedKR, InnerTrianglesExtendThroughOuterClasses) {
  // n = 20, β = 1/5: p = 4, V0 of 8 vertices, three outer classes of 4.
  const Beta b = beta(1, 5);
  const Rational base = g_r(b, 4) * 160000;
  EXPECT_EQ(predicted_k_r(20, b, 4, 2), base + 3 * 4 * 2);
  EXPECT_EQ(predicted_k_r(20, b, 3, 2), g_r(b, 3) * 8000 + 2);
  const std::vector<std::uint64_t> counts = {0, 0, 0, 2, 1};
  EXPECT_EQ(predicted_k_r(20, b, 4, counts), base + 3 * 4 * 2 + 1);
}

TEST(CheckIdentityG, Examples) {
  const auto e1 = check_identity_g(beta(1, 4), 2, 1);
  EXPECT_TRUE(e1.holds);
  EXPECT_EQ(e1.slack, 0);
  EXPECT_EQ(e1.lhs, Rational(3, 16));
  EXPECT_EQ(e1.rhs, Rational(3, 16));
  EXPECT_EQ(check_identity_g(beta(2, 7), 2, 2).slack, 0);
  EXPECT_EQ(check_identity_g(beta(1, 4), 3, 3).slack, 0);
  EXPECT_TRUE(check_identity_g(beta(1, 4), 3, 3).equality);
}

TEST(CheckIdentityG, Errors) {
  EXPECT_THROW(check_identity_g(beta(1, 4), 1, 1), DomainError);
  EXPECT_THROW(check_identity_g(beta(1, 4), 4, 2), DomainError);
  EXPECT_THROW(check_identity_g(beta(1, 4), 2, 4), DomainError);
  EXPECT_THROW(check_identity_g(beta(1, 2), 2, 3), DomainError);
}

TEST(Varphi, Examples) {
  EXPECT_EQ(varphi(beta(1, 4), 2, 3), Rational(3, 2));
  EXPECT_EQ(varphi(beta(1, 3), 2, 3), 1);
  for (int t = 2; t <= 4; ++t) EXPECT_EQ(varphi(beta(2, 9), t, t), beta(2, 9).cap(t));
  EXPECT_THROW(varphi(beta(1, 4), 3, 2), DomainError);
  EXPECT_THROW(varphi(beta(1, 4), 2, 5), DomainError);
  EXPECT_THROW(varphi(beta(1, 4), 1, 3), DomainError);
}

TEST(CoefficientTable, RecurrenceAndClosedForm) {
  for (int p = 2; p <= 8; ++p) {
    const Beta b(Rational(2, 2 * p + 1));
    ASSERT_EQ(b.p(), p);
    const auto table = coefficient_table(b);
    EXPECT_EQ(table.C[static_cast<std::size_t>(p)], 0);
    if (p >= 3) EXPECT_EQ(table.C[static_cast<std::size_t>(p - 1)], 1 / b.value());
    for (int t = 2; t <= p; ++t) {
      const auto i = static_cast<std::size_t>(t);
      EXPECT_EQ(table.C[i], explicit_C(p, b.value(), t));
      EXPECT_EQ(table.A[i], (t - 1) * ((p + 1) * b.value() - 1) * table.C[i]);
      EXPECT_EQ(table.B[i], ((p + 1) * b.value() - 1) * table.C[i]);
    }
  }
}

TEST(RofBeta, TuranPointsGiveTwo) {
  for (int p = 2; p <= 6; ++p) EXPECT_EQ(r_of_beta(Beta(Rational(1, p + 1))), 2);
}

TEST(RofBeta, GrowsTowardsTheUpperEnd) {
  const Beta near(Rational(1, 3) - Rational(1, 1000));
  EXPECT_GT(r_of_beta(near), 2);
  EXPECT_LE(r_of_beta(near), 3);
}

TEST(EpsilonP, PositiveAndCertified) {
  const auto scan = epsilon_p_scan(3, Rational(1, 1000));
  EXPECT_GT(scan.lower_bound, 0);
  EXPECT_EQ(scan.lower_bound, scan.certified_steps * Rational(1, 1000));
  // Spot-check the certificate with exact r(β) on a grid inside it.
  for (int k = 0; k < 20; ++k) {
    const Rational b = Rational(1, 4) + scan.lower_bound * Rational(k, 20);
    EXPECT_EQ(r_of_beta(Beta(b)), 2) << to_string(b);
  }
  EXPECT_THROW(epsilon_p(1, Rational(1, 100)), DomainError);
  EXPECT_THROW(epsilon_p(3, Rational(0)), DomainError);
}
