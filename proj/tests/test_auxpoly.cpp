#include <gtest/gtest.h>

#include <set>

#include "mcc/mcc.hpp"

using namespace mcc;

TEST(ProductPoly, SmallCase) {
  const auto P = build_product_poly(2, 3, 1);
  ASSERT_EQ(P.size(), 10u);
  EXPECT_EQ(P.back(), 1);
  for (const BigInt r : {1, 2, 3, 4, 6, 9, 12, 18, 36}) EXPECT_EQ(poly_eval(P, r), 0) << r;
  EXPECT_NE(poly_eval(P, BigInt(5)), 0);
  // constant term = (−1)^9 · Π roots = −(2·3)^{9}·...; compare with the direct product
  BigInt prod = 1;
  for (const auto& r : product_roots(2, 3, 1)) prod *= r;
  EXPECT_EQ(P.front(), -prod);
}

TEST(ProductPoly, ConstantTermClosedForm) {
  // Π αⁱβʲ over 0 ≤ i, j < 3N is (αβ)^{3N·3N(3N−1)/2}.
  for (long N : {1L, 2L}) {
    const auto P = build_product_poly(4, 7, N);
    const unsigned long e = static_cast<unsigned long>(3 * N * (3 * N * (3 * N - 1) / 2));
    const BigInt sign = (9 * N * N) % 2 ? -1 : 1;
    EXPECT_EQ(P.front(), sign * ipow(BigInt(28), e));
  }
}

TEST(ProductPoly, RootsAndCap) {
  const auto P = build_product_poly(4, 7, 2);
  EXPECT_EQ(static_cast<long>(P.size()) - 1, 36);
  for (const auto& r : product_roots(4, 7, 2)) EXPECT_EQ(poly_eval(P, r), 0);
  EXPECT_THROW(build_product_poly(4, 7, 40), cap_exceeded);
  EXPECT_THROW(build_product_poly(1, 7, 1), domain_error);
}

TEST(CoeffHeight, Examples) {
  EXPECT_NEAR(coeff_height({-2, 1}).log, std::log(2.0), 1e-12);
  const auto P = build_product_poly(2, 3, 1);
  const auto h = coeff_height(P);
  // Vieta: each coefficient is bounded by Π (1 + root).
  double bound = 0;
  for (const auto& r : product_roots(2, 3, 1)) bound += std::log(1.0 + r.get_d());
  EXPECT_LE(h.log, bound);
  EXPECT_GT(coeff_height(build_product_poly(2, 3, 2)).log, 2 * h.log);
  EXPECT_NEAR(log_abs(ipow(BigInt(10), 400)), 400 * std::log(10.0), 1e-9);
}

TEST(PadicValuation, Examples) {
  EXPECT_FALSE(padic_valuation_at(4, 7, 1, 4, 3));
  const auto v = padic_valuation_at(4, 7, 1, 10, 3);
  ASSERT_TRUE(v);
  EXPECT_GE(*v, 9);
  // Direct valuation of the evaluated integer.
  EXPECT_EQ(*v, valuation(poly_eval(build_product_poly(4, 7, 1), BigInt(10)), BigInt(3)));
  // x = 1 is the root α⁰β⁰.
  EXPECT_FALSE(padic_valuation_at(4, 7, 1, 1, 3));
  const auto far = padic_valuation_at(4, 7, 1, make_rat(-2, 7), 3);
  ASSERT_TRUE(far);
  EXPECT_GE(*far, 9);
  EXPECT_THROW(padic_valuation_at(4, 7, 1, 2, 3), precondition_error);
  EXPECT_THROW(padic_valuation_at(5, 7, 1, 1, 3), precondition_error);
}

TEST(PadicValuation, MatchesDirectEvaluation) {
  for (long N : {1L, 2L}) {
    const auto P = build_product_poly(4, 7, N);
    for (long k = -30; k <= 30; ++k) {
      const BigInt x = 1 + 3 * k;
      const auto v = padic_valuation_at(4, 7, N, x, 3);
      const BigInt y = poly_eval(P, x);
      if (!v) {
        EXPECT_EQ(y, 0);
        continue;
      }
      EXPECT_EQ(*v, valuation(y, BigInt(3)));
      EXPECT_GE(*v, 9 * N * N);
    }
  }
}

TEST(GapReport, Examples) {
  const auto a = analytic_gap_report(4, 7, 3, 1);
  EXPECT_EQ(a.degree, 9);
  EXPECT_EQ(a.guaranteed_bound, 9);
  EXPECT_GE(a.padic_lower_bound, 9);
  EXPECT_GT(a.product_log, 0);
  EXPECT_FALSE(a.duplicate_roots);
  const auto b = analytic_gap_report(4, 7, 3, 2);
  EXPECT_EQ(b.degree, 36);
  EXPECT_GT(b.product_log, a.product_log);
  const auto d = analytic_gap_report(4, 4, 3, 1);
  EXPECT_TRUE(d.duplicate_roots);
  EXPECT_LT(d.distinct_roots, 9u);
  EXPECT_THROW(analytic_gap_report(5, 7, 3, 1), precondition_error);
}
