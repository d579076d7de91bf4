#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mcc/mcc.hpp"

using namespace mcc;

namespace {

// Leibniz expansion, independent of elimination.
BigRat leibniz_det(const RatMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigRat total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    BigRat term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Plain Gauss-Jordan over Q.
std::size_t gauss_rank(RatMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const BigRat f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long range) {
  std::uniform_int_distribution<long> d(-range, range), den(1, 4);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = make_rat(d(rng), den(rng));
  return m;
}

MatrixPencil skew3() {
  MatrixPencil p(3, 3);
  p.add("x1", RatMatrix::from_ints({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
  p.add("x2", RatMatrix::from_ints({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}));
  p.add("x3", RatMatrix::from_ints({{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}));
  return p;
}

}  // namespace

TEST(Factored, Examples) {
  EXPECT_TRUE(factor_rational(1).is_one());
  const auto a = factor_rational(make_rat(-8, 9));
  EXPECT_EQ(a.sign(), -1);
  EXPECT_EQ(a.exponent(2), 3);
  EXPECT_EQ(a.exponent(3), -2);
  const auto b = factor_rational(make_rat(12, 5));
  EXPECT_EQ(b.sign(), 1);
  EXPECT_EQ(b.exponent(2), 2);
  EXPECT_EQ(b.exponent(3), 1);
  EXPECT_EQ(b.exponent(5), -1);
  EXPECT_EQ(b.factors().size(), 3u);
  EXPECT_THROW(factor_rational(0), domain_error);
}

TEST(Factored, ValueRoundTripAndLargePrimes) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(1, 1'000'000);
  for (int k = 0; k < 200; ++k) {
    const BigRat q = make_rat(d(rng), d(rng)) * (k % 3 == 0 ? -1 : 1);
    const auto f = factor_rational(q);
    EXPECT_EQ(f.value(), q);
    for (const auto& [p, e] : f.factors()) EXPECT_NE(mpz_probab_prime_p(p.get_mpz_t(), 30), 0);
  }
  const BigInt big = BigInt("1000000007") * BigInt("998244353");
  const auto f = factor_rational(BigRat(big));
  EXPECT_EQ(f.exponent(BigInt("1000000007")), 1);
  EXPECT_EQ(f.exponent(BigInt("998244353")), 1);
}

TEST(Factored, Multiplication) {
  const auto a = factor_rational(make_rat(12, 5)), b = factor_rational(make_rat(-5, 6));
  EXPECT_EQ((a * b).value(), make_rat(-2, 1));
  EXPECT_EQ(a.pow(3).value(), make_rat(1728, 125));
  EXPECT_TRUE((a * a.inverse()).is_one());
}

TEST(Laurent, Evaluation) {
  LaurentPoly p(2);
  p.add_term({1, 0}, 1);
  p.add_term({0, 1}, -1);
  EXPECT_EQ(laurent_eval(p, {3, 3}), 0);
  EXPECT_EQ(laurent_eval(LaurentPoly::monomial({1, -1}), {6, 2}), 3);
  LaurentPoly q(2);
  q.add_term({0, 0}, 1);
  q.add_term({2, 1}, 1);
  EXPECT_EQ(laurent_eval(q, {2, 3}), 13);
  EXPECT_THROW(laurent_eval(LaurentPoly::monomial({-1, 0}), {0, 1}), domain_error);
}

TEST(Laurent, ClearMonomial) {
  LaurentPoly p(2), want(2);
  p.add_term({-1, 0}, 1);
  p.add_term({0, 1}, 1);
  want.add_term({0, 0}, 1);
  want.add_term({1, 1}, 1);
  EXPECT_EQ(clear_monomial(p), want);
  LaurentPoly r(2);
  r.add_term({2, 1}, 1);
  r.add_term({3, 2}, 1);
  EXPECT_EQ(clear_monomial(r), want);
  LaurentPoly s(1);
  s.add_term({0}, 1);
  s.add_term({1}, 1);
  EXPECT_EQ(clear_monomial(s), s);
}

TEST(Laurent, RingIdentities) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-3, 3), c(-5, 5);
  for (int k = 0; k < 50; ++k) {
    LaurentPoly a(2), b(2);
    for (int t = 0; t < 3; ++t) {
      a.add_term({e(rng), e(rng)}, c(rng));
      b.add_term({e(rng), e(rng)}, c(rng));
    }
    const std::vector<BigRat> z{make_rat(c(rng) == 0 ? 1 : 2, 3), make_rat(5, 7)};
    EXPECT_EQ(laurent_eval(a * b, z), laurent_eval(a, z) * laurent_eval(b, z));
    EXPECT_EQ(laurent_eval(a + b, z), laurent_eval(a, z) + laurent_eval(b, z));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Matrix, Examples) {
  const auto id = RatMatrix::identity(3);
  EXPECT_EQ(rank(id), 3u);
  EXPECT_EQ(det(id), 1);
  const auto m = RatMatrix::from_ints({{2, 3}, {4, 6}});
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(det(m), 0);
  const auto k = kernel(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (std::vector<BigInt>{3, -2}));
  EXPECT_EQ(rank(RatMatrix(2, 2)), 0u);
  EXPECT_THROW(det(RatMatrix(2, 3)), domain_error);
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 60; ++k) {
    const auto n = static_cast<std::size_t>(1 + k % 5);
    const auto m = random_matrix(rng, n, n, 9);
    EXPECT_EQ(det(m), leibniz_det(m));
  }
}

TEST(Matrix, RankMatchesGaussJordan) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 80; ++k) {
    const auto r = static_cast<std::size_t>(1 + k % 5), c = static_cast<std::size_t>(1 + (k / 5) % 5);
    auto m = random_matrix(rng, r, c, 2);
    if (r > 1 && k % 2 == 0)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 3 - m(r - 2, j);
    EXPECT_EQ(rank(m), gauss_rank(m));
    const auto ker = kernel(m);
    EXPECT_EQ(ker.size() + rank(m), c);
    for (const auto& v : ker) EXPECT_EQ(m.apply(to_rat(v)), std::vector<BigRat>(r, BigRat(0)));
  }
}

TEST(Pencil, Examples) {
  MatrixPencil single(3, 3);
  single.add("x", RatMatrix::identity(3));
  EXPECT_EQ(structural_rank(single).rank, 3u);
  EXPECT_EQ(structural_rank(skew3()).rank, 2u);
  MatrixPencil one(2, 2);
  one.add("x1", RatMatrix::from_ints({{2, 3}, {4, 6}}));
  EXPECT_EQ(structural_rank(one).rank, 1u);
  EXPECT_THROW(one.add("x1", RatMatrix::identity(2)), domain_error);
  EXPECT_THROW(one.add("y", RatMatrix::identity(3)), domain_error);
}

TEST(Pencil, SkewDeterminantVanishesButMinorDoesNot) {
  // Oracle: any point of the pencil is skew of odd size, so rank ≤ 2, and x1 = 1 gives rank 2.
  const auto p = skew3();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-100, 100);
  for (int k = 0; k < 20; ++k) {
    const auto m = p.evaluate({d(rng), d(rng), d(rng)});
    EXPECT_EQ(det(m), 0);
  }
  EXPECT_EQ(rank(p.evaluate({1, 0, 0})), 2u);
}

TEST(Pencil, ExactAndRandomizedAgree) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> d(-1, 1);
  for (int k = 0; k < 40; ++k) {
    const std::size_t r = 1 + k % 4, c = 1 + (k / 4) % 4;
    MatrixPencil p(r, c);
    for (int s = 0; s < 1 + k % 3; ++s) {
      RatMatrix m(r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
      p.add("t" + std::to_string(s), m);
    }
    StructuralRankOptions ex, rnd;
    ex.mode = RankMode::exact;
    rnd.mode = RankMode::randomized;
    rnd.seed = static_cast<std::uint64_t>(k);
    const auto a = structural_rank(p, ex), b = structural_rank(p, rnd);
    EXPECT_TRUE(a.exact);
    EXPECT_FALSE(b.exact);
    EXPECT_EQ(a.rank, b.rank);
    EXPECT_LT(b.failure_bound, 1e-6);
    // Oracle: every evaluation has rank at most the generic rank.
    std::uniform_int_distribution<long> big(-50, 50);
    std::vector<BigRat> x;
    for (std::size_t s = 0; s < p.symbols(); ++s) x.push_back(big(rng));
    EXPECT_LE(rank(p.evaluate(x)), a.rank);
  }
}

TEST(Pencil, LogPencilExamples) {
  const auto p = log_pencil(RatMatrix::from_ints({{4, 8}, {16, 64}}));
  ASSERT_EQ(p.symbols(), 1u);
  EXPECT_EQ(p.components()[0].m, RatMatrix::from_ints({{2, 3}, {4, 6}}));
  const auto e = log_pencil(RatMatrix::from_ints({{1}}));
  EXPECT_EQ(e.symbols(), 0u);
  EXPECT_EQ(structural_rank(e).rank, 0u);
  const auto q = log_pencil(RatMatrix::from_ints({{2, 3}, {3, 2}}));
  ASSERT_EQ(q.symbols(), 2u);
  EXPECT_EQ(q.components()[0].m, RatMatrix::identity(2));
  EXPECT_EQ(q.components()[1].m, RatMatrix::from_ints({{0, 1}, {1, 0}}));
  EXPECT_THROW(log_pencil(RatMatrix::from_ints({{0, 1}})), domain_error);
}

TEST(Pencil, LogPencilEvaluatesToLogs) {
  // Substituting log p for each prime symbol reproduces log |q_ij|.
  const auto q = RatMatrix::from_rows({{make_rat(12, 5), 7}, {make_rat(1, 9), 10}});
  const auto p = log_pencil(q);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      double s = 0;
      for (const auto& c : p.components()) s += c.m(i, j).get_d() * std::log(std::stod(c.sym.substr(3)));
      EXPECT_NEAR(s, std::log(std::abs(q(i, j).get_d())), 1e-12);
    }
}

TEST(Pencil, ExactCapThrows) {
  MatrixPencil p(12, 12);
  p.add("x", RatMatrix::identity(12));
  StructuralRankOptions o;
  o.mode = RankMode::exact;
  EXPECT_THROW(structural_rank(p, o), cap_exceeded);
  o.mode = RankMode::automatic;
  EXPECT_EQ(structural_rank(p, o).rank, 12u);
}
