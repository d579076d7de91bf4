#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>

#include "mcc/mcc.hpp"

using namespace mcc;

namespace {

// Numerical rank through a full-pivot LU on doubles.
long float_rank(const RatMatrix& m) {
  Eigen::MatrixXd a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  lu.setThreshold(1e-9);
  return static_cast<long>(lu.rank());
}

// For cyclic groups the rank is the number of nonvanishing Fourier coefficients.
long fourier_rank(const std::vector<BigRat>& lambda) {
  const std::size_t n = lambda.size();
  long r = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> s = 0;
    for (std::size_t j = 0; j < n; ++j) s += lambda[j].get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n));
    r += std::abs(s) > 1e-9;
  }
  return r;
}

std::vector<std::size_t> H(const FiniteGroup& g, std::initializer_list<const char*> gens) {
  std::vector<std::size_t> idx;
  for (const char* s : gens) idx.push_back(g.index_of(s));
  return g.generated(idx);
}

}  // namespace

TEST(FiniteGroup, CatalogAxiomsAndOrders) {
  const std::map<std::string, std::size_t> orders{{"C2xC2", 4}, {"S3", 6}, {"D4", 8}, {"Q8", 8}, {"A4", 12}, {"S4", 24}, {"D6", 12}};
  for (const auto& name : group_catalog_names()) {
    const auto g = catalog_group(name);
    if (name[0] == 'C' && name != "C2xC2") EXPECT_EQ(g.order(), std::stoul(name.substr(1)));
    else EXPECT_EQ(g.order(), orders.at(name));
    for (std::size_t a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
      EXPECT_EQ(g.order() % g.element_order(a), 0u);
    }
  }
  EXPECT_TRUE(catalog_group("C6").is_abelian());
  EXPECT_FALSE(catalog_group("S3").is_abelian());
  EXPECT_EQ(catalog_group("Q8").central_involutions().size(), 1u);
  EXPECT_EQ(catalog_group("D4").central_involutions().size(), 1u);
  EXPECT_EQ(catalog_group("S3").central_involutions().size(), 0u);
  EXPECT_EQ(catalog_group("C2xC2").central_involutions().size(), 3u);
  EXPECT_THROW(catalog_group("C13"), domain_error);
}

TEST(FiniteGroup, SubgroupCounts) {
  // Subgroup counts from the standard tables (all are 2-generated).
  EXPECT_EQ(catalog_group("S3").subgroups().size(), 6u);
  EXPECT_EQ(catalog_group("D4").subgroups().size(), 10u);
  EXPECT_EQ(catalog_group("Q8").subgroups().size(), 6u);
  EXPECT_EQ(catalog_group("A4").subgroups().size(), 10u);
  EXPECT_EQ(catalog_group("S4").subgroups().size(), 30u);
  EXPECT_EQ(catalog_group("C12").subgroups().size(), 6u);
}

TEST(FiniteGroup, RejectsBadTables) {
  EXPECT_THROW(FiniteGroup({{0, 1}, {1, 1}}), domain_error);
  EXPECT_THROW(FiniteGroup({}), domain_error);
  // Latin square without associativity.
  const std::vector<std::vector<std::size_t>> bad{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FiniteGroup{bad}, domain_error);
  try {
    FiniteGroup({{0, 1}, {1, 1}});
  } catch (const domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("Latin"), std::string::npos);
  }
}

TEST(RegularRep, Examples) {
  const auto c2 = catalog_group("C2");
  EXPECT_EQ(regular_rep(c2, c2.identity()), RatMatrix::identity(2));
  EXPECT_EQ(regular_rep(c2, 1 - c2.identity()), RatMatrix::from_ints({{0, 1}, {1, 0}}));
  const auto s3 = catalog_group("S3");
  const auto t = regular_rep(s3, s3.index_of("(1 2)"));
  EXPECT_EQ(t * t, RatMatrix::identity(6));
  EXPECT_EQ(rank(t), 6u);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) EXPECT_EQ(regular_rep(s3, a) * regular_rep(s3, b), regular_rep(s3, s3.mul(a, b)));
}

TEST(GroupMatrix, Examples) {
  const auto c2 = catalog_group("C2");
  std::vector<BigRat> delta(2, BigRat(0));
  delta[c2.identity()] = 1;
  EXPECT_EQ(group_matrix(c2, delta), RatMatrix::identity(2));
  std::vector<BigRat> xy(2);
  xy[c2.identity()] = 3;
  xy[1 - c2.identity()] = 5;
  EXPECT_EQ(group_matrix(c2, xy), RatMatrix::from_ints({{3, 5}, {5, 3}}));
  const auto s4 = catalog_group("S4");
  EXPECT_EQ(rank(group_matrix(s4, std::vector<BigRat>(24, BigRat(7)))), 1u);
}

TEST(GroupMatrix, EntryFormHasSameRankAndIsConjugateTranspose) {
  for (const auto& name : group_catalog_names()) {
    const auto g = catalog_group(name);
    const auto l = sample_log_vector(g, LogKind::free, {}, std::nullopt, 3).values;
    const auto m = group_matrix(g, l), e = group_matrix_entry_form(g, l);
    RatMatrix j(g.order(), g.order());
    for (std::size_t a = 0; a < g.order(); ++a) j(a, g.inv(a)) = 1;
    EXPECT_EQ(e, j * m.transpose() * j) << name;
    EXPECT_EQ(rank(e), rank(m)) << name;
  }
}

TEST(GroupMatrix, CyclicRankMatchesFourier) {
  for (int n = 2; n <= 12; ++n) {
    const auto g = catalog_group("C" + std::to_string(n));
    // cyclic labels are powers of the generator, index k ↦ g^k
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto l = sample_log_vector(g, LogKind::leopoldt, {g.identity()}, std::nullopt, seed).values;
      std::vector<BigRat> by_power(static_cast<std::size_t>(n));
      const std::size_t gen = g.index_of("g");
      std::size_t x = g.identity();
      for (int k = 0; k < n; ++k, x = g.mul(x, gen)) by_power[static_cast<std::size_t>(k)] = l[x];
      EXPECT_EQ(static_cast<long>(rank(group_matrix(g, l))), fourier_rank(by_power));
    }
  }
}

TEST(Projection, Examples) {
  const auto s3 = catalog_group("S3");
  EXPECT_EQ(projection_plus(s3, {s3.identity()}), RatMatrix::identity(6));
  std::vector<std::size_t> all(6);
  std::iota(all.begin(), all.end(), 0);
  const auto full = projection_plus(s3, all);
  EXPECT_EQ(rank(full), 1u);
  EXPECT_EQ(full * full, full);
  const auto half = projection_plus(s3, H(s3, {"(1 2)"}));
  EXPECT_EQ(half * half, half);
  EXPECT_EQ(rank(half), 3u);
  EXPECT_THROW(projection_plus(s3, {s3.index_of("(1 2)")}), precondition_error);
}

TEST(Predicted, Examples) {
  const auto s3 = catalog_group("S3");
  EXPECT_EQ(predicted_rank(s3, LogKind::leopoldt, H(s3, {"(1 2)"})), 2);
  const auto c4 = catalog_group("C4");
  EXPECT_EQ(predicted_rank(c4, LogKind::gross, {c4.identity()}, c4.index_of("g^2")), 2);
  EXPECT_EQ(predicted_rank(catalog_group("C7"), LogKind::leopoldt, {catalog_group("C7").identity()}), 6);
  EXPECT_THROW(predicted_rank(s3, LogKind::leopoldt, H(s3, {"(1 2 3)"})), precondition_error);
  EXPECT_THROW(predicted_rank(c4, LogKind::gross, {c4.identity()}, c4.index_of("g")), precondition_error);
  EXPECT_THROW(predicted_rank(c4, LogKind::gross, H(c4, {"g^2"}), c4.index_of("g^2")), precondition_error);
}

TEST(SampleLogVector, Constraints) {
  const auto c2 = catalog_group("C2");
  const auto l = sample_log_vector(c2, LogKind::leopoldt, {c2.identity()}, std::nullopt, 1);
  EXPECT_EQ(l.values[0], -l.values[1]);
  const auto c4 = catalog_group("C4");
  const std::size_t g = c4.index_of("g"), g2 = c4.index_of("g^2"), g3 = c4.index_of("g^3");
  const auto gl = sample_log_vector(c4, LogKind::gross, {c4.identity()}, g2, 2);
  EXPECT_EQ(gl.values[g2], -gl.values[c4.identity()]);
  EXPECT_EQ(gl.values[g3], -gl.values[g]);
  EXPECT_TRUE(satisfies_constraints(c4, gl));
  const auto s3 = catalog_group("S3");
  const auto sl = sample_log_vector(s3, LogKind::leopoldt, H(s3, {"(1 2)"}), std::nullopt, 3);
  EXPECT_TRUE(satisfies_constraints(s3, sl));
  auto broken = sl;
  broken.values[0] += 1;
  EXPECT_FALSE(satisfies_constraints(s3, broken));
}

TEST(RankExperiment, Examples) {
  const auto c2 = catalog_group("C2");
  const auto a = rank_experiment(c2, LogKind::leopoldt, {c2.identity()}, std::nullopt, 5, 1);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.trial_ranks, std::vector<long>(5, 1));
  const auto c4 = catalog_group("C4");
  EXPECT_EQ(rank_experiment(c4, LogKind::gross, {c4.identity()}, c4.index_of("g^2"), 5, 1).trial_ranks, std::vector<long>(5, 2));
  const auto s3 = catalog_group("S3");
  EXPECT_EQ(rank_experiment(s3, LogKind::leopoldt, H(s3, {"(1 2)"}), std::nullopt, 5, 1).trial_ranks, std::vector<long>(5, 2));
}

TEST(RankExperiment, ExactRanksMatchFloatingPointRanks) {
  for (const auto& name : group_catalog_names()) {
    const auto g = catalog_group(name);
    for (const auto& h : g.subgroups()) {
      if (h.size() > 2) continue;
      // small integer combination keeps the float oracle well conditioned
      std::vector<BigRat> l(g.order(), BigRat(0));
      long c = 1;
      for (const auto& b : log_basis(g, LogKind::leopoldt, h)) {
        c = (c * 7 + 3) % 19 - 9;
        for (std::size_t i = 0; i < l.size(); ++i) l[i] += b[i] * c;
      }
      const auto m = group_matrix(g, l);
      EXPECT_EQ(static_cast<long>(rank(m)), float_rank(m)) << name;
    }
  }
}
