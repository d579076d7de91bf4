#pragma once

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "factored.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"

namespace mcc {

/// Formal sum of rational matrices times Q-linearly independent symbols.
class MatrixPencil {
 public:
  struct Component {
    std::string sym;
    RatMatrix m;

    friend bool operator==(const Component&, const Component&) = default;
  };

  MatrixPencil(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  MatrixPencil(std::size_t rows, std::size_t cols, std::vector<Component> comps) : MatrixPencil(rows, cols) {
    for (auto& c : comps) add(std::move(c.sym), std::move(c.m));
  }

  /// Pencil with symbols t1..tk over the given basis.
  static MatrixPencil from_basis(const std::vector<RatMatrix>& basis) {
    if (basis.empty()) throw precondition_error("empty matrix basis");
    MatrixPencil p(basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < basis.size(); ++i) p.add("t" + std::to_string(i + 1), basis[i]);
    return p;
  }

  void add(std::string sym, RatMatrix m) {
    if (m.rows() != rows_ || m.cols() != cols_) throw domain_error("pencil component shape mismatch for '" + sym + "'");
    for (const auto& c : comps_)
      if (c.sym == sym) throw domain_error("duplicate pencil symbol '" + sym + "'");
    comps_.push_back({std::move(sym), std::move(m)});
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Component>& components() const noexcept { return comps_; }
  std::size_t symbols() const noexcept { return comps_.size(); }

  std::vector<RatMatrix> matrices() const {
    std::vector<RatMatrix> out;
    for (const auto& c : comps_) out.push_back(c.m);
    return out;
  }

  /// Σ xᵢ Mᵢ at a rational point.
  RatMatrix evaluate(const std::vector<BigRat>& x) const {
    if (x.size() != comps_.size()) throw domain_error("pencil evaluation point has wrong length");
    RatMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < comps_.size(); ++k)
      if (x[k] != 0) out += comps_[k].m * x[k];
    return out;
  }

  friend bool operator==(const MatrixPencil&, const MatrixPencil&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Component> comps_;
};

struct ExactLimits {
  std::size_t max_symbols = 6;
  std::size_t max_dim = 8;
};

enum class RankMode { exact, randomized, automatic };

struct StructuralRankOptions {
  RankMode mode = RankMode::automatic;
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  ExactLimits limits{};
};

struct StructuralRankResult {
  std::size_t rank = 0;
  bool exact = true;
  std::size_t trials = 0;
  /// Upper bound on the probability that the randomized answer is too small.
  double failure_bound = 0.0;
};

/// Numerators and denominators of random evaluation points are drawn from [1, sample_range].
inline constexpr long sample_range = 1'000'000;

namespace detail {

inline std::size_t exact_structural_rank(const MatrixPencil& p) {
  // Clear denominators row by row, then eliminate over Z[x1..xk].
  Grid<MPoly> g(p.rows(), std::vector<MPoly>(p.cols()));
  for (std::size_t i = 0; i < p.rows(); ++i) {
    BigInt den = 1;
    for (const auto& c : p.components())
      for (std::size_t j = 0; j < p.cols(); ++j) den = lcm(den, c.m(i, j).get_den());
    for (std::size_t k = 0; k < p.symbols(); ++k) {
      const auto& m = p.components()[k].m;
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (m(i, j) != 0) g[i][j] += MPoly::variable(k, m(i, j).get_num() * (den / m(i, j).get_den()));
    }
  }
  return bareiss(std::move(g)).rank();
}

}  // namespace detail

/// Rank of Σ Mᵢxᵢ over Q(x₁,…,x_k).
///
/// Exact mode eliminates fraction-free over the multivariate polynomial ring
/// and is limited by `limits`. Randomized mode returns the maximum rank over
/// `trials` evaluations at random rationals; a nonzero minor of degree at most
/// min(rows, cols) vanishes at one such point with probability at most
/// min(rows, cols)/sample_range (Schwartz–Zippel over the numerators), and the
/// reported failure bound is that quantity raised to the number of trials.
inline StructuralRankResult structural_rank(const MatrixPencil& p, const StructuralRankOptions& opt = {}) {
  StructuralRankResult res;
  if (p.symbols() == 0 || p.rows() == 0 || p.cols() == 0) return res;

  const bool fits = p.symbols() <= std::min(opt.limits.max_symbols, MPoly::max_vars) &&
                    std::max(p.rows(), p.cols()) <= std::min<std::size_t>(opt.limits.max_dim, 255);
  RankMode mode = opt.mode;
  if (mode == RankMode::automatic) mode = fits ? RankMode::exact : RankMode::randomized;
  if (mode == RankMode::exact) {
    if (!fits)
      throw cap_exceeded("exact structural rank limited to " + std::to_string(opt.limits.max_symbols) +
                         " symbols and " + std::to_string(opt.limits.max_dim) + "x" +
                         std::to_string(opt.limits.max_dim) + " shape");
    res.rank = detail::exact_structural_rank(p);
    return res;
  }

  if (opt.trials == 0) throw precondition_error("randomized structural rank needs at least one trial");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> dist(1, sample_range);
  const std::size_t cap = std::min(p.rows(), p.cols());
  res.exact = false;
  res.trials = opt.trials;
  for (std::size_t t = 0; t < opt.trials && res.rank < cap; ++t) {
    std::vector<BigRat> x;
    for (std::size_t k = 0; k < p.symbols(); ++k) {
      long num = dist(rng);
      long den = dist(rng);
      x.push_back(make_rat(num, den));
    }
    res.rank = std::max(res.rank, rank(p.evaluate(x)));
  }
  if (res.rank < cap)
    res.failure_bound = std::pow(static_cast<double>(cap) / static_cast<double>(sample_range), static_cast<double>(opt.trials));
  return res;
}

/// Pencil over the symbols "log p" of a matrix of positive rationals, whose
/// component for p holds the p-exponents of the entries.
inline MatrixPencil log_pencil(const std::vector<std::vector<FactoredRat>>& q) {
  if (q.empty() || q.front().empty()) throw domain_error("empty matrix");
  const std::size_t rows = q.size(), cols = q.front().size();
  std::set<BigInt> primes;
  for (const auto& row : q) {
    if (row.size() != cols) throw domain_error("ragged matrix rows");
    for (const auto& x : row) {
      if (x.sign() < 0) throw domain_error("log_pencil requires positive rationals");
      for (const auto& [p, e] : x.factors()) primes.insert(p);
    }
  }
  MatrixPencil out(rows, cols);
  for (const auto& p : primes) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = q[i][j].exponent(p);
    out.add("log" + p.get_str(), std::move(m));
  }
  return out;
}

inline MatrixPencil log_pencil(const RatMatrix& q) {
  std::vector<std::vector<FactoredRat>> f(q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (q(i, j) <= 0) throw domain_error("log_pencil requires positive rationals");
      f[i].push_back(factor_rational(q(i, j)));
    }
  return log_pencil(f);
}

}  // namespace mcc
