#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace mcc {

/// Dense matrix of rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static RatMatrix from_rows(const std::vector<std::vector<BigRat>>& rows) {
    if (rows.empty()) return {};
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw domain_error("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static RatMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<BigRat>> r;
    for (const auto& row : rows) r.push_back(to_rat(row));
    return from_rows(r);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigRat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigRat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<BigRat> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix of rows [r0, r0+nr) and columns [c0, c0+nc).
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    RatMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  RatMatrix& operator+=(const RatMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  RatMatrix& operator*=(const BigRat& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator*(RatMatrix a, const BigRat& s) { return a *= s; }
  friend RatMatrix operator*(const BigRat& s, RatMatrix a) { return a *= s; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw domain_error("matrix product shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigRat& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<BigRat> apply(const std::vector<BigRat>& v) const {
    if (v.size() != cols_) throw domain_error("matrix-vector shape mismatch");
    std::vector<BigRat> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const RatMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw domain_error("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRat> data_;
};

/// Bilinear form w^T A v.
inline BigRat bilinear(const std::vector<BigRat>& w, const RatMatrix& a, const std::vector<BigRat>& v) {
  auto av = a.apply(v);
  if (w.size() != av.size()) throw domain_error("bilinear form shape mismatch");
  BigRat s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * av[i];
  return s;
}

inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class T>
using Grid = std::vector<std::vector<T>>;

/// Row echelon form produced by fraction-free elimination.
template <class T>
struct Echelon {
  Grid<T> rows;
  std::vector<std::size_t> pivot_cols;
  int swap_sign = 1;

  std::size_t rank() const noexcept { return pivot_cols.size(); }
};

/// Bareiss elimination over an integral domain T with exact division.
/// Pivot: first nonzero entry in the current column, scanning downward.
/// Every intermediate entry is a minor of the input, so no fractions appear.
template <class T>
Echelon<T> bareiss(Grid<T> a) {
  Echelon<T> out;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  T prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      out.swap_sign = -out.swap_sign;
    }
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        T t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        a[i][j] = exact_div(t, prev);
      }
      a[i][c] = T(0);
    }
    prev = a[r][c];
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

/// Rows scaled by the lcm of their denominators; rank and kernel are unchanged.
/// The product of the scale factors is returned through `scale` when requested.
inline Grid<BigInt> integer_rows(const RatMatrix& m, BigInt* scale = nullptr) {
  Grid<BigInt> g(m.rows(), std::vector<BigInt>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) den = lcm(den, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j).get_num() * (den / m(i, j).get_den());
    if (scale) *scale *= den;
  }
  return g;
}

inline std::size_t rank(const RatMatrix& m) { return bareiss(integer_rows(m)).rank(); }

inline BigRat det(const RatMatrix& m) {
  if (!m.is_square()) throw domain_error("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  BigInt scale;
  auto e = bareiss(integer_rows(m, &scale));
  if (e.rank() < m.rows()) return 0;
  return make_rat(e.swap_sign * e.rows.back().back(), scale);
}

/// Right kernel as primitive integer vectors, one per non-pivot column in
/// increasing column order, each with first nonzero entry positive.
inline std::vector<std::vector<BigInt>> kernel_from_echelon(const Echelon<BigInt>& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<BigRat> x(cols);
    x[f] = 1;
    for (std::size_t k = e.rank(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      BigRat s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (x[j] != 0) s += BigRat(e.rows[k][j]) * x[j];
      x[pc] = -s / BigRat(e.rows[k][pc]);
    }
    auto v = primitive_integer(x);
    normalize_sign(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::vector<std::vector<BigInt>> kernel(const RatMatrix& m) {
  return kernel_from_echelon(bareiss(integer_rows(m)), m.cols());
}

inline std::vector<std::vector<BigInt>> kernel(const Grid<BigInt>& m, std::size_t cols) {
  return kernel_from_echelon(bareiss(m), cols);
}

inline std::size_t rank(const Grid<BigInt>& m) { return bareiss(m).rank(); }

}  // namespace mcc
