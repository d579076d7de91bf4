#pragma once

#include <optional>
#include <vector>

#include "enumerate.hpp"
#include "pencil.hpp"

namespace mcc {

/// Nonzero vectors w, v with wᵀAv = 0 for every matrix A of a family.
struct WitnessPair {
  std::vector<BigRat> w;
  std::vector<BigRat> v;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

inline bool is_nonzero(const std::vector<BigRat>& x) {
  for (const auto& c : x)
    if (c != 0) return true;
  return false;
}

/// Exact check of wᵀAᵢv = 0 for every matrix, both vectors nonzero.
inline bool witness_holds(const WitnessPair& wp, const std::vector<RatMatrix>& family) {
  if (!is_nonzero(wp.w) || !is_nonzero(wp.v)) return false;
  for (const auto& a : family)
    if (bilinear(wp.w, a, wp.v) != 0) return false;
  return true;
}

struct SingularityCheck {
  bool singular = false;
  bool exact = true;
  double failure_bound = 0.0;
};

inline void check_square_family(const std::vector<RatMatrix>& basis) {
  if (basis.empty()) throw precondition_error("empty matrix basis");
  const std::size_t n = basis.front().rows();
  for (const auto& a : basis)
    if (a.rows() != n || a.cols() != n) throw domain_error("basis matrices must be square of one shape");
}

/// Whether det(Σ tᵢAᵢ) vanishes identically, i.e. the span is all singular.
inline SingularityCheck verify_all_singular(const std::vector<RatMatrix>& basis, const StructuralRankOptions& opt = {}) {
  check_square_family(basis);
  auto r = structural_rank(MatrixPencil::from_basis(basis), opt);
  return {r.rank < basis.front().rows(), r.exact, r.failure_bound};
}

/// Invertible P, Q with P·A·Q = diag(I_r, 0), built from elementary operations.
struct DiagonalForm {
  RatMatrix p;
  RatMatrix q;
  std::size_t r = 0;
};

/// Pivots are taken at the first nonzero entry in row-major order of the
/// remaining lower-right block.
inline DiagonalForm diagonalize(const RatMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  RatMatrix b = a, p = RatMatrix::identity(m), q = RatMatrix::identity(n);
  auto swap_rows = [](RatMatrix& x, std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(i, j), x(k, j));
  };
  auto swap_cols = [](RatMatrix& x, std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < x.rows(); ++i) std::swap(x(i, j), x(i, k));
  };
  std::size_t k = 0;
  for (; k < std::min(m, n); ++k) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = k; i < m && pi == m; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (b(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == m) break;
    if (pi != k) {
      swap_rows(b, pi, k);
      swap_rows(p, pi, k);
    }
    if (pj != k) {
      swap_cols(b, pj, k);
      swap_cols(q, pj, k);
    }
    const BigRat inv = 1 / b(k, k);
    for (std::size_t j = 0; j < n; ++j) b(k, j) *= inv;
    for (std::size_t j = 0; j < m; ++j) p(k, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == k || b(i, k) == 0) continue;
      const BigRat f = b(i, k);
      for (std::size_t j = 0; j < n; ++j) b(i, j) -= f * b(k, j);
      for (std::size_t j = 0; j < m; ++j) p(i, j) -= f * p(k, j);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || b(k, j) == 0) continue;
      const BigRat f = b(k, j);
      for (std::size_t i = 0; i < m; ++i) b(i, j) -= f * b(i, k);
      for (std::size_t i = 0; i < n; ++i) q(i, j) -= f * q(i, k);
    }
  }
  return {std::move(p), std::move(q), k};
}

namespace detail {

inline std::vector<BigRat> unit_vector(std::size_t n, std::size_t i) {
  std::vector<BigRat> e(n);
  e[i] = 1;
  return e;
}

inline WitnessPair singular_witness_rec(const std::vector<RatMatrix>& family, std::size_t n) {
  std::size_t best = 0, best_rank = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::size_t r = rank(family[i]);
    if (r > best_rank) {
      best_rank = r;
      best = i;
    }
  }
  // The zero family is annihilated by any pair.
  if (best_rank == 0) return {unit_vector(n, 0), unit_vector(n, 0)};
  if (best_rank == n) throw precondition_error("subspace contains a nonsingular matrix");

  const auto form = diagonalize(family[best]);
  const std::size_t r = form.r, rest = n - r;
  std::vector<RatMatrix> lower;
  lower.reserve(family.size());
  for (const auto& a : family) lower.push_back((form.p * a * form.q).block(r, r, rest, rest));

  const auto sub = singular_witness_rec(lower, rest);
  std::vector<BigRat> w(n), v(n);
  for (std::size_t i = 0; i < rest; ++i) {
    w[r + i] = sub.w[i];
    v[r + i] = sub.v[i];
  }
  // (w̃, ṽ) annihilates {P·A·Q}, so (Pᵀw̃, Qṽ) annihilates {A}.
  return {form.p.transpose().apply(w), form.q.apply(v)};
}

}  // namespace detail

/// Common isotropic pair for a subspace of singular matrices. Reduces a
/// maximal-rank basis element to diag(I_r, 0), recurses on the lower-right
/// (n−r)×(n−r) blocks of the transformed family, then pads and pulls back.
/// Output vectors are primitive integer vectors with first nonzero entry
/// positive and are re-verified exactly.
inline WitnessPair singular_subspace_witness(const std::vector<RatMatrix>& basis, const StructuralRankOptions& opt = {}) {
  check_square_family(basis);
  bool all_zero = true;
  for (const auto& a : basis) all_zero = all_zero && a.is_zero();
  if (all_zero) throw degenerate_error("all-zero subspace: every pair is a witness");
  if (!verify_all_singular(basis, opt).singular) throw precondition_error("subspace contains a nonsingular matrix");

  auto raw = detail::singular_witness_rec(basis, basis.front().rows());
  auto w = primitive_integer(raw.w);
  auto v = primitive_integer(raw.v);
  normalize_sign(w);
  normalize_sign(v);
  WitnessPair out{to_rat(w), to_rat(v)};
  if (!witness_holds(out, basis)) throw std::logic_error("singular subspace witness failed verification");
  return out;
}

/// First pair (w, v) of integer vectors with max-norm ≤ height and wᵀMᵢv = 0
/// for every pencil component, w scanned in canonical order. For each w the
/// admissible v form the kernel of the stacked rows wᵀMᵢ; v is the first
/// canonical vector of that kernel within the height.
inline std::optional<WitnessPair> brute_force_pencil_witness(const MatrixPencil& p, long height) {
  if (p.rows() != p.cols()) throw precondition_error("witness search needs a square pencil");
  if (height < 1) throw precondition_error("search height must be positive");
  const std::size_t n = p.rows();
  const auto mats = p.matrices();

  auto max_norm = [](const std::vector<BigInt>& x) {
    BigInt m = 0;
    for (const auto& c : x) m = std::max<BigInt>(m, abs(c));
    return m;
  };

  std::optional<WitnessPair> found;
  for_each_canonical(n, height, [&](const std::vector<long>& w) {
    const auto wr = to_rat(w);
    RatMatrix stacked(mats.size(), n);
    for (std::size_t i = 0; i < mats.size(); ++i) {
      auto row = mats[i].transpose().apply(wr);
      for (std::size_t j = 0; j < n; ++j) stacked(i, j) = row[j];
    }
    const auto ker = kernel(stacked);
    if (ker.empty()) return false;
    if (ker.size() == 1) {
      if (max_norm(ker.front()) > height) return false;
      found = WitnessPair{wr, to_rat(ker.front())};
      return true;
    }
    for_each_canonical(n, height, [&](const std::vector<long>& v) {
      const auto vr = to_rat(v);
      if (is_nonzero(stacked.apply(vr))) return false;
      found = WitnessPair{wr, vr};
      return true;
    });
    return found.has_value();
  });
  if (found && !witness_holds(*found, mats.empty() ? std::vector<RatMatrix>{RatMatrix(n, n)} : mats))
    throw std::logic_error("pencil witness failed verification");
  return found;
}

}  // namespace mcc
