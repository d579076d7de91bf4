#pragma once

#include <cmath>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace mcc {

/// Dense univariate integer polynomial, coefficients in ascending degree.
using IntPoly = std::vector<BigInt>;

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline BigInt poly_eval(const IntPoly& p, const BigInt& x) {
  BigInt r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

inline BigRat poly_eval(const IntPoly& p, const BigRat& x) {
  BigRat r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

/// The (3N)² roots αⁱβʲ, 0 ≤ i, j < 3N, with repetitions, i-major.
inline std::vector<BigInt> product_roots(const BigInt& alpha, const BigInt& beta, long N) {
  std::vector<BigInt> roots;
  BigInt ai = 1;
  for (long i = 0; i < 3 * N; ++i, ai *= alpha) {
    BigInt r = ai;
    for (long j = 0; j < 3 * N; ++j, r *= beta) roots.push_back(r);
  }
  return roots;
}

/// Π_{i,j=0}^{3N−1} (t − αⁱβʲ), expanded by a balanced product tree.
inline IntPoly build_product_poly(const BigInt& alpha, const BigInt& beta, long N, long cap = 10'000) {
  if (alpha < 2 || beta < 2) throw domain_error("alpha and beta must be at least 2");
  if (N < 1) throw domain_error("N must be positive");
  if (9 * N * N > cap) throw cap_exceeded("product polynomial degree " + std::to_string(9 * N * N) + " exceeds cap " + std::to_string(cap));
  std::vector<IntPoly> layer;
  for (const auto& r : product_roots(alpha, beta, N)) layer.push_back({-r, 1});
  while (layer.size() > 1) {
    std::vector<IntPoly> next;
    for (std::size_t k = 0; k + 1 < layer.size(); k += 2) next.push_back(poly_mul(layer[k], layer[k + 1]));
    if (layer.size() % 2 == 1) next.push_back(layer.back());
    layer = std::move(next);
  }
  return layer.front();
}

/// Natural log of a positive integer, valid beyond double range.
inline double log_abs(const BigInt& z) {
  if (z == 0) throw domain_error("log of zero");
  long e = 0;
  const double m = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

struct CoeffHeight {
  BigInt max_abs = 0;
  double log = 0;
};

inline CoeffHeight coeff_height(const IntPoly& p) {
  CoeffHeight h;
  for (const auto& c : p)
    if (abs(c) > h.max_abs) h.max_abs = abs(c);
  if (h.max_abs == 0) throw domain_error("height of the zero polynomial");
  h.log = log_abs(h.max_abs);
  return h;
}

inline void check_congruent_one(const BigRat& x, const BigInt& p, const std::string& what) {
  const BigRat d = x - 1;
  if (d != 0 && valuation(d, p) < 1) throw precondition_error(what + " is not congruent to 1 mod " + p.get_str());
}

/// v_p(P(x)) = Σ v_p(x − αⁱβʲ); nullopt when x is a root.
inline std::optional<long> padic_valuation_at(const BigInt& alpha, const BigInt& beta, long N, const BigRat& x, const BigInt& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw domain_error("p must be prime");
  check_congruent_one(BigRat(alpha), p, "alpha");
  check_congruent_one(BigRat(beta), p, "beta");
  check_congruent_one(x, p, "x");
  long v = 0;
  for (const auto& r : product_roots(alpha, beta, N)) {
    const BigRat d = x - r;
    if (d == 0) return std::nullopt;
    v += valuation(d, p);
  }
  return v;
}

struct GapReport {
  long N = 0;
  long degree = 0;
  double log_height = 0;
  /// Minimum of v_p(P(x)) over the sampled x that are not roots.
  long padic_lower_bound = 0;
  /// 9N²: every factor x − αⁱβʲ is divisible by p when x ≡ α ≡ β ≡ 1 mod p.
  long guaranteed_bound = 0;
  long samples = 0;
  long sampled_roots = 0;
  double log_f = 0;  // log f = −padic_lower_bound · log p
  double log_g = 0;  // log g = log max|c| + log Σ_{k≤deg} B^k, B = M^{3N}
  double product_log = 0;
  std::size_t distinct_roots = 0;
  bool duplicate_roots = false;
  std::string g_formula = "g = max|c_i| * sum_{k=0}^{deg} B^k, B = M^(3N), M = max(alpha, beta)";
};

inline GapReport analytic_gap_report(const BigInt& alpha, const BigInt& beta, const BigInt& p, long N, long samples = 32, std::uint64_t seed = 1) {
  check_congruent_one(BigRat(alpha), p, "alpha");
  check_congruent_one(BigRat(beta), p, "beta");
  const IntPoly P = build_product_poly(alpha, beta, N);
  GapReport g;
  g.N = N;
  g.degree = static_cast<long>(P.size()) - 1;
  g.guaranteed_bound = 9 * N * N;
  g.log_height = coeff_height(P).log;
  const auto roots = product_roots(alpha, beta, N);
  g.distinct_roots = std::set<BigInt>(roots.begin(), roots.end()).size();
  g.duplicate_roots = g.distinct_roots < roots.size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::optional<long> best;
  for (long s = 0; s < samples; ++s) {
    const BigRat x = 1 + BigRat(p) * dist(rng);
    ++g.samples;
    const auto v = padic_valuation_at(alpha, beta, N, x, p);
    if (!v) {
      ++g.sampled_roots;
      continue;
    }
    if (*v < g.guaranteed_bound) throw std::logic_error("p-adic valuation below the guaranteed bound");
    best = best ? std::min(*best, *v) : *v;
  }
  g.padic_lower_bound = best ? *best : g.guaranteed_bound;
  g.log_f = -static_cast<double>(g.padic_lower_bound) * log_abs(p);
  const double logB = 3.0 * static_cast<double>(N) * log_abs(std::max(alpha, beta));
  // log Σ_{k=0}^{d} B^k = d·log B + log Σ_{k=0}^{d} B^{−k}
  double tail = 0;
  for (long k = 0; k <= g.degree; ++k) tail += std::exp(-static_cast<double>(k) * logB);
  g.log_g = g.log_height + static_cast<double>(g.degree) * logB + std::log(tail);
  g.product_log = g.log_f + g.log_g;
  return g;
}

}  // namespace mcc
