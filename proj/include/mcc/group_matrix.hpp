#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "group.hpp"
#include "matrix.hpp"
#include "pencil.hpp"

namespace mcc {

/// Permutation matrix with ρ(σ)[α, β] = 1 iff α = σβ.
inline RatMatrix regular_rep(const FiniteGroup& g, std::size_t s) {
  if (s >= g.order()) throw domain_error("bad group element index");
  RatMatrix m(g.order(), g.order());
  for (std::size_t b = 0; b < g.order(); ++b) m(g.mul(s, b), b) = 1;
  return m;
}

/// Σ_σ ρ(σ)λ(σ); its (α, β) entry is λ(αβ⁻¹).
template <class T>
std::vector<std::vector<T>> group_matrix_entries(const FiniteGroup& g, const std::vector<T>& lambda) {
  if (lambda.size() != g.order()) throw domain_error("log vector length does not match the group order");
  std::vector<std::vector<T>> m(g.order(), std::vector<T>(g.order()));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) m[a][b] = lambda[g.mul(a, g.inv(b))];
  return m;
}

inline RatMatrix group_matrix(const FiniteGroup& g, const std::vector<BigRat>& lambda) {
  return RatMatrix::from_rows(group_matrix_entries(g, lambda));
}

/// Entry form M'[σ, τ] = λ(τ⁻¹σ). Equals J·Mᵀ·J for the inversion permutation J,
/// so it has the same rank as group_matrix.
inline RatMatrix group_matrix_entry_form(const FiniteGroup& g, const std::vector<BigRat>& lambda) {
  if (lambda.size() != g.order()) throw domain_error("log vector length does not match the group order");
  RatMatrix m(g.order(), g.order());
  for (std::size_t s = 0; s < g.order(); ++s)
    for (std::size_t t = 0; t < g.order(); ++t) m(s, t) = lambda[g.mul(g.inv(t), s)];
  return m;
}

/// (λ ⋆ μ)(x) = Σ_{yz = x} λ(y)μ(z).
inline std::vector<BigRat> convolution(const FiniteGroup& g, const std::vector<BigRat>& l, const std::vector<BigRat>& m) {
  std::vector<BigRat> out(g.order(), BigRat(0));
  for (std::size_t y = 0; y < g.order(); ++y)
    for (std::size_t z = 0; z < g.order(); ++z) out[g.mul(y, z)] += l[y] * m[z];
  return out;
}

/// pr⁺ = (1/#H) Σ_{h∈H} ρ(h).
inline RatMatrix projection_plus(const FiniteGroup& g, const std::vector<std::size_t>& h) {
  if (!g.is_subgroup(h)) throw precondition_error("projection needs a subgroup");
  RatMatrix m(g.order(), g.order());
  const BigRat w = make_rat(1, static_cast<long>(h.size()));
  for (std::size_t x : h) m = m + regular_rep(g, x) * w;
  return m;
}

enum class LogKind { free, leopoldt, gross };

inline std::string to_string(LogKind k) {
  switch (k) {
    case LogKind::free: return "free";
    case LogKind::leopoldt: return "leopoldt";
    case LogKind::gross: return "gross";
  }
  return "?";
}

inline LogKind parse_log_kind(const std::string& s) {
  if (s == "free") return LogKind::free;
  if (s == "leopoldt") return LogKind::leopoldt;
  if (s == "gross") return LogKind::gross;
  throw domain_error("unknown constraint kind '" + s + "'");
}

struct LogVector {
  LogKind kind = LogKind::free;
  std::vector<std::size_t> h;
  std::optional<std::size_t> c;
  std::vector<BigRat> values;
};

/// Checks the hypotheses of the rank formula; throws precondition_error naming the failed one.
inline void check_log_hypotheses(const FiniteGroup& g, LogKind kind, const std::vector<std::size_t>& h, std::optional<std::size_t> c) {
  if (kind == LogKind::free) return;
  if (!g.is_subgroup(h)) throw precondition_error("H is not a subgroup");
  if (kind == LogKind::leopoldt) {
    if (h.size() != 1 && h.size() != 2) throw precondition_error("Leopoldt form needs #H in {1, 2}");
    return;
  }
  if (!c) throw precondition_error("Gross form needs a designated involution c");
  if (*c >= g.order()) throw precondition_error("c is not a group element");
  if (*c == g.identity() || g.mul(*c, *c) != g.identity()) throw precondition_error("c is not an involution");
  if (!g.is_central(*c)) throw precondition_error("c is not central");
  if (std::find(h.begin(), h.end(), *c) != h.end()) throw precondition_error("c lies in H");
}

inline long predicted_rank(const FiniteGroup& g, LogKind kind, const std::vector<std::size_t>& h, std::optional<std::size_t> c = std::nullopt) {
  check_log_hypotheses(g, kind, h, c);
  const long n = static_cast<long>(g.order());
  switch (kind) {
    case LogKind::free: return n;
    case LogKind::leopoldt: return n / static_cast<long>(h.size()) - 1;
    case LogKind::gross: return n / (2 * static_cast<long>(h.size()));
  }
  return 0;
}

/// Basis of the constrained space of λ, one vector per free coordinate.
inline std::vector<std::vector<BigRat>> log_basis(const FiniteGroup& g, LogKind kind, const std::vector<std::size_t>& h, std::optional<std::size_t> c = std::nullopt) {
  check_log_hypotheses(g, kind, h, c);
  const std::size_t n = g.order();
  std::vector<std::vector<BigRat>> basis;
  if (kind == LogKind::free) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<BigRat> e(n, BigRat(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  const auto cosets = g.left_cosets(h);
  std::vector<std::size_t> coset_of(n);
  for (std::size_t k = 0; k < cosets.size(); ++k)
    for (std::size_t x : cosets[k]) coset_of[x] = k;
  auto indicator = [&](std::size_t k, const BigRat& v, std::vector<BigRat>& out) {
    for (std::size_t x : cosets[k]) out[x] += v;
  };
  if (kind == LogKind::leopoldt) {
    // coset values summing to zero: δ_k − δ_last
    for (std::size_t k = 0; k + 1 < cosets.size(); ++k) {
      std::vector<BigRat> e(n, BigRat(0));
      indicator(k, 1, e);
      indicator(cosets.size() - 1, -1, e);
      basis.push_back(std::move(e));
    }
    return basis;
  }
  std::vector<bool> used(cosets.size(), false);
  for (std::size_t k = 0; k < cosets.size(); ++k) {
    if (used[k]) continue;
    const std::size_t partner = coset_of[g.mul(*c, cosets[k].front())];
    used[k] = used[partner] = true;
    std::vector<BigRat> e(n, BigRat(0));
    indicator(k, 1, e);
    indicator(partner, -1, e);
    basis.push_back(std::move(e));
  }
  return basis;
}

/// Generic rationals on the constrained space: numerators in ±[1, 10⁶], denominators in [1, 10⁶].
inline LogVector sample_log_vector(const FiniteGroup& g, LogKind kind, const std::vector<std::size_t>& h, std::optional<std::size_t> c,
                                   std::uint64_t seed) {
  const auto basis = log_basis(g, kind, h, c);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> mag(1, sample_range);
  std::uniform_int_distribution<int> sgn(0, 1);
  LogVector lv{kind, h, c, std::vector<BigRat>(g.order(), BigRat(0))};
  for (const auto& b : basis) {
    const long num = mag(rng) * (sgn(rng) ? 1 : -1);
    const BigRat x = make_rat(num, mag(rng));
    for (std::size_t i = 0; i < b.size(); ++i) lv.values[i] += x * b[i];
  }
  return lv;
}

/// Whether λ satisfies the relations of its kind exactly.
inline bool satisfies_constraints(const FiniteGroup& g, const LogVector& lv) {
  if (lv.values.size() != g.order()) return false;
  if (lv.kind == LogKind::free) return true;
  const auto cosets = g.left_cosets(lv.h);
  BigRat total = 0;
  for (const auto& cs : cosets) {
    for (std::size_t x : cs)
      if (lv.values[x] != lv.values[cs.front()]) return false;
    total += lv.values[cs.front()];
  }
  if (lv.kind == LogKind::leopoldt) return total == 0;
  for (std::size_t s = 0; s < g.order(); ++s)
    if (lv.values[g.mul(*lv.c, s)] != -lv.values[s]) return false;
  return true;
}

/// Pencil Σ_k group_matrix(basis_k)·t_k over the free coordinates.
inline MatrixPencil constrained_pencil(const FiniteGroup& g, LogKind kind, const std::vector<std::size_t>& h, std::optional<std::size_t> c = std::nullopt) {
  const auto basis = log_basis(g, kind, h, c);
  MatrixPencil p(g.order(), g.order());
  for (std::size_t k = 0; k < basis.size(); ++k) p.add("t" + std::to_string(k + 1), group_matrix(g, basis[k]));
  return p;
}

struct RankExperiment {
  long predicted = 0;
  StructuralRankResult structural;
  std::vector<long> trial_ranks;
  bool pass = false;
};

inline RankExperiment rank_experiment(const FiniteGroup& g, LogKind kind, const std::vector<std::size_t>& h, std::optional<std::size_t> c, std::size_t trials,
                                      std::uint64_t seed, const StructuralRankOptions& opt = {}) {
  RankExperiment r;
  r.predicted = predicted_rank(g, kind, h, c);
  if (r.predicted > 0) {
    auto o = opt;
    o.seed = seed;
    r.structural = structural_rank(constrained_pencil(g, kind, h, c), o);
  }
  r.pass = static_cast<long>(r.structural.rank) == r.predicted;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto lv = sample_log_vector(g, kind, h, c, seed + 1 + t);
    const long rk = static_cast<long>(rank(group_matrix(g, lv.values)));
    r.trial_ranks.push_back(rk);
    r.pass = r.pass && rk == r.predicted;
  }
  return r;
}

}  // namespace mcc
