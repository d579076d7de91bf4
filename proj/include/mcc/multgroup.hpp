#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "factored.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "padic.hpp"
#include "pencil.hpp"
#include "polytope.hpp"

namespace mcc {

inline constexpr long default_enum_cap = 1'000'000;
inline constexpr long default_digit_cap = 1'000'000;

/// Exponents of every generator entry along the prime axes, plus a final sign
/// axis holding 0 or 1.
class ExponentLattice {
 public:
  ExponentLattice() = default;

  explicit ExponentLattice(const std::vector<std::vector<FactoredRat>>& gens) {
    std::set<BigInt> ps;
    for (const auto& row : gens)
      for (const auto& x : row)
        for (const auto& [p, e] : x.factors()) ps.insert(p);
    primes_.assign(ps.begin(), ps.end());
    for (const auto& row : gens) {
      std::vector<std::vector<long>> r;
      for (const auto& x : row) {
        std::vector<long> e;
        for (const auto& p : primes_) e.push_back(x.exponent(p));
        e.push_back(x.sign() < 0 ? 1 : 0);
        r.push_back(std::move(e));
      }
      e_.push_back(std::move(r));
    }
  }

  const std::vector<BigInt>& primes() const noexcept { return primes_; }
  std::size_t axes() const noexcept { return primes_.size() + 1; }
  std::size_t sign_axis() const noexcept { return primes_.size(); }
  const std::vector<long>& tensor(std::size_t i, std::size_t j) const { return e_.at(i).at(j); }

  /// The rational with exponent vector `e` along the axes (sign axis read mod 2).
  FactoredRat value(const std::vector<long>& e) const {
    FactoredRat::Factors f;
    for (std::size_t k = 0; k < primes_.size(); ++k)
      if (e[k] != 0) f.emplace(primes_[k], e[k]);
    return FactoredRat((e[sign_axis()] % 2 != 0) ? -1 : 1, std::move(f));
  }

 private:
  std::vector<BigInt> primes_;
  std::vector<std::vector<std::vector<long>>> e_;
};

/// Subgroup of (Q*)^n generated by the m rows of `gens`.
class MultGroup {
 public:
  explicit MultGroup(std::vector<std::vector<FactoredRat>> gens) : gens_(std::move(gens)) {
    if (gens_.empty() || gens_.front().empty()) throw domain_error("multiplicative group needs at least one generator and one coordinate");
    for (const auto& row : gens_)
      if (row.size() != gens_.front().size()) throw domain_error("generators of different lengths");
    lattice_ = ExponentLattice(gens_);
  }

  static MultGroup from_rationals(const std::vector<std::vector<BigRat>>& rows) {
    std::vector<std::vector<FactoredRat>> g;
    for (const auto& row : rows) {
      std::vector<FactoredRat> r;
      for (const auto& q : row) {
        if (q == 0) throw domain_error("generator entries must be nonzero");
        r.push_back(factor_rational(q));
      }
      g.push_back(std::move(r));
    }
    return MultGroup(std::move(g));
  }

  std::size_t m() const noexcept { return gens_.size(); }
  std::size_t n() const noexcept { return gens_.front().size(); }
  const std::vector<std::vector<FactoredRat>>& gens() const noexcept { return gens_; }
  const FactoredRat& gen(std::size_t i, std::size_t j) const { return gens_.at(i).at(j); }
  const ExponentLattice& lattice() const noexcept { return lattice_; }

 private:
  std::vector<std::vector<FactoredRat>> gens_;
  ExponentLattice lattice_;
};

/// ⟨a, b⟩_X = Π x_ij^{a_i b_j}.
inline FactoredRat pairing(const MultGroup& x, const std::vector<long>& a, const std::vector<long>& b) {
  if (a.size() != x.m() || b.size() != x.n()) throw domain_error("pairing dimension mismatch");
  FactoredRat r;
  for (std::size_t i = 0; i < x.m(); ++i)
    for (std::size_t j = 0; j < x.n(); ++j)
      if (a[i] * b[j] != 0) r *= x.gen(i, j).pow(a[i] * b[j]);
  return r;
}

inline std::vector<long> to_longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const auto& z : v) {
    if (!z.fits_slong_p()) throw cap_exceeded("integer vector entry too large");
    out.push_back(z.get_si());
  }
  return out;
}

struct XNResult {
  /// Distinct points, each an n-tuple, in order of first occurrence.
  std::vector<std::vector<FactoredRat>> points;
  /// For each point, the first exponent vector a ∈ Z^m(N) producing it.
  std::vector<std::vector<long>> exponents;
  long total = 0;
  long collisions = 0;
};

namespace detail {

inline long checked_power(long base, std::size_t e, long cap) {
  long r = 1;
  for (std::size_t k = 0; k < e; ++k) {
    if (base != 0 && r > cap / base) throw cap_exceeded("enumeration size exceeds cap " + std::to_string(cap));
    r *= base;
  }
  if (r > cap) throw cap_exceeded("enumeration size exceeds cap " + std::to_string(cap));
  return r;
}

/// Exponent keys (n × axes, sign reduced mod 2) of the distinct points of X(N).
struct XNKeys {
  std::vector<std::vector<long>> keys;
  std::vector<std::vector<long>> exponents;
  long total = 0;
};

inline XNKeys xn_keys(const MultGroup& x, long N, long cap) {
  if (N < 1) throw domain_error("X(N) needs N ≥ 1");
  const auto& lat = x.lattice();
  const std::size_t m = x.m(), n = x.n(), ax = lat.axes();
  XNKeys out;
  out.total = checked_power(N, m, cap);
  std::set<std::vector<long>> seen;
  std::vector<long> a(m, 0);
  while (true) {
    std::vector<long> k(n * ax, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (a[i] != 0)
        for (std::size_t j = 0; j < n; ++j) {
          const auto& t = lat.tensor(i, j);
          for (std::size_t q = 0; q < ax; ++q) k[j * ax + q] += a[i] * t[q];
        }
    for (std::size_t j = 0; j < n; ++j) k[j * ax + ax - 1] %= 2;
    if (seen.insert(k).second) {
      out.keys.push_back(k);
      out.exponents.push_back(a);
    }
    std::size_t i = 0;
    while (i < m && a[i] == N - 1) a[i++] = 0;
    if (i == m) break;
    ++a[i];
  }
  return out;
}

}  // namespace detail

/// X(N) = {x₁^{a₁}⋯x_m^{a_m} : 0 ≤ aᵢ ≤ N−1}, deduplicated.
inline XNResult enumerate_XN(const MultGroup& x, long N, long cap = default_enum_cap) {
  auto keys = detail::xn_keys(x, N, cap);
  const auto& lat = x.lattice();
  const std::size_t ax = lat.axes();
  XNResult r;
  r.total = keys.total;
  r.collisions = keys.total - static_cast<long>(keys.keys.size());
  r.exponents = std::move(keys.exponents);
  for (const auto& k : keys.keys) {
    std::vector<FactoredRat> pt;
    for (std::size_t j = 0; j < x.n(); ++j) pt.push_back(lat.value(std::vector<long>(k.begin() + static_cast<long>(j * ax), k.begin() + static_cast<long>((j + 1) * ax))));
    r.points.push_back(std::move(pt));
  }
  return r;
}

inline std::vector<std::vector<BigRat>> point_values(const XNResult& xn) {
  std::vector<std::vector<BigRat>> out;
  for (const auto& pt : xn.points) {
    std::vector<BigRat> v;
    for (const auto& c : pt) v.push_back(c.value());
    out.push_back(std::move(v));
  }
  return out;
}

enum class Verdict { holds, fails, undecided };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

struct ConditionReport {
  std::string tag;
  Verdict verdict = Verdict::fails;
  std::string detail;
  std::vector<long> a, b;
  std::optional<LaurentPoly> poly;
  std::map<std::string, BigInt> numbers;
  std::map<std::string, bool> clauses;
};

/// Integer matrix whose kernel (restricted to the first n coordinates) is the
/// set of b with ⟨a, b⟩_X = 1. The sign axis becomes a parity row with a slack
/// column when it is not identically even.
inline std::pair<Grid<BigInt>, std::size_t> orthogonality_system(const MultGroup& x, const std::vector<long>& a) {
  const auto& lat = x.lattice();
  const std::size_t n = x.n(), np = lat.primes().size();
  Grid<BigInt> g;
  for (std::size_t q = 0; q < np; ++q) {
    std::vector<BigInt> row(n);
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      long s = 0;
      for (std::size_t i = 0; i < x.m(); ++i) s += a[i] * lat.tensor(i, j)[q];
      row[j] = s;
      any = any || s != 0;
    }
    if (any) g.push_back(std::move(row));
  }
  std::vector<long> parity(n);
  bool odd = false;
  for (std::size_t j = 0; j < n; ++j) {
    long s = 0;
    for (std::size_t i = 0; i < x.m(); ++i) s += a[i] * lat.tensor(i, j)[lat.sign_axis()];
    parity[j] = ((s % 2) + 2) % 2;
    odd = odd || parity[j] != 0;
  }
  std::size_t cols = n;
  if (odd) {
    cols = n + 1;
    for (auto& row : g) row.emplace_back(0);
    std::vector<BigInt> row(parity.begin(), parity.end());
    row.emplace_back(-2);
    g.push_back(std::move(row));
  }
  return {std::move(g), cols};
}

/// Condition (o): first canonical a with max-norm ≤ H admitting b ≠ 0 with ⟨a, b⟩_X = 1.
inline ConditionReport check_condition_o(const MultGroup& x, long H) {
  if (x.m() != x.n()) throw precondition_error("condition (o) needs a square generator matrix");
  ConditionReport rep;
  rep.tag = "(o)";
  const std::size_t n = x.n();
  for_each_canonical(n, H, [&](const std::vector<long>& a) {
    auto [g, cols] = orthogonality_system(x, a);
    std::vector<std::vector<BigInt>> ker;
    if (g.empty()) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<BigInt> e(n, BigInt(0));
        e[j] = 1;
        ker.push_back(e);
      }
    } else {
      ker = kernel(g, cols);
    }
    for (auto& k : ker) {
      k.resize(n);
      if (std::all_of(k.begin(), k.end(), [](const BigInt& z) { return z == 0; })) continue;
      normalize_sign(k);
      rep.a = a;
      rep.b = to_longs(k);
      return true;
    }
    return false;
  });
  if (rep.b.empty()) {
    rep.verdict = Verdict::fails;
    rep.detail = "none up to height " + std::to_string(H);
    return rep;
  }
  if (!pairing(x, rep.a, rep.b).is_one()) throw std::logic_error("condition (o) certificate failed re-verification");
  rep.verdict = Verdict::holds;
  return rep;
}

/// Condition (O) for the subgroups spanned by the given bases.
inline ConditionReport verify_condition_O(const MultGroup& x, const std::vector<std::vector<long>>& A, const std::vector<std::vector<long>>& B) {
  ConditionReport rep;
  rep.tag = "(O)";
  bool orth = true;
  for (const auto& a : A)
    for (const auto& b : B) orth = orth && pairing(x, a, b).is_one();
  auto rank_of = [](const std::vector<std::vector<long>>& basis, std::size_t dim) -> long {
    if (basis.empty()) return 0;
    Grid<BigInt> g;
    for (const auto& v : basis) {
      if (v.size() != dim) throw domain_error("basis vector of wrong length");
      g.emplace_back(v.begin(), v.end());
    }
    return static_cast<long>(rank(g));
  };
  const long mp = rank_of(A, x.m()), np = rank_of(B, x.n());
  const long m = static_cast<long>(x.m()), n = static_cast<long>(x.n());
  rep.numbers["m_prime"] = mp;
  rep.numbers["n_prime"] = np;
  rep.clauses["orthogonal"] = orth;
  rep.clauses["rank_inequality"] = mp * n + np * m > m * n;
  rep.verdict = orth && rep.clauses["rank_inequality"] ? Verdict::holds : Verdict::fails;
  return rep;
}

/// Monomials of total degree ≤ d in n variables, in graded lexicographic order.
inline std::vector<Exponent> simplex_support(std::size_t n, long d) {
  std::vector<Exponent> out;
  for (long t = 0; t <= d; ++t) {
    Exponent e(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
      if (i + 1 == n) {
        e[i] = left;
        out.push_back(e);
        return;
      }
      for (long k = left; k >= 0; --k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
    };
    rec(0, t);
  }
  return out;
}

/// A nonzero P with support in S vanishing on X(kN), if one exists.
inline std::optional<LaurentPoly> vanishing_poly_search(const MultGroup& x, const std::vector<Exponent>& S, long k, long N,
                                                        long enum_cap = default_enum_cap, long digit_cap = default_digit_cap) {
  if (S.empty()) throw domain_error("empty candidate support");
  const std::size_t n = x.n();
  for (const auto& s : S)
    if (s.size() != n) throw domain_error("support exponent of wrong length");
  if (k < 1) throw domain_error("multiplier must be positive");
  const auto keys = detail::xn_keys(x, k * N, enum_cap);
  const auto& lat = x.lattice();
  const std::size_t ax = lat.axes();
  RatMatrix ev(keys.keys.size(), S.size());
  long digits = 0;
  for (std::size_t r = 0; r < keys.keys.size(); ++r)
    for (std::size_t c = 0; c < S.size(); ++c) {
      std::vector<long> e(ax, 0);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < ax; ++q) e[q] += S[c][j] * keys.keys[r][j * ax + q];
      e[ax - 1] = ((e[ax - 1] % 2) + 2) % 2;
      ev(r, c) = lat.value(e).value();
      digits += static_cast<long>(mpz_sizeinbase(ev(r, c).get_num_mpz_t(), 10) + mpz_sizeinbase(ev(r, c).get_den_mpz_t(), 10));
      if (digits > digit_cap) throw cap_exceeded("evaluation matrix exceeds " + std::to_string(digit_cap) + " digits");
    }
  const auto ker = kernel(ev);
  if (ker.empty()) return std::nullopt;
  LaurentPoly p(n);
  for (std::size_t c = 0; c < S.size(); ++c) p.add_term(S[c], ker.front()[c]);
  for (const auto& pt : point_values(enumerate_XN(x, k * N, enum_cap)))
    if (laurent_eval(p, pt) != 0) throw std::logic_error("vanishing polynomial failed re-verification");
  return p;
}

inline bool vanishes_on_XN(const MultGroup& x, const LaurentPoly& p, long N, long cap = default_enum_cap) {
  if (p.nvars() != x.n()) throw domain_error("polynomial variable count does not match the group");
  for (const auto& pt : point_values(enumerate_XN(x, N, cap)))
    if (laurent_eval(p, pt) != 0) return false;
  return true;
}

/// Condition (M) for P: total degree < N^{m/n} and P = 0 on X(nN).
inline ConditionReport check_condition_M(const MultGroup& x, const LaurentPoly& p, long N, long cap = default_enum_cap) {
  if (p.is_zero()) throw precondition_error("condition (M) needs a nonzero polynomial");
  ConditionReport rep;
  rep.tag = "(M)";
  const LaurentPoly q = clear_monomial(p);
  const long deg = q.total_degree();
  // deg < N^{m/n}  ⟺  deg^n < N^m
  const bool degree_ok = ipow(BigInt(deg), x.n()) < ipow(BigInt(N), x.m());
  rep.numbers["degree"] = deg;
  rep.clauses["degree"] = degree_ok;
  rep.clauses["vanishing"] = vanishes_on_XN(x, q, static_cast<long>(x.n()) * N, cap);
  rep.verdict = degree_ok && rep.clauses["vanishing"] ? Verdict::holds : Verdict::fails;
  rep.poly = q;
  return rep;
}

/// Condition (m) for P: BKd(P) < N^n and P = 0 on X(nN).
inline ConditionReport check_condition_m(const MultGroup& x, const LaurentPoly& p, long N, long cap = default_enum_cap) {
  if (p.is_zero()) throw precondition_error("condition (m) needs a nonzero polynomial");
  ConditionReport rep;
  rep.tag = "(m)";
  const auto bk = bk_degree(p);
  const BigInt limit = ipow(BigInt(N), x.n());
  rep.numbers["bkd"] = bk.bkd;
  rep.numbers["limit"] = limit;
  rep.clauses["bk_degree"] = bk.bkd < limit;
  rep.clauses["vanishing"] = vanishes_on_XN(x, p, static_cast<long>(x.n()) * N, cap);
  rep.verdict = rep.clauses["bk_degree"] && rep.clauses["vanishing"] ? Verdict::holds : Verdict::fails;
  rep.poly = p;
  return rep;
}

/// Condition (m') for P: |S(P)| < N^n and P = 0 on X(2N).
inline ConditionReport check_condition_mprime(const MultGroup& x, const LaurentPoly& p, long N, long cap = default_enum_cap) {
  if (p.is_zero()) throw precondition_error("condition (m') needs a nonzero polynomial");
  ConditionReport rep;
  rep.tag = "(m')";
  const BigInt limit = ipow(BigInt(N), x.n());
  rep.numbers["support_size"] = static_cast<long>(p.size());
  rep.numbers["limit"] = limit;
  rep.clauses["support"] = BigInt(static_cast<long>(p.size())) < limit;
  rep.clauses["vanishing"] = vanishes_on_XN(x, p, 2 * N, cap);
  rep.verdict = rep.clauses["support"] && rep.clauses["vanishing"] ? Verdict::holds : Verdict::fails;
  rep.poly = p;
  return rep;
}

/// Condition (w) for a square pencil: structural rank < n.
inline ConditionReport check_condition_w(const MatrixPencil& a, const StructuralRankOptions& opt = {}) {
  if (a.rows() != a.cols()) throw precondition_error("condition (w) needs a square matrix");
  ConditionReport rep;
  rep.tag = "(w)";
  const auto r = structural_rank(a, opt);
  rep.numbers["rank"] = static_cast<long>(r.rank);
  rep.clauses["exact"] = r.exact;
  rep.verdict = r.rank < a.rows() ? Verdict::holds : Verdict::fails;
  if (!r.exact) rep.detail = "randomized rank; failure bound " + std::to_string(r.failure_bound);
  return rep;
}

/// Condition (W) for an m×n pencil: structural rank < mn/(m+n).
inline ConditionReport check_condition_W(const MatrixPencil& a, const StructuralRankOptions& opt = {}) {
  ConditionReport rep;
  rep.tag = "(W)";
  const auto r = structural_rank(a, opt);
  const long m = static_cast<long>(a.rows()), n = static_cast<long>(a.cols());
  rep.numbers["rank"] = static_cast<long>(r.rank);
  rep.clauses["exact"] = r.exact;
  rep.verdict = static_cast<long>(r.rank) * (m + n) < m * n ? Verdict::holds : Verdict::fails;
  return rep;
}

struct PadicRank {
  long lower = 0;  // certified pivots
  long upper = 0;  // structural rank of the log pencil with log p = 0
  bool certified() const noexcept { return lower == upper; }
};

/// Rank of (log_p x_ij) at the given precision. Pivots nonzero at precision
/// give the lower bound; the structural rank over the remaining primes is an
/// upper bound since every p-adic log matrix specializes that pencil.
inline PadicRank padic_log_rank(const MultGroup& x, long p, long precision) {
  const std::size_t m = x.m(), n = x.n();
  std::vector<std::vector<PadicNumber>> a(m);
  std::vector<std::vector<FactoredRat>> f(m);
  const BigInt bp(p);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i].push_back(iwasawa_log(x.gen(i, j).value(), p, precision));
      auto fac = x.gen(i, j).factors();
      fac.erase(bp);
      f[i].emplace_back(1, std::move(fac));
    }
  PadicRank r;
  std::vector<bool> row_used(m, false), col_used(n, false);
  while (true) {
    long bi = -1, bj = -1, bv = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!row_used[i] && !col_used[j] && !a[i][j].is_zero() && (bi < 0 || a[i][j].valuation() < bv)) {
          bi = static_cast<long>(i);
          bj = static_cast<long>(j);
          bv = a[i][j].valuation();
        }
    if (bi < 0) break;
    const auto pi = static_cast<std::size_t>(bi), pj = static_cast<std::size_t>(bj);
    row_used[pi] = col_used[pj] = true;
    ++r.lower;
    for (std::size_t i = 0; i < m; ++i) {
      if (row_used[i] || a[i][pj].is_zero()) continue;
      const auto factor = a[i][pj] / a[pi][pj];
      for (std::size_t j = 0; j < n; ++j)
        if (!col_used[j]) a[i][j] = a[i][j] - factor * a[pi][j];
      a[i][pj] = PadicNumber::zero(p, a[i][pj].precision());
    }
  }
  bool all_trivial = true;
  for (const auto& row : f)
    for (const auto& v : row) all_trivial = all_trivial && v.is_one();
  r.upper = all_trivial ? 0 : static_cast<long>(structural_rank(log_pencil(f)).rank);
  return r;
}

/// Condition (w) for the p-adic log matrix of a square group.
inline ConditionReport check_condition_w_padic(const MultGroup& x, long p, long precision) {
  if (x.m() != x.n()) throw precondition_error("condition (w) needs a square matrix");
  ConditionReport rep;
  rep.tag = "(w)";
  const auto r = padic_log_rank(x, p, precision);
  const long n = static_cast<long>(x.n());
  rep.numbers["rank_lower"] = r.lower;
  rep.numbers["rank_upper"] = r.upper;
  rep.clauses["certified"] = r.certified();
  if (r.lower == n) rep.verdict = Verdict::fails;
  else if (r.upper < n) rep.verdict = Verdict::holds;
  else {
    rep.verdict = Verdict::undecided;
    rep.detail = "undecided at precision " + std::to_string(precision);
  }
  if (r.certified()) rep.numbers["rank"] = r.lower;
  return rep;
}

struct P0Result {
  LaurentPoly poly{1};
  long factors = 0;
  BigInt factor_bound = 0;
};

/// Π over distinct c = ⟨v, b⟩_X, v ∈ Z^n(nN), of (t^b − c), with the monomial
/// content cleared. Vanishes on X(nN) when ⟨a, b⟩_X = 1.
inline P0Result construct_P0(const MultGroup& x, const std::vector<long>& a, const std::vector<long>& b, long N, long cap = default_enum_cap) {
  const std::size_t n = x.n();
  if (x.m() != n) throw precondition_error("construct_P0 needs a square generator matrix");
  auto nonzero = [](const std::vector<long>& v) { return std::any_of(v.begin(), v.end(), [](long z) { return z != 0; }); };
  if (!nonzero(a) || !nonzero(b)) throw precondition_error("construct_P0 needs nonzero a and b");
  if (!pairing(x, a, b).is_one()) throw precondition_error("construct_P0 needs ⟨a, b⟩_X = 1");
  const long M = static_cast<long>(n) * N;
  detail::checked_power(M, n, cap);
  std::set<FactoredRat> values;
  std::vector<long> v(n, 0);
  while (true) {
    values.insert(pairing(x, v, b));
    std::size_t i = 0;
    while (i < n && v[i] == M - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  // Π (u − c) as a polynomial in u = t^b
  std::vector<BigRat> coef{1};
  for (const auto& c : values) {
    const BigRat cv = c.value();
    std::vector<BigRat> next(coef.size() + 1, BigRat(0));
    for (std::size_t k = 0; k < coef.size(); ++k) {
      next[k + 1] += coef[k];
      next[k] -= cv * coef[k];
    }
    coef = std::move(next);
  }
  LaurentPoly p(n);
  for (std::size_t k = 0; k < coef.size(); ++k) {
    Exponent e(n);
    for (std::size_t j = 0; j < n; ++j) e[j] = static_cast<long>(k) * b[j];
    p.add_term(e, coef[k]);
  }
  P0Result r;
  r.poly = clear_monomial(p);
  r.factors = static_cast<long>(values.size());
  long amax = 0;
  for (long z : a) amax = std::max(amax, std::labs(z));
  r.factor_bound = ipow(BigInt(M), n - 1) * (1 + amax);
  return r;
}

struct P0Threshold {
  std::optional<long> n0;
  std::vector<ConditionReport> reports;  // one per N tried, starting at N = 1
};

/// Smallest N₀ ≤ nmax such that construct_P0 passes (m) for N₀, N₀+1, N₀+2.
inline P0Threshold p0_threshold(const MultGroup& x, const std::vector<long>& a, const std::vector<long>& b, long nmax, long cap = default_enum_cap) {
  P0Threshold t;
  long run = 0;
  for (long N = 1; N <= nmax + 2; ++N) {
    const auto p0 = construct_P0(x, a, b, N, cap);
    auto rep = check_condition_m(x, p0.poly, N, cap);
    rep.numbers["N"] = N;
    rep.numbers["factors"] = p0.factors;
    const bool ok = rep.verdict == Verdict::holds;
    t.reports.push_back(std::move(rep));
    run = ok ? run + 1 : 0;
    if (run == 3) {
      t.n0 = N - 2;
      return t;
    }
    if (N >= nmax && run == 0) break;
  }
  return t;
}

}  // namespace mcc
