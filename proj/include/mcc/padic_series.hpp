#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic.hpp"

namespace mcc {

/// Lower bound v(c_k) ≥ offset + slope·k valid for every index k beyond the
/// stored coefficients. `exact` means those coefficients are all zero.
struct TailBound {
  bool exact = true;
  BigRat offset = 0;
  BigRat slope = 0;
};

class PadicSeries {
 public:
  PadicSeries(long p, std::vector<PadicNumber> coeffs, TailBound tail = {}) : p_(p), c_(std::move(coeffs)), tail_(std::move(tail)) {
    if (c_.empty()) throw domain_error("series needs at least one coefficient");
    for (const auto& c : c_)
      if (c.prime() != p_) throw domain_error("series coefficients over different primes");
  }

  /// Exact polynomial with rational coefficients, stored at the given precision.
  static PadicSeries polynomial(long p, const std::vector<BigRat>& coeffs, long precision) {
    std::vector<PadicNumber> c;
    for (const auto& q : coeffs) c.push_back(PadicNumber::from_rational(q, p, precision));
    return PadicSeries(p, std::move(c));
  }

  long prime() const noexcept { return p_; }
  long order() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<PadicNumber>& coeffs() const noexcept { return c_; }
  const PadicNumber& coeff(long k) const { return c_.at(static_cast<std::size_t>(k)); }
  const TailBound& tail() const noexcept { return tail_; }

  PadicSeries scaled(const BigRat& c) const {
    std::vector<PadicNumber> out;
    for (const auto& x : c_) out.push_back(x.scaled(c));
    TailBound t = tail_;
    if (!t.exact) t.offset += valuation(c, BigInt(p_));
    return PadicSeries(p_, std::move(out), t);
  }

 private:
  long p_;
  std::vector<PadicNumber> c_;
  TailBound tail_;
};

/// Coefficients Σ bᵢ wᵢᵏ / k! of f(z) = Σ bᵢ e^{wᵢ z} for k = 0..T.
inline PadicSeries exp_sum_series(const std::vector<PadicNumber>& b, const std::vector<PadicNumber>& w, long T) {
  if (b.empty() || b.size() != w.size()) throw domain_error("exp_sum_series needs equally many b and w");
  if (T < 0) throw domain_error("truncation order must be non-negative");
  const long p = b.front().prime();
  long beta = b.front().valuation_lower_bound(), omega = w.front().valuation_lower_bound();
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].prime() != p || w[i].prime() != p) throw domain_error("exp_sum_series over mixed primes");
    if (w[i].valuation_lower_bound() < 2) throw precondition_error("exp_sum_series needs v(w) ≥ 2");
    beta = std::min(beta, b[i].valuation_lower_bound());
    omega = std::min(omega, w[i].valuation_lower_bound());
  }
  std::vector<PadicNumber> terms = b, coeffs;
  for (long k = 0; k <= T; ++k) {
    if (k > 0)
      for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = (terms[i] * w[i]).scaled(make_rat(1, k));
    PadicNumber sum = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) sum = sum + terms[i];
    coeffs.push_back(sum);
  }
  // v(bᵢwᵢᵏ/k!) ≥ β + kω − (k−1)/(p−1)
  const BigRat frac = make_rat(1, p - 1);
  return PadicSeries(p, std::move(coeffs), TailBound{false, BigRat(beta) + frac, BigRat(omega) - frac});
}

inline PadicSeries exp_sum_series(const std::vector<BigRat>& b, const std::vector<BigRat>& w, long p, long T, long precision) {
  std::vector<PadicNumber> pb, pw;
  for (const auto& x : b) pb.push_back(PadicNumber::from_rational(x, p, precision));
  for (const auto& x : w) pw.push_back(PadicNumber::from_rational(x, p, precision));
  return exp_sum_series(pb, pw, T);
}

struct NewtonPolygon {
  std::vector<std::pair<long, long>> vertices;  // (index, valuation)

  /// Slopes of consecutive segments, as rationals.
  std::vector<BigRat> slopes() const {
    std::vector<BigRat> s;
    for (std::size_t i = 1; i < vertices.size(); ++i)
      s.push_back(make_rat(vertices[i].second - vertices[i - 1].second, vertices[i].first - vertices[i - 1].first));
    return s;
  }

  /// Total horizontal length of segments with slope ≤ 0.
  long nonpositive_length() const {
    long len = 0;
    for (std::size_t i = 1; i < vertices.size(); ++i)
      if (vertices[i].second <= vertices[i - 1].second) len += vertices[i].first - vertices[i - 1].first;
    return len;
  }
};

/// Lower convex hull of (k, v(c_k)) over coefficients nonzero at precision.
inline NewtonPolygon newton_polygon(const PadicSeries& s) {
  std::vector<std::pair<long, long>> pts;
  for (long k = 0; k <= s.order(); ++k)
    if (!s.coeff(k).is_zero()) pts.emplace_back(k, s.coeff(k).valuation());
  if (pts.empty()) throw precision_error("polygon not certified at this truncation/precision: no nonzero coefficient");
  NewtonPolygon np;
  auto& h = np.vertices;
  for (const auto& q : pts) {
    while (h.size() >= 2) {
      const auto& a = h[h.size() - 2];
      const auto& b = h.back();
      // drop b unless it lies strictly below segment a–q
      const long cross = (b.first - a.first) * (q.second - a.second) - (b.second - a.second) * (q.first - a.first);
      if (cross <= 0) h.pop_back();
      else break;
    }
    h.push_back(q);
  }
  return np;
}

/// Number of zeros with v(z) ≥ 0, with multiplicity. Throws precision_error
/// unless the truncation and the tracked precisions determine it.
inline long roots_in_unit_disc(const PadicSeries& s) {
  const NewtonPolygon np = newton_polygon(s);
  long mu = np.vertices.front().second;
  for (const auto& v : np.vertices) mu = std::min(mu, v.second);
  long K = 0;
  for (long k = 0; k <= s.order(); ++k)
    if (!s.coeff(k).is_zero() && s.coeff(k).valuation() == mu) K = k;
  for (long k = 0; k <= s.order(); ++k) {
    const auto& c = s.coeff(k);
    if (!c.is_zero()) continue;
    const long need = k < K ? mu : mu + 1;
    if (c.precision() < need)
      throw precision_error("polygon not certified at this truncation/precision: coefficient " + std::to_string(k) + " known only mod p^" +
                            std::to_string(c.precision()));
  }
  const auto& t = s.tail();
  if (!t.exact) {
    const BigRat first = t.offset + t.slope * (s.order() + 1);
    if (t.slope < 0 || first <= mu) throw precision_error("polygon not certified at this truncation/precision: tail not bounded past index " + std::to_string(s.order()));
  }
  return K;
}

struct RootBoundReport {
  long n = 0;
  long p = 0;
  long count = 0;
  long bound = 0;
  bool pass = false;
};

/// Zeros of Σ bᵢe^{wᵢz} in the closed unit disc against ⌊p(n−1)/(p−1)⌋.
inline RootBoundReport verify_padic_root_bound(const std::vector<PadicNumber>& b, const std::vector<PadicNumber>& w, long T) {
  bool any = false;
  for (const auto& x : b) any = any || !x.is_zero();
  if (!any) throw precondition_error("all coefficients b are zero");
  const auto s = exp_sum_series(b, w, T);
  RootBoundReport r;
  r.n = static_cast<long>(b.size());
  r.p = s.prime();
  r.count = roots_in_unit_disc(s);
  r.bound = r.p * (r.n - 1) / (r.p - 1);
  r.pass = r.count <= r.bound;
  return r;
}

inline RootBoundReport verify_padic_root_bound(const std::vector<BigRat>& b, const std::vector<BigRat>& w, long p, long T, long precision) {
  std::vector<PadicNumber> pb, pw;
  for (const auto& x : b) pb.push_back(PadicNumber::from_rational(x, p, precision));
  for (const auto& x : w) pw.push_back(PadicNumber::from_rational(x, p, precision));
  return verify_padic_root_bound(pb, pw, T);
}

/// d₀…d_kmax: d₀ = … = d_{i−2} = 0, d_{i−1} = 1 and d_k = s₁d_{k−1} + … + s_i d_{k−i},
/// where s_j = (−1)^{j+1} e_j(w).
inline std::vector<PadicNumber> dk_sequence(const std::vector<PadicNumber>& w, long kmax) {
  const long i = static_cast<long>(w.size());
  if (i == 0) throw domain_error("dk_sequence needs at least one w");
  if (kmax < i - 1) throw domain_error("kmax must be at least i − 1");
  const long p = w.front().prime();
  long work = w.front().precision();
  for (const auto& x : w) {
    if (x.prime() != p) throw domain_error("dk_sequence over mixed primes");
    if (x.valuation_lower_bound() < 2) throw precondition_error("dk_sequence needs v(w) ≥ 2");
    work = std::min(work, x.precision());
  }
  // e_j from the coefficients of Π(1 + wⱼ z)
  std::vector<PadicNumber> e{PadicNumber::from_rational(1, p, work)};
  for (const auto& x : w) {
    e.push_back(PadicNumber::zero(p, work));
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] = e[j] + e[j - 1] * x;
  }
  std::vector<PadicNumber> s(static_cast<std::size_t>(i) + 1);
  for (long j = 1; j <= i; ++j) s[static_cast<std::size_t>(j)] = j % 2 == 1 ? e[static_cast<std::size_t>(j)] : -e[static_cast<std::size_t>(j)];
  std::vector<PadicNumber> d;
  for (long k = 0; k <= kmax; ++k) {
    if (k < i - 1) d.push_back(PadicNumber::zero(p, work));
    else if (k == i - 1) d.push_back(PadicNumber::from_rational(1, p, work));
    else {
      PadicNumber acc = s[1] * d[static_cast<std::size_t>(k - 1)];
      for (long j = 2; j <= i; ++j) acc = acc + s[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(k - j)];
      d.push_back(acc);
    }
  }
  return d;
}

/// Exact d_k as the z^{i−1} coefficient of z^k reduced modulo Π(z − wⱼ).
inline std::vector<BigRat> dk_by_reduction(const std::vector<BigRat>& w, long kmax) {
  const std::size_t i = w.size();
  if (i == 0) throw domain_error("dk_by_reduction needs at least one w");
  // monic m(z) = z^i + a_{i−1}z^{i−1} + … + a₀
  std::vector<BigRat> m{1};
  for (const auto& x : w) {
    std::vector<BigRat> next(m.size() + 1, BigRat(0));
    for (std::size_t j = 0; j < m.size(); ++j) {
      next[j + 1] += m[j];
      next[j] -= x * m[j];
    }
    m = std::move(next);
  }
  std::vector<BigRat> r(i, BigRat(0));  // z^k mod m
  r[0] = 1;
  std::vector<BigRat> out;
  for (long k = 0; k <= kmax; ++k) {
    out.push_back(r[i - 1]);
    const BigRat top = r[i - 1];
    for (std::size_t j = i - 1; j >= 1; --j) r[j] = r[j - 1] - top * m[j];
    r[0] = -top * m[0];
  }
  return out;
}

struct DkBoundCheck {
  bool holds = true;
  bool certified = true;
  long first_failure = -1;
};

/// v(d_k) ≥ (p/(p−1))(k−i+1) for every k, as the integer inequality (p−1)·v ≥ p(k−i+1).
inline DkBoundCheck check_dk_bound(const std::vector<PadicNumber>& d, long i) {
  DkBoundCheck r;
  for (long k = 0; k < static_cast<long>(d.size()); ++k) {
    const auto& x = d[static_cast<std::size_t>(k)];
    const long p = x.prime();
    const long rhs = p * (k - i + 1);
    const long lhs = (p - 1) * x.valuation_lower_bound();
    if (lhs >= rhs) continue;
    if (x.is_zero()) r.certified = false;
    else r.holds = false;
    if (r.first_failure < 0) r.first_failure = k;
  }
  return r;
}

/// max_k (k·logR − v(c_k)) over coefficients nonzero at precision.
inline BigRat gauss_norm(const PadicSeries& s, const BigRat& logR) {
  std::optional<BigRat> best;
  for (long k = 0; k <= s.order(); ++k) {
    if (s.coeff(k).is_zero()) continue;
    BigRat x = logR * k - s.coeff(k).valuation();
    if (!best || x > *best) best = x;
  }
  if (!best) throw precision_error("gauss norm of a series that is zero at precision");
  return *best;
}

struct SchwarzReport {
  long roots = 0;
  BigRat bound = 0;
  bool pass = false;
};

/// Compares the root count with log_p(|f|_p / |f|_1).
inline SchwarzReport schwarz_check(const PadicSeries& s) {
  SchwarzReport r;
  r.roots = roots_in_unit_disc(s);
  r.bound = gauss_norm(s, 1) - gauss_norm(s, 0);
  r.pass = r.roots <= r.bound;
  return r;
}

struct RealZeroReport {
  long sign_changes = 0;
  long bound = 0;
  bool pass = false;
};

/// Sign changes of Σ bᵢe^{wᵢz} on `grid` equally spaced points of [lo, hi].
inline RealZeroReport real_exp_sum_zero_count(const std::vector<BigRat>& b, const std::vector<BigRat>& w, const BigRat& lo, const BigRat& hi,
                                              long grid) {
  if (b.empty() || b.size() != w.size()) throw domain_error("real_exp_sum_zero_count needs equally many b and w");
  if (grid < 2) throw domain_error("grid needs at least two points");
  if (hi < lo) throw domain_error("empty interval");
  std::vector<long double> bb, ww;
  for (std::size_t i = 0; i < b.size(); ++i) {
    bb.push_back(static_cast<long double>(b[i].get_d()));
    ww.push_back(static_cast<long double>(w[i].get_d()));
  }
  const long double a = lo.get_d(), h = hi.get_d();
  int last = 0;
  RealZeroReport r;
  for (long g = 0; g < grid; ++g) {
    const long double z = a + (h - a) * static_cast<long double>(g) / static_cast<long double>(grid - 1);
    long double f = 0;
    for (std::size_t i = 0; i < bb.size(); ++i) f += bb[i] * std::exp(ww[i] * z);
    const int sg = f > 0 ? 1 : (f < 0 ? -1 : 0);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++r.sign_changes;
    last = sg;
  }
  r.bound = static_cast<long>(b.size()) - 1;
  r.pass = r.sign_changes <= r.bound;
  return r;
}

}  // namespace mcc
