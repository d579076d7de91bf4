#pragma once

#include <algorithm>
#include <climits>
#include <string>

#include "rational.hpp"

namespace mcc {

/// Element of Q_p known modulo p^precision (absolute precision).
///
/// A nonzero value is p^valuation · unit with unit a p-adic unit reduced
/// modulo p^(precision − valuation). A value congruent to zero modulo
/// p^precision is "zero at this precision"; its valuation is only known to be
/// at least `precision`.
class PadicNumber {
 public:
  PadicNumber() = default;

  /// Validating constructor for serialized values.
  PadicNumber(long p, long valuation, BigInt unit, long precision) : p_(p), prec_(precision) {
    check_prime(p);
    if (valuation >= precision) throw domain_error("p-adic valuation must be below the precision");
    if (unit <= 0 || unit >= modulus(p, precision - valuation) || mpz_divisible_ui_p(unit.get_mpz_t(), static_cast<unsigned long>(p)))
      throw domain_error("p-adic unit out of range");
    zero_ = false;
    val_ = valuation;
    unit_ = std::move(unit);
  }

  static PadicNumber zero(long p, long precision) {
    check_prime(p);
    PadicNumber z;
    z.p_ = p;
    z.prec_ = precision;
    return z;
  }

  static PadicNumber from_rational(const BigRat& q, long p, long precision) {
    check_prime(p);
    if (q == 0) return zero(p, precision);
    const BigInt bp(p);
    const long v = mcc::valuation(q, bp);
    if (v >= precision) return zero(p, precision);
    BigInt num = q.get_num(), den = q.get_den();
    strip(num, bp);
    strip(den, bp);
    PadicNumber x;
    x.p_ = p;
    x.prec_ = precision;
    x.zero_ = false;
    x.val_ = v;
    const BigInt mod = modulus(p, precision - v);
    x.unit_ = mod_mul(num, inverse(den, mod), mod);
    return x;
  }

  static PadicNumber from_integer(const BigInt& z, long p, long precision) { return from_rational(BigRat(z), p, precision); }

  long prime() const noexcept { return p_; }
  long precision() const noexcept { return prec_; }
  bool is_zero() const noexcept { return zero_; }

  /// Exact valuation; throws for a value that is zero at this precision.
  long valuation() const {
    if (zero_) throw precision_error("valuation of a value that is zero at precision " + std::to_string(prec_));
    return val_;
  }

  /// Certified lower bound on the valuation: the valuation, or the precision for zero.
  long valuation_lower_bound() const noexcept { return zero_ ? prec_ : val_; }

  const BigInt& unit() const noexcept { return unit_; }

  /// The rational p^valuation · unit representing this value.
  BigRat representative() const {
    if (zero_) return 0;
    return val_ >= 0 ? BigRat(unit_ * ipow(BigInt(p_), static_cast<unsigned long>(val_)))
                     : make_rat(unit_, ipow(BigInt(p_), static_cast<unsigned long>(-val_)));
  }

  /// Same value with precision lowered to `k` (never raised).
  PadicNumber with_precision(long k) const {
    if (k >= prec_) return *this;
    if (zero_ || val_ >= k) return zero(p_, k);
    PadicNumber r = *this;
    r.prec_ = k;
    r.unit_ %= modulus(p_, k - val_);
    return r;
  }

  PadicNumber operator-() const {
    if (zero_) return *this;
    PadicNumber r = *this;
    r.unit_ = modulus(p_, prec_ - val_) - unit_;
    return r;
  }

  friend PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
    a.check_same(b);
    const long prec = std::min(a.prec_, b.prec_);
    if (a.zero_) return b.with_precision(prec);
    if (b.zero_) return a.with_precision(prec);
    const long m = std::min(a.val_, b.val_);
    if (m >= prec) return zero(a.p_, prec);
    const BigInt bp(a.p_);
    BigInt u = a.unit_ * ipow(bp, static_cast<unsigned long>(a.val_ - m)) + b.unit_ * ipow(bp, static_cast<unsigned long>(b.val_ - m));
    return normalized(a.p_, m, std::move(u), prec);
  }

  friend PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

  friend PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
    a.check_same(b);
    const long prec = std::min(a.valuation_lower_bound() + b.prec_, b.valuation_lower_bound() + a.prec_);
    if (a.zero_ || b.zero_) return zero(a.p_, prec);
    return normalized(a.p_, a.val_ + b.val_, a.unit_ * b.unit_, prec);
  }

  /// Quotient; the divisor must be nonzero at its precision. Relative precision
  /// of the result is the smaller of the two relative precisions.
  friend PadicNumber operator/(const PadicNumber& a, const PadicNumber& b) {
    a.check_same(b);
    if (b.zero_) throw precision_error("p-adic division by a value that is zero at its precision");
    if (a.zero_) return zero(a.p_, a.prec_ - b.val_);
    const long rel = std::min(a.prec_ - a.val_, b.prec_ - b.val_);
    const BigInt mod = modulus(a.p_, rel);
    PadicNumber r;
    r.p_ = a.p_;
    r.zero_ = false;
    r.val_ = a.val_ - b.val_;
    r.prec_ = r.val_ + rel;
    r.unit_ = mod_mul(a.unit_, inverse(b.unit_, mod), mod);
    return r;
  }

  /// Product with an exact nonzero rational; relative precision is preserved.
  PadicNumber scaled(const BigRat& c) const {
    if (c == 0) throw domain_error("scaling by zero");
    const BigInt bp(p_);
    const long e = mcc::valuation(c, bp);
    if (zero_) return zero(p_, prec_ + e);
    BigInt num = c.get_num(), den = c.get_den();
    strip(num, bp);
    strip(den, bp);
    const BigInt mod = modulus(p_, prec_ - val_);
    PadicNumber r = *this;
    r.val_ += e;
    r.prec_ += e;
    r.unit_ = mod_mul(mod_mul(unit_, num, mod), inverse(den, mod), mod);
    return r;
  }

  PadicNumber pow(unsigned long n) const {
    if (n == 0) return from_rational(1, p_, prec_);
    PadicNumber r, base = *this;
    bool first = true;
    while (n > 0) {
      if (n & 1UL) {
        r = first ? base : r * base;
        first = false;
      }
      n >>= 1UL;
      if (n > 0) base = base * base;
    }
    return r;
  }

  /// Equality modulo p^min(precisions).
  friend bool congruent(const PadicNumber& a, const PadicNumber& b) { return (a - b).is_zero(); }

  /// Structural equality of the stored data (prime, precision and digits).
  friend bool operator==(const PadicNumber& a, const PadicNumber& b) {
    return a.p_ == b.p_ && a.prec_ == b.prec_ && a.zero_ == b.zero_ && (a.zero_ || (a.val_ == b.val_ && a.unit_ == b.unit_));
  }

  static BigInt modulus(long p, long e) {
    if (e < 0) throw std::logic_error("negative p-adic modulus exponent");
    return ipow(BigInt(p), static_cast<unsigned long>(e));
  }

 private:
  static void check_prime(long p) {
    if (p < 2 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) == 0)
      throw domain_error("p-adic prime must be a prime number, got " + std::to_string(p));
  }

  static void strip(BigInt& z, const BigInt& p) { mpz_remove(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()); }

  static BigInt inverse(const BigInt& a, const BigInt& mod) {
    BigInt r;
    if (mod == 1) return 0;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t()) == 0) throw std::logic_error("non-invertible p-adic unit");
    return r;
  }

  static BigInt mod_mul(const BigInt& a, const BigInt& b, const BigInt& mod) {
    BigInt r = (a * b) % mod;
    if (r < 0) r += mod;
    return r;
  }

  static PadicNumber normalized(long p, long v, BigInt u, long prec) {
    if (v >= prec) return zero(p, prec);
    BigInt mod = modulus(p, prec - v);
    u %= mod;
    if (u < 0) u += mod;
    if (u == 0) return zero(p, prec);
    const BigInt bp(p);
    v += static_cast<long>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), bp.get_mpz_t()));
    PadicNumber r;
    r.p_ = p;
    r.prec_ = prec;
    r.zero_ = false;
    r.val_ = v;
    r.unit_ = std::move(u) % modulus(p, prec - v);
    return r;
  }

  void check_same(const PadicNumber& o) const {
    if (o.p_ != p_) throw domain_error("p-adic numbers over different primes");
  }

  long p_ = 2;
  long prec_ = 0;
  bool zero_ = true;
  long val_ = 0;
  BigInt unit_ = 0;
};

inline long floor_log(long p, long n) {
  long e = 0;
  for (long x = n; x >= p; x /= p) ++e;
  return e;
}

/// Iwasawa's p-adic logarithm of a nonzero rational, to absolute precision `precision`.
/// With x = ±p^v·u, returns log(u^e)/e for e = p−1 (e = 2 when p = 2), so
/// that log(p) = log(−1) = 0; the series log(1+t) is summed until the
/// remaining terms vanish modulo p^precision.
inline PadicNumber iwasawa_log(const BigRat& x, long p, long precision) {
  if (x == 0) throw domain_error("logarithm of zero");
  const BigInt bp(p);
  const long v = valuation(x, bp);
  const BigRat u = abs(x) / rpow(BigRat(bp), v);
  const long e = p == 2 ? 2 : p - 1;
  const BigRat t = rpow(u, e) - 1;
  auto result = PadicNumber::zero(p, precision);
  if (t == 0) return result;
  const long s = valuation(t, bp);  // ≥ 1 (≥ 3 when p = 2)
  const long target = precision + valuation(BigInt(e), bp);
  long nmax = 1;
  while (nmax * s - floor_log(p, nmax) < target) ++nmax;
  const long work = target + floor_log(p, nmax) + 1;

  const auto tp = PadicNumber::from_rational(t, p, work);
  auto power = tp;
  auto sum = PadicNumber::zero(p, work);
  for (long n = 1; n <= nmax; ++n) {
    if (n > 1) power = power * tp;
    auto term = power.scaled(make_rat(n % 2 == 1 ? 1 : -1, n));
    sum = sum + term;
  }
  result = sum.scaled(make_rat(1, e));
  if (result.precision() < precision) throw std::logic_error("p-adic logarithm lost precision");
  return result.with_precision(precision);
}

/// p-adic exponential; requires v(w) ≥ 1 (v(w) ≥ 2 when p = 2). The result
/// has the precision of w.
inline PadicNumber padic_exp(const PadicNumber& w) {
  const long p = w.prime();
  const long need = p == 2 ? 2 : 1;
  if (w.valuation_lower_bound() < need)
    throw precondition_error("p-adic exponential needs valuation ≥ " + std::to_string(need));
  const long k = w.precision();
  auto sum = PadicNumber::from_rational(1, p, k);
  if (w.is_zero()) return sum;
  const long v = w.valuation();
  // v(wⁿ/n!) ≥ n·(v − 1/(p−1)); stop once that bound reaches k.
  long nmax = 1;
  while (nmax * (v * (p - 1) - 1) < k * (p - 1)) ++nmax;
  auto term = sum;
  for (long n = 1; n <= nmax; ++n) {
    term = (term * w).scaled(make_rat(1, n));
    sum = sum + term;
  }
  return sum.with_precision(k);
}

}  // namespace mcc
