#pragma once

#include <map>
#include <vector>

#include "rational.hpp"

namespace mcc {

namespace detail {

inline BigInt pollard_brent(const BigInt& n, unsigned long seed) {
  if (n % 2 == 0) return 2;
  BigInt y = 2 + seed, c = 1 + seed, g = 1, q = 1, x, ys;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](const BigInt& v) {
    BigInt t = v * v + c;
    return BigInt(t % n);
  };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = step(y);
        BigInt d = x - y;
        q = (q * abs(d)) % n;
      }
      g = gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = step(ys);
      BigInt d = x - ys;
      g = gcd(abs(d), n);
    } while (g == 1);
  }
  return g;
}

inline void factor_into(const BigInt& n, long mult, std::map<BigInt, long>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out[n] += mult;
    return;
  }
  BigInt d = n;
  for (unsigned long seed = 0; d == n; ++seed) d = pollard_brent(n, seed);
  factor_into(d, mult, out);
  factor_into(n / d, mult, out);
}

/// Prime factorization of a positive integer with exponents scaled by `mult`.
inline void factor_integer(BigInt n, long mult, std::map<BigInt, long>& out) {
  for (unsigned long p = 2; p < 1000 && n > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    out[BigInt(p)] += e * mult;
  }
  factor_into(n, mult, out);
}

}  // namespace detail

/// Nonzero rational number stored as sign times a product of prime powers.
class FactoredRat {
 public:
  using Factors = std::map<BigInt, long>;

  FactoredRat() = default;

  FactoredRat(int sign, Factors factors) : sign_(sign < 0 ? -1 : 1), factors_(std::move(factors)) {
    for (auto it = factors_.begin(); it != factors_.end();) {
      if (it->second == 0) {
        it = factors_.erase(it);
        continue;
      }
      if (mpz_probab_prime_p(it->first.get_mpz_t(), 30) == 0)
        throw domain_error("factor key " + it->first.get_str() + " is not prime");
      ++it;
    }
  }

  int sign() const noexcept { return sign_; }
  const Factors& factors() const noexcept { return factors_; }

  long exponent(const BigInt& p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
  }

  bool is_one() const noexcept { return sign_ == 1 && factors_.empty(); }

  BigRat value() const {
    BigInt num = 1, den = 1;
    for (const auto& [p, e] : factors_) {
      if (e > 0)
        num *= ipow(p, static_cast<unsigned long>(e));
      else
        den *= ipow(p, static_cast<unsigned long>(-e));
    }
    return make_rat(sign_ * num, den);
  }

  FactoredRat& operator*=(const FactoredRat& o) {
    sign_ *= o.sign_;
    for (const auto& [p, e] : o.factors_) {
      long& slot = factors_[p];
      slot += e;
      if (slot == 0) factors_.erase(p);
    }
    return *this;
  }

  friend FactoredRat operator*(FactoredRat a, const FactoredRat& b) { return a *= b; }

  FactoredRat pow(long k) const {
    FactoredRat r;
    if (k == 0) return r;
    r.sign_ = (sign_ < 0 && (k % 2 != 0)) ? -1 : 1;
    for (const auto& [p, e] : factors_) r.factors_.emplace(p, e * k);
    return r;
  }

  FactoredRat inverse() const { return pow(-1); }

  friend bool operator==(const FactoredRat& a, const FactoredRat& b) {
    return a.sign_ == b.sign_ && a.factors_ == b.factors_;
  }

  // Total order, only for use as a container key.
  friend bool operator<(const FactoredRat& a, const FactoredRat& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    return a.factors_ < b.factors_;
  }

 private:
  int sign_ = 1;
  Factors factors_;
};

inline FactoredRat factor_rational(const BigRat& q) {
  if (q == 0) throw domain_error("cannot factor zero");
  FactoredRat::Factors f;
  detail::factor_integer(abs(q.get_num()), 1, f);
  detail::factor_integer(q.get_den(), -1, f);
  return FactoredRat(sgn(q), std::move(f));
}

}  // namespace mcc
