#pragma once

#include <cstdint>
#include <map>

#include "rational.hpp"

namespace mcc {

/// Polynomial with integer coefficients in at most 8 variables, each of
/// degree below 256. Monomials are packed one byte per variable with
/// variable 0 in the most significant byte, so integer order on the packed
/// key is lexicographic order on exponents.
class MPoly {
 public:
  using Key = std::uint64_t;
  static constexpr std::size_t max_vars = 8;

  MPoly() = default;
  MPoly(int c) {  // NOLINT: implicit so Bareiss can write T(0), T(1)
    if (c != 0) terms_.emplace(0, BigInt(c));
  }
  explicit MPoly(const BigInt& c) {
    if (c != 0) terms_.emplace(0, c);
  }

  static MPoly variable(std::size_t i, const BigInt& c = 1) {
    if (i >= max_vars) throw cap_exceeded("too many polynomial variables");
    MPoly p;
    if (c != 0) p.terms_.emplace(Key{1} << (8 * (max_vars - 1 - i)), c);
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const MPoly& a, int c) {
    if (c == 0) return a.terms_.empty();
    return a.terms_.size() == 1 && a.terms_.begin()->first == 0 && a.terms_.begin()->second == c;
  }
  friend bool operator!=(const MPoly& a, int c) { return !(a == c); }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add(ka + kb, ca * cb);
    return r;
  }

  /// Exact quotient a / b; throws if b does not divide a.
  friend MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    if (b.terms_.size() == 1 && b.terms_.begin()->first == 0) {
      const BigInt& d = b.terms_.begin()->second;
      MPoly q;
      for (const auto& [k, c] : a.terms_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
          throw domain_error("inexact polynomial division");
        q.terms_.emplace_hint(q.terms_.end(), k, exact_div_int(c, d));
      }
      return q;
    }
    MPoly r = a, q;
    const auto& [lkb, lcb] = *b.terms_.rbegin();
    while (!r.is_zero()) {
      const auto [lkr, lcr] = *r.terms_.rbegin();
      if (!divides(lkb, lkr) || !mpz_divisible_p(lcr.get_mpz_t(), lcb.get_mpz_t()))
        throw domain_error("inexact polynomial division");
      const Key tk = lkr - lkb;
      const BigInt tc = exact_div_int(lcr, lcb);
      q.add(tk, tc);
      for (const auto& [k, c] : b.terms_) r.add(k + tk, -(c * tc));
    }
    return q;
  }

  /// Value at an integer point (missing coordinates read as zero).
  BigInt eval(const std::vector<BigInt>& x) const {
    BigInt s = 0;
    for (const auto& [k, c] : terms_) {
      BigInt t = c;
      for (std::size_t i = 0; i < max_vars; ++i) {
        unsigned e = static_cast<unsigned>((k >> (8 * (max_vars - 1 - i))) & 0xff);
        if (e == 0) continue;
        t *= i < x.size() ? ipow(x[i], e) : BigInt(0);
      }
      s += t;
    }
    return s;
  }

 private:
  static BigInt exact_div_int(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }

  static bool divides(Key d, Key n) {
    for (std::size_t i = 0; i < max_vars; ++i) {
      if (((d >> (8 * i)) & 0xff) > ((n >> (8 * i)) & 0xff)) return false;
    }
    return true;
  }

  void add(Key k, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Key, BigInt> terms_;

};

}  // namespace mcc
