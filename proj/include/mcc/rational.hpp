#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace mcc {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& n, const BigInt& d = 1) {
  if (d == 0) throw domain_error("zero denominator");
  BigRat q(n, d);
  q.canonicalize();
  return q;
}

/// Parses "a", "-a/b" or "a/b" into a canonical rational.
inline BigRat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRat(BigInt(s));
    return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw domain_error("not a rational number: '" + s + "'");
  }
}

inline std::string to_string(const BigRat& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Integer power with possibly negative exponent; base must be nonzero when e < 0.
inline BigRat rpow(const BigRat& base, long e) {
  if (e == 0) return BigRat(1);
  if (e < 0 && base == 0) throw domain_error("zero raised to a negative power");
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  BigRat r(ipow(base.get_num(), k), ipow(base.get_den(), k));
  r.canonicalize();
  if (e < 0) r = 1 / r;
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// p-adic valuation of a nonzero integer.
inline long valuation(const BigInt& z, const BigInt& p) {
  if (z == 0) throw domain_error("valuation of zero");
  BigInt r;
  return static_cast<long>(mpz_remove(r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

inline long valuation(const BigRat& q, const BigInt& p) {
  if (q == 0) throw domain_error("valuation of zero");
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

/// Scales a rational vector to a primitive integer vector with the same direction.
inline std::vector<BigInt> primitive_integer(const std::vector<BigRat>& v) {
  BigInt den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt z = x.get_num() * (den / x.get_den());
    g = gcd(g, z);
    out.push_back(std::move(z));
  }
  if (g > 1)
    for (auto& z : out) z /= g;
  return out;
}

/// Flips the sign so that the first nonzero entry is positive.
template <class T>
void normalize_sign(std::vector<T>& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

inline std::vector<BigRat> to_rat(const std::vector<BigInt>& v) {
  return {v.begin(), v.end()};
}

inline std::vector<BigRat> to_rat(const std::vector<long>& v) {
  std::vector<BigRat> out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace mcc
