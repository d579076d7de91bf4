#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "rational.hpp"

namespace mcc {

using Exponent = std::vector<long>;

/// Multivariate Laurent polynomial with rational coefficients. Zero
/// coefficients are never stored, so the key set is the support.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, BigRat>;

  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw domain_error("Laurent polynomial needs at least one variable");
  }

  LaurentPoly(std::size_t nvars, const Terms& terms) : LaurentPoly(nvars) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static LaurentPoly constant(std::size_t nvars, const BigRat& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }

  static LaurentPoly monomial(const Exponent& e, const BigRat& c = 1) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  std::vector<Exponent> support() const {
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
  }

  BigRat coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRat(0) : it->second;
  }

  void add_term(const Exponent& e, const BigRat& c) {
    if (e.size() != nvars_) throw domain_error("exponent length does not match variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly r(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  /// Multiplies by the monomial t^shift.
  LaurentPoly shifted(const Exponent& shift) const {
    if (shift.size() != nvars_) throw domain_error("shift length does not match variable count");
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent s = e;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
      r.terms_.emplace(std::move(s), c);
    }
    return r;
  }

  /// Maximum over the support of the sum of exponents.
  long total_degree() const {
    if (is_zero()) throw domain_error("degree of the zero polynomial");
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      long d = std::accumulate(e.begin(), e.end(), 0L);
      if (first || d > best) best = d;
      first = false;
    }
    return best;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_same(const LaurentPoly& o) const {
    if (o.nvars_ != nvars_) throw domain_error("Laurent polynomials in different variable counts");
  }

  std::size_t nvars_;
  Terms terms_;
};

/// Exact value of P at a torus point; every coordinate must be nonzero.
inline BigRat laurent_eval(const LaurentPoly& p, const std::vector<BigRat>& z) {
  if (z.size() != p.nvars()) throw domain_error("point dimension does not match variable count");
  for (const auto& x : z)
    if (x == 0) throw domain_error("Laurent evaluation at a point with a zero coordinate");
  // Cache powers per coordinate: supports are small and exponents repeat.
  std::vector<std::map<long, BigRat>> cache(z.size());
  auto power = [&](std::size_t j, long e) -> const BigRat& {
    auto it = cache[j].find(e);
    if (it != cache[j].end()) return it->second;
    return cache[j].emplace(e, rpow(z[j], e)).first->second;
  };
  BigRat sum = 0;
  for (const auto& [e, c] : p.terms()) {
    BigRat t = c;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) t *= power(j, e[j]);
    sum += t;
  }
  return sum;
}

/// Shift exponent making every exponent nonnegative with each variable
/// attaining exponent zero somewhere in the support.
inline Exponent clearing_shift(const LaurentPoly& p) {
  if (p.is_zero()) throw domain_error("cannot clear monomials from the zero polynomial");
  Exponent lo = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], e[i]);
  for (auto& x : lo) x = -x;
  return lo;
}

inline LaurentPoly clear_monomial(const LaurentPoly& p) { return p.shifted(clearing_shift(p)); }

}  // namespace mcc
