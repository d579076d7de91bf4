// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <Eigen/Dense>
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>

#include "mcc/mcc.hpp"

using namespace mcc;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

MatrixPencil skew3() {
  MatrixPencil p(3, 3);
  p.add("x1", RatMatrix::from_ints({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
  p.add("x2", RatMatrix::from_ints({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}));
  p.add("x3", RatMatrix::from_ints({{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}));
  return p;
}

Outcome structural_rank_check() {
  StructuralRankOptions o;
  o.mode = RankMode::exact;
  if (structural_rank(skew3(), o).rank != 2) return {false, "exact rank is not 2"};
  o.mode = RankMode::randomized;
  for (std::uint64_t s = 0; s < 100; ++s) {
    o.seed = s;
    if (structural_rank(skew3(), o).rank != 2) return {false, "randomized rank differs at seed " + std::to_string(s)};
  }
  return {true, "exact 2, randomized 2 on 100 seeds"};
}

Outcome witness_check() {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const auto n = static_cast<std::size_t>(2 + k % 4), dim = static_cast<std::size_t>(1 + (k / 4) % 3);
    const auto basis = detail::random_singular_subspace(rng, n, dim);
    const auto w = singular_subspace_witness(basis);
    if (!is_nonzero(w.w) || !is_nonzero(w.v)) return {false, "zero witness at instance " + std::to_string(k)};
    for (const auto& a : basis)
      if (bilinear(w.w, a, w.v) != 0) return {false, "witness fails at instance " + std::to_string(k)};
  }
  return {true, "200 subspaces, every witness exact"};
}

Outcome mixed_volume_check() {
  for (long d = 1; d <= 6; ++d)
    for (long e = 1; e <= 6; ++e)
      if (bk_number({standard_simplex(2, d), standard_simplex(2, e)}) != d * e) return {false, "BK(dΔ, eΔ) != de"};
  std::mt19937_64 rng(77);
  int done = 0;
  while (done < 100) {
    LaurentPoly p(2);
    const long terms = uniform(rng, 2, 6);
    for (long s = 0; s < terms; ++s) p.add_term({uniform(rng, -4, 4), uniform(rng, -4, 4)}, uniform(rng, 1, 9));
    p = clear_monomial(p);
    if (p.size() < 2) continue;
    ++done;
    if (bk_degree(p).entries.front() != p.total_degree()) return {false, "first BK-degree entry differs from total degree"};
  }
  return {true, "36 Bezout pairs, 100 BK-degree supports"};
}

// ---- Bernstein: numerical torus solutions of random sparse bivariate systems ----

using Cx = std::complex<double>;
using Sparse = std::map<std::pair<long, long>, long>;  // (i, j) -> coefficient of x^i y^j

std::vector<BigRat> coeffs_in_y(const Sparse& f, const BigRat& x, long dy) {
  std::vector<BigRat> c(static_cast<std::size_t>(dy) + 1, BigRat(0));
  for (const auto& [e, a] : f) c[static_cast<std::size_t>(e.second)] += BigRat(a) * rpow(x, e.first);
  return c;
}

// Sylvester determinant in y, exact at a rational x.
BigRat resultant_at(const Sparse& f, const Sparse& g, const BigRat& x, long df, long dg) {
  const auto a = coeffs_in_y(f, x, df), b = coeffs_in_y(g, x, dg);
  const std::size_t n = static_cast<std::size_t>(df + dg);
  RatMatrix s(n, n);
  for (long r = 0; r < dg; ++r)
    for (long k = 0; k <= df; ++k) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + df - k)) = a[static_cast<std::size_t>(k)];
  for (long r = 0; r < df; ++r)
    for (long k = 0; k <= dg; ++k) s(static_cast<std::size_t>(dg + r), static_cast<std::size_t>(r + dg - k)) = b[static_cast<std::size_t>(k)];
  return det(s);
}

// Exact Lagrange interpolation from the points 0..deg, ascending coefficients.
std::vector<BigRat> interpolate(const std::vector<BigRat>& vals) {
  const std::size_t n = vals.size();
  std::vector<BigRat> out(n, BigRat(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigRat> basis{1};
    BigRat denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<BigRat> next(basis.size() + 1, BigRat(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= BigRat(static_cast<long>(j)) * basis[k];
      }
      basis = next;
      denom *= BigRat(static_cast<long>(i) - static_cast<long>(j));
    }
    for (std::size_t k = 0; k < n; ++k) out[k] += vals[i] * basis[k] / denom;
  }
  return out;
}

std::vector<Cx> poly_roots(std::vector<Cx> c) {
  while (!c.empty() && std::abs(c.back()) < 1e-14) c.pop_back();
  if (c.size() < 2) return {};
  const auto n = static_cast<Eigen::Index>(c.size() - 1);
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (Eigen::Index i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp);
  std::vector<Cx> r;
  for (Eigen::Index i = 0; i < n; ++i) r.push_back(es.eigenvalues()(i));
  return r;
}

Cx eval2(const Sparse& f, Cx x, Cx y) {
  Cx s = 0;
  for (const auto& [e, a] : f) s += static_cast<double>(a) * std::pow(x, static_cast<double>(e.first)) * std::pow(y, static_cast<double>(e.second));
  return s;
}

Cx deriv(const Sparse& f, Cx x, Cx y, bool wrt_x) {
  Cx s = 0;
  for (const auto& [e, a] : f) {
    const long k = wrt_x ? e.first : e.second;
    if (k == 0) continue;
    const Cx dx = wrt_x ? static_cast<double>(k) * std::pow(x, static_cast<double>(e.first - 1)) * std::pow(y, static_cast<double>(e.second))
                        : static_cast<double>(k) * std::pow(x, static_cast<double>(e.first)) * std::pow(y, static_cast<double>(e.second - 1));
    s += static_cast<double>(a) * dx;
  }
  return s;
}

// Converged only when the last step is small relative to the point itself: near a
// singular zero on an axis Newton creeps linearly and this ratio stays large.
bool newton(const Sparse& f, const Sparse& g, Cx& x, Cx& y) {
  double rel = 1;
  for (int it = 0; it < 80 && rel > 1e-13; ++it) {
    const Cx F = eval2(f, x, y), G = eval2(g, x, y);
    const Cx a = deriv(f, x, y, true), b = deriv(f, x, y, false), c = deriv(g, x, y, true), d = deriv(g, x, y, false);
    const Cx det = a * d - b * c;
    if (std::abs(det) < 1e-300) return false;
    const Cx sx = (d * F - b * G) / det, sy = (a * G - c * F) / det;
    x -= sx;
    y -= sy;
    rel = std::max(std::abs(sx) / std::max(std::abs(x), 1e-300), std::abs(sy) / std::max(std::abs(y), 1e-300));
  }
  return rel < 1e-9 && std::abs(eval2(f, x, y)) + std::abs(eval2(g, x, y)) < 1e-8;
}

using UPoly = std::vector<BigRat>;  // ascending, no trailing zeros

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const BigRat q = a.back() / b.back();
      const std::size_t s = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= q * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// gcd over Q[x] of all y-coefficients of f and g, with factors of x removed.
// Positive degree means a whole line x = c (c != 0) of common zeros.
bool shares_x_factor(const Sparse& f, const Sparse& g) {
  UPoly acc;
  for (const Sparse* h : {&f, &g}) {
    std::map<long, UPoly> byy;
    for (const auto& [e, a] : *h) {
      auto& c = byy[e.second];
      if (c.size() <= static_cast<std::size_t>(e.first)) c.resize(static_cast<std::size_t>(e.first) + 1, BigRat(0));
      c[static_cast<std::size_t>(e.first)] = a;
    }
    for (auto& [j, c] : byy) acc = acc.empty() ? c : upoly_gcd(acc, c);
  }
  trim(acc);
  std::size_t lead_zeros = 0;
  while (lead_zeros < acc.size() && acc[lead_zeros] == 0) ++lead_zeros;
  return acc.size() - lead_zeros > 1;
}

std::vector<Point> support_of(const Sparse& f) {
  std::vector<Point> s;
  for (const auto& [e, a] : f) s.push_back({e.first, e.second});
  return s;
}

Sparse random_sparse(std::mt19937_64& rng) {
  Sparse f;
  const long size = uniform(rng, 2, 6);
  while (static_cast<long>(f.size()) < size) {
    long c = 0;
    while (c == 0) c = uniform(rng, -9, 9);
    f[{uniform(rng, 0, 3), uniform(rng, 0, 3)}] = c;
  }
  return f;
}

Outcome bernstein_check() {
  std::mt19937_64 rng(5401);
  int systems = 0, skipped = 0;
  long found_total = 0, bound_total = 0;
  while (systems < 50) {
    const Sparse f = random_sparse(rng), g = random_sparse(rng);
    long df = 0, dg = 0, dxf = 0, dxg = 0;
    for (const auto& [e, a] : f) df = std::max(df, e.second), dxf = std::max(dxf, e.first);
    for (const auto& [e, a] : g) dg = std::max(dg, e.second), dxg = std::max(dxg, e.first);
    if (df == 0 || dg == 0 || shares_x_factor(f, g)) {
      ++skipped;
      continue;
    }
    // Resultant in y as a polynomial in x, interpolated exactly.
    const long rdeg = df * dxg + dg * dxf;
    std::vector<BigRat> vals;
    for (long t = 0; t <= rdeg; ++t) vals.push_back(resultant_at(f, g, t, df, dg));
    const auto res = interpolate(vals);
    if (std::all_of(res.begin(), res.end(), [](const BigRat& q) { return q == 0; })) {
      ++skipped;  // common factor: solutions are not isolated
      continue;
    }
    ++systems;
    // torus solutions have x != 0: drop the exact power of x before going numeric
    std::vector<Cx> rc;
    std::size_t low = 0;
    while (res[low] == 0) ++low;
    for (std::size_t i = low; i < res.size(); ++i) rc.emplace_back(res[i].get_d(), 0.0);
    long fy_low = df;
    for (const auto& [e, a] : f) fy_low = std::min(fy_low, e.second);
    std::vector<std::pair<Cx, Cx>> sols;
    for (const Cx x0 : poly_roots(rc)) {
      if (std::abs(x0) < 1e-8) continue;
      std::vector<Cx> fy(static_cast<std::size_t>(df) + 1, Cx(0));
      for (const auto& [e, a] : f) fy[static_cast<std::size_t>(e.second - fy_low)] += static_cast<double>(a) * std::pow(x0, static_cast<double>(e.first));
      for (Cx y0 : poly_roots(fy)) {
        if (std::abs(y0) < 1e-8) continue;
        Cx x = x0, y = y0;
        if (!newton(f, g, x, y) || std::abs(x) < 1e-8 || std::abs(y) < 1e-8) continue;
        const double r = std::abs(eval2(f, x, y)) + std::abs(eval2(g, x, y));
        if (r >= 1e-8) continue;
        bool dup = false;
        for (const auto& [sx, sy] : sols) dup = dup || (std::abs(sx - x) < 1e-6 && std::abs(sy - y) < 1e-6);
        if (!dup) sols.emplace_back(x, y);
      }
    }
    const BigInt bk = bk_number({support_of(f), support_of(g)});
    found_total += static_cast<long>(sols.size());
    bound_total += bk.get_si();
    if (BigInt(static_cast<long>(sols.size())) > bk)
      return {false, "system " + std::to_string(systems) + ": " + std::to_string(sols.size()) + " torus solutions exceed BK " + bk.get_str()};
  }
  return {true, "50 systems, " + std::to_string(found_total) + " solutions vs BK total " + std::to_string(bound_total) + " (" + std::to_string(skipped) +
                    " non-isolated or y-free draws redrawn)"};
}

// ---- p-adic ----

Outcome padic_check() {
  std::mt19937_64 rng(8080);
  for (long p : {3L, 5L, 7L})
    for (int k = 0; k < 100; ++k) {
      BigRat u;
      do u = make_rat(1 + p * uniform(rng, -1'000'000, 1'000'000), 1 + p * uniform(rng, 0, 100'000));
      while (u == 0);
      const auto l = iwasawa_log(u, p, 12);
      const auto back = padic_exp(l);
      if (back.precision() != 12 || !congruent(back, PadicNumber::from_rational(u, p, 12))) return {false, "exp(log u) != u for u = " + u.get_str()};
      const auto w = PadicNumber::from_rational(BigRat(p) * uniform(rng, -1'000'000, 1'000'000), p, 12);
      if (!congruent(iwasawa_log(padic_exp(w).representative(), p, 12), w)) return {false, "log(exp w) != w"};
    }
  int roots = 0;
  for (int k = 0; k < 100; ++k) {
    const long p = std::vector<long>{3, 5, 7}[static_cast<std::size_t>(k % 3)];
    const long n = 1 + k % 5;
    std::vector<BigRat> b, w;
    std::set<long> used;
    while (static_cast<long>(w.size()) < n) {
      const long z = uniform(rng, -60, 60);
      if (!used.insert(z).second) continue;
      w.push_back(BigRat(p * p) * z);
      long c = 0;
      while (c == 0) c = uniform(rng, -30, 30);
      b.push_back(c);
    }
    std::optional<RootBoundReport> rep;
    for (long T = 40, prec = 80; !rep && T <= 640; T *= 2, prec *= 2) {
      try {
        rep = verify_padic_root_bound(b, w, p, T, prec);
      } catch (const precision_error&) {
      }
    }
    if (!rep) return {false, "root bound instance " + std::to_string(k) + " never certified"};
    if (!rep->pass) return {false, "root bound fails at instance " + std::to_string(k)};
    roots += static_cast<int>(rep->count);
  }
  for (long p : {3L, 5L, 7L})
    for (long i = 1; i <= 5; ++i) {
      std::vector<PadicNumber> w;
      for (long j = 0; j < i; ++j) w.push_back(PadicNumber::from_rational(BigRat(p * p) * uniform(rng, -40, 40), p, 160));
      const auto c = check_dk_bound(dk_sequence(w, 50), i);
      if (!c.holds || !c.certified) return {false, "d_k bound fails for p=" + std::to_string(p) + " i=" + std::to_string(i)};
    }
  return {true, "300 exp/log round trips, 100 root bounds (" + std::to_string(roots) + " roots), d_k for i<=5, k<=50"};
}

// ---- conditions pipeline ----

MultGroup planted(std::mt19937_64& rng, std::size_t n) {
  const std::vector<long> primes{2, 3, 5, 7, 11};
  std::vector<long> a(n), b(n);
  for (auto& x : a) x = uniform(rng, -2, 2);
  for (auto& x : b) x = uniform(rng, -2, 2);
  const std::size_t i0 = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
  const std::size_t j0 = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
  a[i0] = 1;
  b[j0] = 1;
  std::vector<std::vector<FactoredRat>> g(n, std::vector<FactoredRat>(n));
  auto fill = [&](long base, long range, bool parity) {
    std::vector<std::vector<long>> e(n, std::vector<long>(n));
    long s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != i0 || j != j0) {
          e[i][j] = uniform(rng, -range, range);
          s += a[i] * b[j] * e[i][j];
        }
    e[i0][j0] = parity ? (s % 2 != 0 ? 1 : 0) : -s;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (parity) {
          if (e[i][j] % 2 != 0) g[i][j] *= FactoredRat(-1, {});
        } else if (e[i][j] != 0) {
          g[i][j] *= FactoredRat(1, {{BigInt(base), e[i][j]}});
        }
      }
  };
  for (std::size_t k = 0; k < static_cast<std::size_t>(uniform(rng, 1, 3)); ++k) fill(primes[k], 2, false);
  if (uniform(rng, 0, 1)) fill(0, 1, true);
  return MultGroup(g);
}

Outcome conditions_check() {
  std::mt19937_64 rng(6060);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = k % 5 == 4 ? 3 : 2;
    const auto X = planted(rng, n);
    const auto rep = check_condition_o(X, 2);
    if (rep.verdict != Verdict::holds || !pairing(X, rep.a, rep.b).is_one()) return {false, "planted instance " + std::to_string(k) + ": no witness"};
    const long N = n == 2 ? 2 : 1;
    const auto p0 = construct_P0(X, rep.a, rep.b, N);
    if (!vanishes_on_XN(X, p0.poly, static_cast<long>(n) * N)) return {false, "P0 does not vanish at instance " + std::to_string(k)};
    const auto bk = bk_degree(p0.poly);
    if (bk.entries.front() != p0.poly.total_degree()) return {false, "BK-degree first entry differs at instance " + std::to_string(k)};
    for (std::size_t i = 1; i < bk.entries.size(); ++i)
      if (bk.entries[i] != 0) return {false, "BK-degree entry " + std::to_string(i + 1) + " nonzero at instance " + std::to_string(k)};
  }
  const std::vector<long> pool{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int k = 0; k < 50; ++k) {
    std::vector<long> ps = pool;
    std::shuffle(ps.begin(), ps.end(), rng);
    std::vector<std::vector<BigRat>> g{{ps[0], ps[1]}, {ps[2], ps[3]}};
    if (k % 2) g[0][0] = -g[0][0];
    if (k % 3 == 0) g[1][1] = make_rat(1, ps[3]);
    const auto X = MultGroup::from_rationals(g);
    if (check_condition_o(X, 4).verdict != Verdict::fails) return {false, "independent instance " + std::to_string(k) + ": spurious witness"};
    const long N = 2;
    const auto pts = enumerate_XN(X, 2 * N).points.size();
    std::set<Exponent> s;
    while (s.size() < pts) s.insert({uniform(rng, 0, 6), uniform(rng, 0, 6)});
    if (vanishing_poly_search(X, {s.begin(), s.end()}, 2, N)) return {false, "independent instance " + std::to_string(k) + ": vanishing polynomial found"};
  }
  return {true, "50 planted witnesses with vanishing P0, 50 independent instances clean"};
}

// ---- group matrices ----

Outcome group_check() {
  int cases = 0;
  for (const auto& name : group_catalog_names()) {
    const auto g = catalog_group(name);
    for (const auto& h : g.subgroups()) {
      std::vector<std::pair<LogKind, std::optional<std::size_t>>> runs;
      if (h.size() <= 2) runs.emplace_back(LogKind::leopoldt, std::nullopt);
      for (std::size_t c : g.central_involutions())
        if (std::find(h.begin(), h.end(), c) == h.end()) runs.emplace_back(LogKind::gross, c);
      for (const auto& [kind, c] : runs) {
        const auto r = rank_experiment(g, kind, h, c, 20, 1000 + static_cast<std::uint64_t>(cases));
        ++cases;
        if (!r.pass)
          return {false, name + " " + to_string(kind) + " #H=" + std::to_string(h.size()) + ": predicted " + std::to_string(r.predicted) + ", structural " +
                             std::to_string(r.structural.rank)};
      }
    }
  }
  return {true, std::to_string(cases) + " (G, H[, c]) cases, 20 seeds each, structural rank agrees"};
}

// ---- auxiliary polynomial ----

Outcome auxpoly_check() {
  for (long N : {1L, 2L}) {
    const auto rep = analytic_gap_report(4, 7, 3, N, 64, 9);
    if (rep.degree != 9 * N * N) return {false, "degree mismatch"};
    // Certificate: every root αⁱβʲ is 1 mod 3, so each factor x − αⁱβʲ is divisible by 3 when x ≡ 1.
    for (const auto& r : product_roots(4, 7, N))
      if ((r - 1) % 3 != 0) return {false, "root not congruent to 1"};
    if (rep.padic_lower_bound < 9 * N * N) return {false, "valuation below 9N^2"};
    if (!(rep.product_log > 0)) return {false, "product_log not positive for N=" + std::to_string(N)};
  }
  return {true, "degrees 9 and 36, v_3 >= 9N^2, positive gap for N = 1, 2"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "structural rank of the 3x3 skew pencil", 1, structural_rank_check},
      {2, "singular subspace witnesses", 10, witness_check},
      {3, "mixed volumes and BK-degree", 5, mixed_volume_check},
      {4, "Bernstein bound on sparse bivariate systems", 0, bernstein_check},
      {5, "p-adic exp/log, root bound and d_k", 30, padic_check},
      {6, "conditions pipeline", 0, conditions_check},
      {7, "group matrix ranks", 60, group_check},
      {8, "auxiliary polynomial gap", 10, auxpoly_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs > c.limit) {
      o.ok = false;
      o.note += "; exceeded " + std::to_string(static_cast<int>(c.limit)) + " s";
    }
    failed += !o.ok;
    std::printf("[%s] %d %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), o.note.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
