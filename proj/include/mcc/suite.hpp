#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "config.hpp"
#include "json_io.hpp"

namespace mcc {

struct PropertyResult {
  std::string module;
  std::string name;
  long total = 0;
  long failed = 0;
  std::string first_failure;
  double seconds = 0;

  bool pass() const noexcept { return failed == 0 && total > 0; }
};

inline void to_json(json& j, const PropertyResult& r) {
  j = json{{"module", r.module}, {"property", r.name}, {"total", r.total}, {"failed", r.failed}, {"pass", r.pass()}};
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
}

namespace detail {

class Tally {
 public:
  explicit Tally(PropertyResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.total;
    if (ok) return;
    ++r_.failed;
    if (r_.first_failure.empty()) r_.first_failure = what;
  }

 private:
  PropertyResult& r_;
};

inline long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline BigRat random_rat(std::mt19937_64& rng, long range = 9) {
  return make_rat(uniform(rng, -range, range), uniform(rng, 1, range));
}

inline RatMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long range) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, -range, range);
  return m;
}

inline RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    auto m = random_int_matrix(rng, n, n, 3);
    if (det(m) != 0) return m;
  }
}

/// Basis of a random conjugate of a space of matrices sharing a zero column (or row).
inline std::vector<RatMatrix> random_singular_subspace(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
  const auto p = random_invertible(rng, n), q = random_invertible(rng, n);
  const bool rows = uniform(rng, 0, 1) == 1;
  const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
  std::vector<RatMatrix> basis;
  for (std::size_t d = 0; d < dim; ++d) {
    RatMatrix b;
    do {
      b = random_int_matrix(rng, n, n, 5);
      for (std::size_t t = 0; t < n; ++t) (rows ? b(k, t) : b(t, k)) = 0;
    } while (b == RatMatrix(n, n));
    basis.push_back(p * b * q);
  }
  return basis;
}

template <class Body>
PropertyResult run_property(const std::string& module, const std::string& name, Body&& body) {
  PropertyResult r;
  r.module = module;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  Tally t(r);
  try {
    body(t);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace detail

/// Every module's invariant batch, deterministic in cfg.seed.
inline std::vector<PropertyResult> run_suite(const RunConfig& cfg) {
  using detail::run_property;
  using detail::Tally;
  using detail::uniform;
  std::vector<PropertyResult> out;
  const std::uint64_t seed = cfg.seed;

  out.push_back(run_property("exact_core", "randomized rank agrees with exact rank", [&](Tally& t) {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 20; ++k) {
      const auto r = static_cast<std::size_t>(uniform(rng, 1, 4)), c = static_cast<std::size_t>(uniform(rng, 1, 4));
      MatrixPencil p(r, c);
      const long syms = uniform(rng, 1, 3);
      for (long s = 0; s < syms; ++s) p.add("t" + std::to_string(s), detail::random_int_matrix(rng, r, c, 1));
      auto o = cfg.rank_options();
      o.mode = RankMode::exact;
      const auto ex = structural_rank(p, o);
      o.mode = RankMode::randomized;
      o.seed = seed + static_cast<std::uint64_t>(k);
      t.check(structural_rank(p, o).rank == ex.rank, "pencil " + std::to_string(k));
    }
  }));

  out.push_back(run_property("exact_core", "kernel vectors annihilate and det is multiplicative", [&](Tally& t) {
    std::mt19937_64 rng(seed + 1);
    for (int k = 0; k < 30; ++k) {
      const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
      RatMatrix a(n, n), b(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) = detail::random_rat(rng);
          b(i, j) = detail::random_rat(rng);
        }
      t.check(det(a * b) == det(a) * det(b), "det product");
      const auto low = a * RatMatrix::from_rows({std::vector<BigRat>(n, BigRat(1))}).transpose() * RatMatrix::from_rows({std::vector<BigRat>(n, BigRat(1))});
      for (const auto& v : kernel(low)) t.check(RatMatrix(low).apply(to_rat(v)) == std::vector<BigRat>(n, BigRat(0)), "kernel");
      t.check(rank(low) + kernel(low).size() == n, "rank-nullity");
    }
  }));

  out.push_back(run_property("witness", "singular subspace witnesses hold", [&](Tally& t) {
    std::mt19937_64 rng(seed + 2);
    for (int k = 0; k < 40; ++k) {
      const auto n = static_cast<std::size_t>(uniform(rng, 2, 5)), d = static_cast<std::size_t>(uniform(rng, 1, 3));
      const auto basis = detail::random_singular_subspace(rng, n, d);
      const auto w = singular_subspace_witness(basis, cfg.rank_options());
      t.check(is_nonzero(w.w) && is_nonzero(w.v) && witness_holds(w, basis), "subspace " + std::to_string(k));
    }
  }));

  out.push_back(run_property("polytope", "BK number of dilated simplices is the Bezout number", [&](Tally& t) {
    for (long d = 1; d <= 6; ++d)
      for (long e = 1; e <= 6; ++e) t.check(bk_number({standard_simplex(2, d), standard_simplex(2, e)}) == d * e, std::to_string(d) + "x" + std::to_string(e));
  }));

  out.push_back(run_property("polytope", "first BK-degree entry is the total degree", [&](Tally& t) {
    std::mt19937_64 rng(seed + 3);
    for (int k = 0; k < 30; ++k) {
      LaurentPoly p(2);
      const long terms = uniform(rng, 2, 6);
      for (long s = 0; s < terms; ++s) p.add_term({uniform(rng, 0, 5), uniform(rng, 0, 5)}, uniform(rng, 1, 9));
      p = clear_monomial(p);
      if (p.size() < 2) continue;
      t.check(bk_degree(p).entries.front() == p.total_degree(), "support " + std::to_string(k));
    }
  }));

  out.push_back(run_property("padic", "exp and log are inverse on 1 + p^2 Z", [&](Tally& t) {
    std::mt19937_64 rng(seed + 4);
    for (long p : {3L, 5L, 7L})
      for (int k = 0; k < 20; ++k) {
        const BigRat u = make_rat(1 + p * p * uniform(rng, 1, 1'000'000), 1 + p * p * uniform(rng, 0, 1000));
        const auto back = padic_exp(iwasawa_log(u, p, 12));
        t.check(back.precision() == 12 && congruent(back, PadicNumber::from_rational(u, p, 12)), "unit " + to_string(u));
      }
  }));

  out.push_back(run_property("padic", "Iwasawa log is a homomorphism", [&](Tally& t) {
    std::mt19937_64 rng(seed + 5);
    for (long p : {2L, 3L, 5L, 7L})
      for (int k = 0; k < 10; ++k) {
        const BigRat x = make_rat(uniform(rng, 1, 10'000), uniform(rng, 1, 10'000)) * (uniform(rng, 0, 1) ? 1 : -1);
        const BigRat y = make_rat(uniform(rng, 1, 10'000), uniform(rng, 1, 10'000));
        const long prec = cfg.precision;
        t.check(congruent(iwasawa_log(x * y, p, prec), iwasawa_log(x, p, prec) + iwasawa_log(y, p, prec)), "p=" + std::to_string(p));
      }
  }));

  out.push_back(run_property("padic", "exponential sums respect the root bound", [&](Tally& t) {
    std::mt19937_64 rng(seed + 6);
    for (int k = 0; k < 40; ++k) {
      const long p = std::vector<long>{3, 5, 7}[static_cast<std::size_t>(uniform(rng, 0, 2))];
      const long n = uniform(rng, 1, 5);
      std::vector<BigRat> b, w;
      std::set<long> used;
      while (static_cast<long>(w.size()) < n) {
        const long z = uniform(rng, -50, 50);
        if (!used.insert(z).second) continue;
        w.push_back(p * p * z);
        long c = 0;
        while (c == 0) c = uniform(rng, -20, 20);
        b.push_back(c);
      }
      std::optional<RootBoundReport> rep;
      for (long T = 40, prec = 80; !rep && T <= 320; T *= 2, prec *= 2) {
        try {
          rep = verify_padic_root_bound(b, w, p, T, prec);
        } catch (const precision_error&) {
        }
      }
      t.check(rep && rep->pass, "instance " + std::to_string(k));
    }
  }));

  out.push_back(run_property("padic", "d_k recurrence matches reduction and its valuation bound", [&](Tally& t) {
    std::mt19937_64 rng(seed + 7);
    for (long p : {3L, 5L})
      for (long i = 1; i <= 5; ++i) {
        std::vector<BigRat> w;
        std::vector<PadicNumber> pw;
        for (long j = 0; j < i; ++j) {
          w.push_back(p * p * uniform(rng, -30, 30));
          pw.push_back(PadicNumber::from_rational(w.back(), p, 140));
        }
        const long kmax = 50;
        const auto d = dk_sequence(pw, kmax);
        const auto exact = dk_by_reduction(w, kmax);
        for (long k = 0; k <= kmax; ++k)
          t.check(congruent(d[static_cast<std::size_t>(k)], PadicNumber::from_rational(exact[static_cast<std::size_t>(k)], p, d[static_cast<std::size_t>(k)].precision())),
                  "reduction k=" + std::to_string(k));
        const auto c = check_dk_bound(d, i);
        t.check(c.holds && c.certified, "bound i=" + std::to_string(i));
      }
  }));

  out.push_back(run_property("multgroup", "pairing is bilinear", [&](Tally& t) {
    std::mt19937_64 rng(seed + 8);
    for (int k = 0; k < 20; ++k) {
      std::vector<std::vector<BigRat>> g(2, std::vector<BigRat>(3));
      for (auto& row : g)
        for (auto& x : row) x = make_rat(uniform(rng, 1, 30), uniform(rng, 1, 30)) * (uniform(rng, 0, 3) == 0 ? -1 : 1);
      const auto X = MultGroup::from_rationals(g);
      auto rv = [&](std::size_t n) {
        std::vector<long> v(n);
        for (auto& x : v) x = uniform(rng, -3, 3);
        return v;
      };
      const auto a = rv(2), a2 = rv(2), b = rv(3), b2 = rv(3);
      std::vector<long> as(2), bs(3);
      for (std::size_t i = 0; i < 2; ++i) as[i] = a[i] + a2[i];
      for (std::size_t j = 0; j < 3; ++j) bs[j] = b[j] + b2[j];
      t.check(pairing(X, as, b) == pairing(X, a, b) * pairing(X, a2, b), "left");
      t.check(pairing(X, a, bs) == pairing(X, a, b) * pairing(X, a, b2), "right");
    }
  }));

  out.push_back(run_property("multgroup", "condition (o) witnesses yield vanishing P0", [&](Tally& t) {
    std::mt19937_64 rng(seed + 9);
    const std::vector<long> primes{2, 3, 5, 7};
    for (int k = 0; k < 10; ++k) {
      const std::size_t n = 2;
      std::vector<long> a(n), b(n);
      for (auto& x : a) x = uniform(rng, -2, 2);
      for (auto& x : b) x = uniform(rng, -2, 2);
      a[0] = 1;
      b[static_cast<std::size_t>(uniform(rng, 0, 1))] = 1;
      const std::size_t j0 = b[0] == 1 ? 0 : 1;
      std::vector<std::vector<FactoredRat>> g(n, std::vector<FactoredRat>(n));
      for (long q : primes) {
        std::vector<std::vector<long>> e(n, std::vector<long>(n));
        long s = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (i != 0 || j != j0) {
              e[i][j] = uniform(rng, -2, 2);
              s += a[i] * b[j] * e[i][j];
            }
        e[0][j0] = -s;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) g[i][j] *= FactoredRat(1, {{BigInt(q), e[i][j]}});
      }
      const MultGroup X(g);
      const auto rep = check_condition_o(X, 2);
      t.check(rep.verdict == Verdict::holds && pairing(X, rep.a, rep.b).is_one(), "planted " + std::to_string(k));
      if (rep.verdict != Verdict::holds) continue;
      const auto p0 = construct_P0(X, rep.a, rep.b, 1, cfg.enum_cap);
      t.check(vanishes_on_XN(X, p0.poly, static_cast<long>(n), cfg.enum_cap), "P0 vanishing");
      t.check(p0.factors <= p0.factor_bound, "factor bound");
    }
  }));

  out.push_back(run_property("multgroup", "collision count on independent primes", [&](Tally& t) {
    const auto X = MultGroup::from_rationals({{2, 3}, {5, 7}});
    for (long N = 1; N <= 4; ++N) {
      const auto xn = enumerate_XN(X, N, cfg.enum_cap);
      t.check(xn.collisions == xn.total - static_cast<long>(xn.points.size()) && xn.collisions == 0, "N=" + std::to_string(N));
    }
    t.check(check_condition_o(X, 3).verdict == Verdict::fails, "no witness");
  }));

  out.push_back(run_property("group_matrices", "catalog rank formulas", [&](Tally& t) {
    for (const auto& name : group_catalog_names()) {
      const auto g = catalog_group(name);
      for (const auto& h : g.subgroups()) {
        if (h.size() <= 2) t.check(rank_experiment(g, LogKind::leopoldt, h, std::nullopt, 2, seed, cfg.rank_options()).pass, name + " leopoldt");
        for (std::size_t c : g.central_involutions())
          if (std::find(h.begin(), h.end(), c) == h.end()) t.check(rank_experiment(g, LogKind::gross, h, c, 2, seed, cfg.rank_options()).pass, name + " gross");
      }
    }
  }));

  out.push_back(run_property("group_matrices", "regular representation, convolution and projection", [&](Tally& t) {
    for (const auto& name : group_catalog_names()) {
      const auto g = catalog_group(name);
      const auto l = sample_log_vector(g, LogKind::free, {}, std::nullopt, seed).values;
      const auto m = sample_log_vector(g, LogKind::free, {}, std::nullopt, seed + 1).values;
      t.check(group_matrix(g, l) * group_matrix(g, m) == group_matrix(g, convolution(g, l, m)), name + " convolution");
      t.check(rank(group_matrix_entry_form(g, l)) == rank(group_matrix(g, l)), name + " entry form");
      for (std::size_t s = 0; s < g.order(); s += 3) t.check(regular_rep(g, s) * regular_rep(g, 1 % g.order()) == regular_rep(g, g.mul(s, 1 % g.order())), name + " rho");
      for (const auto& h : g.subgroups()) {
        const auto pr = projection_plus(g, h);
        t.check(pr * pr == pr && rank(pr) * h.size() == g.order(), name + " projection");
      }
    }
  }));

  out.push_back(run_property("auxpoly", "degree, valuation bound and norm gap", [&](Tally& t) {
    for (long N : {1L, 2L}) {
      const auto rep = analytic_gap_report(4, 7, 3, N, 16, seed);
      t.check(rep.degree == 9 * N * N, "degree");
      t.check(rep.padic_lower_bound >= 9 * N * N, "valuation");
      t.check(rep.product_log > 0, "gap");
    }
  }));

  out.push_back(run_property("cli", "JSON round trips", [&](Tally& t) {
    std::mt19937_64 rng(seed + 10);
    for (int k = 0; k < 10; ++k) {
      const BigRat q = detail::random_rat(rng, 1000);
      t.check(json(q).get<BigRat>() == q, "rational");
      LaurentPoly p(2);
      p.add_term({uniform(rng, -3, 3), uniform(rng, -3, 3)}, detail::random_rat(rng));
      p.add_term({uniform(rng, -3, 3), uniform(rng, -3, 3)}, 1);
      t.check(laurent_from_json(laurent_json(p)) == p, "laurent");
      const auto pen = MatrixPencil::from_basis({detail::random_int_matrix(rng, 2, 3, 4), detail::random_int_matrix(rng, 2, 3, 4)});
      t.check(pencil_from_json(pencil_json(pen)).components() == pen.components(), "pencil");
      const auto x = PadicNumber::from_rational(q == 0 ? BigRat(1) : q, 5, 8);
      t.check(json(x).get<PadicNumber>() == x, "padic");
      const auto f = factor_rational(q == 0 ? BigRat(1) : q);
      t.check(json(f).get<FactoredRat>() == f, "factored");
    }
    for (const auto& name : group_catalog_names()) t.check(group_from_json(group_json(catalog_group(name))) == catalog_group(name), name);
  }));

  return out;
}

}  // namespace mcc
