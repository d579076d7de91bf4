#pragma once

// JSON forms of every library type. Big integers travel as decimal strings.

#include <json.hpp>

#include "auxpoly.hpp"
#include "group_matrix.hpp"
#include "multgroup.hpp"
#include "padic_series.hpp"
#include "polytope.hpp"
#include "witness.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& z) { j = z.get_str(); }
  static void from_json(const json& j, mpz_class& z) {
    if (j.is_number_integer()) z = mpz_class(std::to_string(j.get<long long>()));
    else if (j.is_string()) z = mpz_class(j.get<std::string>());
    else throw mcc::domain_error("expected an integer or decimal string");
  }
};

/// {"n": "3", "d": "4"}; integers, "3/4" strings and {"n"} without "d" are accepted on input.
template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& q) { j = json{{"n", q.get_num().get_str()}, {"d", q.get_den().get_str()}}; }
  static void from_json(const json& j, mpq_class& q) {
    if (j.is_object()) {
      const mpz_class n = j.at("n").get<mpz_class>();
      const mpz_class d = j.contains("d") ? j.at("d").get<mpz_class>() : mpz_class(1);
      q = mcc::make_rat(n, d);
    } else if (j.is_string()) {
      q = mcc::parse_rat(j.get<std::string>());
    } else if (j.is_number_integer()) {
      q = mpq_class(mpz_class(std::to_string(j.get<long long>())));
    } else {
      throw mcc::domain_error("expected a rational");
    }
  }
};

}  // namespace nlohmann

namespace mcc {

using json = nlohmann::json;

inline json rat_matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

inline RatMatrix rat_matrix_from_json(const json& j) {
  return RatMatrix::from_rows(j.get<std::vector<std::vector<BigRat>>>());
}

inline void to_json(json& j, const RatMatrix& m) { j = rat_matrix_json(m); }
inline void from_json(const json& j, RatMatrix& m) { m = rat_matrix_from_json(j); }

inline void to_json(json& j, const FactoredRat& f) {
  json fac = json::object();
  for (const auto& [p, e] : f.factors()) fac[p.get_str()] = e;
  j = json{{"sign", f.sign()}, {"factors", fac}};
}

inline void from_json(const json& j, FactoredRat& f) {
  if (!j.is_object()) {
    f = factor_rational(j.get<BigRat>());
    return;
  }
  FactoredRat::Factors fac;
  for (const auto& [p, e] : j.at("factors").items()) fac.emplace(BigInt(p), e.get<long>());
  f = FactoredRat(j.at("sign").get<int>(), std::move(fac));
}

inline json laurent_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(json{{"e", e}, {"c", c}});
  return terms;
}

/// A list of {"e", "c"} terms, or {"nvars", "terms"} (needed for the zero polynomial).
inline LaurentPoly laurent_from_json(const json& j) {
  const json& terms = j.is_object() ? j.at("terms") : j;
  std::size_t nvars = 0;
  if (j.is_object()) nvars = j.at("nvars").get<std::size_t>();
  else if (!terms.empty()) nvars = terms.front().at("e").size();
  else throw domain_error("empty term list: use {\"nvars\", \"terms\"} for the zero polynomial");
  LaurentPoly p(nvars);
  for (const auto& t : terms) {
    const auto e = t.at("e").get<Exponent>();
    if (p.coeff(e) != 0) throw domain_error("repeated exponent in polynomial");
    p.add_term(e, t.at("c").get<BigRat>());
  }
  return p;
}

inline void to_json(json& j, const LaurentPoly& p) { j = laurent_json(p); }

inline json pencil_json(const MatrixPencil& p) {
  json comps = json::array();
  for (const auto& c : p.components()) comps.push_back(json{{"sym", c.sym}, {"m", rat_matrix_json(c.m)}});
  return json{{"shape", {p.rows(), p.cols()}}, {"components", comps}};
}

inline MatrixPencil pencil_from_json(const json& j) {
  const auto shape = j.at("shape").get<std::vector<std::size_t>>();
  if (shape.size() != 2) throw domain_error("pencil shape must be [rows, cols]");
  MatrixPencil p(shape[0], shape[1]);
  for (const auto& c : j.at("components")) p.add(c.at("sym").get<std::string>(), rat_matrix_from_json(c.at("m")));
  return p;
}

inline void to_json(json& j, const WitnessPair& w) { j = json{{"w", w.w}, {"v", w.v}}; }
inline void from_json(const json& j, WitnessPair& w) {
  w.w = j.at("w").get<std::vector<BigRat>>();
  w.v = j.at("v").get<std::vector<BigRat>>();
}

inline void to_json(json& j, const StructuralRankResult& r) {
  j = json{{"rank", r.rank}, {"exact", r.exact}};
  if (!r.exact) {
    j["trials"] = r.trials;
    j["failure_bound"] = r.failure_bound;
  }
}

inline void to_json(json& j, const PadicNumber& x) {
  j = json{{"p", x.prime()}, {"prec", x.precision()}};
  if (x.is_zero()) {
    j["val"] = nullptr;
    j["unit"] = "0";
  } else {
    j["val"] = x.valuation();
    j["unit"] = x.unit().get_str();
  }
}

inline void from_json(const json& j, PadicNumber& x) {
  const long p = j.at("p").get<long>();
  const long prec = j.at("prec").get<long>();
  if (j.at("val").is_null()) x = PadicNumber::zero(p, prec);
  else x = PadicNumber(p, j.at("val").get<long>(), j.at("unit").get<BigInt>(), prec);
}

inline void to_json(json& j, const TailBound& t) { j = json{{"exact", t.exact}, {"offset", t.offset}, {"slope", t.slope}}; }
inline void from_json(const json& j, TailBound& t) {
  t.exact = j.at("exact").get<bool>();
  t.offset = j.at("offset").get<BigRat>();
  t.slope = j.at("slope").get<BigRat>();
}

inline void to_json(json& j, const PadicSeries& s) { j = json{{"p", s.prime()}, {"coeffs", s.coeffs()}, {"tail", s.tail()}}; }
inline PadicSeries padic_series_from_json(const json& j) {
  return PadicSeries(j.at("p").get<long>(), j.at("coeffs").get<std::vector<PadicNumber>>(), j.value("tail", json{{"exact", true}, {"offset", 0}, {"slope", 0}}).get<TailBound>());
}

inline void to_json(json& j, const NewtonPolygon& np) { j = json{{"vertices", np.vertices}, {"slopes", np.slopes()}}; }

inline void to_json(json& j, const RootBoundReport& r) {
  j = json{{"n", r.n}, {"p", r.p}, {"count", r.count}, {"bound", r.bound}, {"pass", r.pass}, {"multiplicity", true}};
}

inline void to_json(json& j, const DkBoundCheck& c) { j = json{{"holds", c.holds}, {"certified", c.certified}, {"first_failure", c.first_failure}}; }
inline void to_json(json& j, const SchwarzReport& r) { j = json{{"roots", r.roots}, {"bound", r.bound}, {"pass", r.pass}}; }
inline void to_json(json& j, const RealZeroReport& r) { j = json{{"sign_changes", r.sign_changes}, {"bound", r.bound}, {"pass", r.pass}}; }

inline void to_json(json& j, const LatticePolytope& p) {
  j = json{{"dim", p.dim()}, {"affine_dim", p.affine_dim()}, {"vertices", p.vertices()}, {"volume", p.volume()}};
}

inline void to_json(json& j, const BKReport& r) { j = json{{"entries", r.entries}, {"bkd", r.bkd}, {"single_point", r.single_point}}; }

inline json multgroup_json(const MultGroup& x) {
  json rows = json::array();
  for (const auto& row : x.gens()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.value());
    rows.push_back(r);
  }
  return json{{"gens", rows}};
}

inline MultGroup multgroup_from_json(const json& j) { return MultGroup::from_rationals(j.at("gens").get<std::vector<std::vector<BigRat>>>()); }

inline void to_json(json& j, const ConditionReport& r) {
  j = json{{"condition", r.tag}, {"verdict", to_string(r.verdict)}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.a.empty()) j["a"] = r.a;
  if (!r.b.empty()) j["b"] = r.b;
  if (r.poly) j["poly"] = laurent_json(*r.poly);
  for (const auto& [k, v] : r.numbers) j["numbers"][k] = v;
  for (const auto& [k, v] : r.clauses) j["clauses"][k] = v;
}

inline void to_json(json& j, const XNResult& r) {
  json pts = json::array();
  for (const auto& pt : r.points) {
    json p = json::array();
    for (const auto& c : pt) p.push_back(c.value());
    pts.push_back(p);
  }
  j = json{{"points", pts}, {"exponents", r.exponents}, {"size", r.points.size()}, {"total", r.total}, {"collisions", r.collisions}};
}

inline void to_json(json& j, const P0Result& r) {
  j = json{{"poly", laurent_json(r.poly)}, {"factors", r.factors}, {"factor_bound", r.factor_bound}};
}

inline json group_json(const FiniteGroup& g) { return json{{"order", g.order()}, {"table", g.table()}, {"labels", g.labels()}}; }

inline FiniteGroup group_from_json(const json& j) {
  auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) throw domain_error("group order does not match the table");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return FiniteGroup(std::move(table), std::move(labels));
}

inline void to_json(json& j, const LogVector& v) {
  j = json{{"kind", to_string(v.kind)}, {"h", v.h}, {"values", v.values}};
  j["c"] = v.c ? json(*v.c) : json(nullptr);
}

inline void from_json(const json& j, LogVector& v) {
  v.kind = parse_log_kind(j.at("kind").get<std::string>());
  v.h = j.value("h", std::vector<std::size_t>{});
  v.c = j.contains("c") && !j.at("c").is_null() ? std::optional<std::size_t>(j.at("c").get<std::size_t>()) : std::nullopt;
  v.values = j.at("values").get<std::vector<BigRat>>();
}

inline void to_json(json& j, const RankExperiment& r) {
  j = json{{"predicted", r.predicted}, {"structural", r.structural}, {"trial_ranks", r.trial_ranks}, {"pass", r.pass}};
}

inline void to_json(json& j, const GapReport& g) {
  j = json{{"N", g.N},
           {"degree", g.degree},
           {"log_height", g.log_height},
           {"padic_lower_bound", g.padic_lower_bound},
           {"guaranteed_bound", g.guaranteed_bound},
           {"samples", g.samples},
           {"sampled_roots", g.sampled_roots},
           {"log_f", g.log_f},
           {"log_g", g.log_g},
           {"product_log", g.product_log},
           {"distinct_roots", g.distinct_roots},
           {"duplicate_roots", g.duplicate_roots},
           {"g_formula", g.g_formula},
           {"note", "valuation bound holds for every x = 1 mod p by the factorwise argument; sampling only sharpens it"}};
}

}  // namespace mcc
