// mcc: command-line front end. Results go to stdout as JSON, diagnostics to
// stderr as JSON. Exit codes: 0 ok, 10 none found, 2 bad input or failed
// precondition, 3 cap or precision exceeded, 64 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mcc/mcc.hpp"

namespace {

using mcc::json;

struct not_found : std::runtime_error {
  json payload;
  explicit not_found(json p) : std::runtime_error("not found"), payload(std::move(p)) {}
};

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path ("-" is stdin).
json load_json(const std::string& arg) {
  if (arg.empty()) throw mcc::domain_error("missing JSON input");
  if (arg.front() == '{' || arg.front() == '[') return json::parse(arg);
  if (arg == "-") return json::parse(std::cin);
  std::ifstream in(arg);
  if (!in) throw mcc::domain_error("cannot open '" + arg + "'");
  return json::parse(in);
}

std::vector<long> parse_longs(const std::string& s) {
  if (!s.empty() && s.front() == '[') return json::parse(s).get<std::vector<long>>();
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

std::vector<mcc::RatMatrix> load_basis(const json& j) {
  if (j.is_object() && j.contains("components")) return mcc::pencil_from_json(j).matrices();
  const json& list = j.is_object() ? j.at("basis") : j;
  std::vector<mcc::RatMatrix> basis;
  for (const auto& m : list) basis.push_back(mcc::rat_matrix_from_json(m));
  return basis;
}

mcc::FiniteGroup load_group(const std::string& name, const std::string& file) {
  if (!file.empty()) return mcc::group_from_json(load_json(file));
  if (name.empty()) throw mcc::domain_error("give --name or --group");
  return mcc::catalog_group(name);
}

std::vector<std::size_t> parse_subgroup(const mcc::FiniteGroup& g, const std::string& gens) {
  std::vector<std::size_t> idx;
  std::stringstream ss(gens);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) idx.push_back(g.index_of(item));
  return g.generated(idx);
}

mcc::RankMode parse_mode(const std::string& m) {
  if (m == "exact") return mcc::RankMode::exact;
  if (m == "randomized") return mcc::RankMode::randomized;
  if (m == "auto") return mcc::RankMode::automatic;
  throw mcc::domain_error("unknown rank mode '" + m + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for matrix coefficient, structural rank and transcendence conditions"};
  app.require_subcommand(1);
  app.fallthrough();
  mcc::RunConfig cfg;
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--out", cfg.output, "also write the result to this file");
  app.add_option("--enum-cap", cfg.enum_cap, "enumeration cap");
  app.add_option("--digit-cap", cfg.digit_cap, "evaluation-matrix digit cap");
  app.add_option("--dim-cap", cfg.dim_cap, "largest shape for exact structural rank");
  app.add_option("--prec", cfg.precision, "p-adic precision");

  std::function<json()> action;
  std::string in, mode = "auto", name, group_file, gens, c_label, kind = "leopoldt", poly_file, a_str, b_str, x_str, support_file;
  long height = 5, N = 1, p = 5, k = 1, nmax = 0, T = 40;
  std::size_t trials = 20;
  std::string alpha = "4", beta = "7";

  // rank
  auto* rank = app.add_subcommand("rank", "structural rank of a pencil, or rank of a rational matrix");
  rank->add_option("--pencil,--in", in, "pencil JSON")->required();
  rank->add_option("--mode", mode, "exact | randomized | auto");
  rank->callback([&] {
    action = [&] {
      const json j = load_json(in);
      if (j.is_array()) return json{{"rank", mcc::rank(mcc::rat_matrix_from_json(j))}, {"exact", true}};
      auto o = cfg.rank_options();
      o.mode = parse_mode(mode);
      return json(mcc::structural_rank(mcc::pencil_from_json(j), o));
    };
  });

  // pencil
  auto* pencil = app.add_subcommand("pencil", "build or evaluate pencils");
  pencil->require_subcommand(1);
  auto* plog = pencil->add_subcommand("log", "log pencil of a matrix of positive rationals");
  plog->add_option("--in", in, "matrix JSON")->required();
  plog->callback([&] { action = [&] { return mcc::pencil_json(mcc::log_pencil(mcc::rat_matrix_from_json(load_json(in)))); }; });
  auto* peval = pencil->add_subcommand("eval", "evaluate a pencil at rational symbol values");
  peval->add_option("--in", in, "pencil JSON")->required();
  peval->add_option("--at", x_str, "JSON list of rationals")->required();
  peval->callback([&] {
    action = [&] { return mcc::rat_matrix_json(mcc::pencil_from_json(load_json(in)).evaluate(json::parse(x_str).get<std::vector<mcc::BigRat>>())); };
  });

  // witness
  auto* witness = app.add_subcommand("witness", "witness vectors w, v with w^T A v = 0");
  witness->require_subcommand(1);
  auto* wsub = witness->add_subcommand("subspace", "constructive witness for a singular matrix subspace");
  wsub->add_option("--in", in, "list of matrices, {\"basis\": [...]}, or pencil JSON")->required();
  wsub->callback([&] { action = [&] { return json(mcc::singular_subspace_witness(load_basis(load_json(in)), cfg.rank_options())); }; });
  auto* wpen = witness->add_subcommand("pencil", "bounded search for integer witnesses of a pencil");
  wpen->add_option("--in", in, "pencil JSON")->required();
  wpen->add_option("--height", height, "max-norm bound");
  wpen->callback([&] {
    action = [&] {
      auto w = mcc::brute_force_pencil_witness(mcc::pencil_from_json(load_json(in)), height);
      if (!w) throw not_found(json{{"found", false}, {"height", height}});
      return json(*w);
    };
  });

  // polytope
  auto* poly = app.add_subcommand("polytope", "Newton polytopes and mixed volumes");
  poly->require_subcommand(1);
  auto* pvol = poly->add_subcommand("volume", "convex hull and volume of integer points");
  pvol->add_option("--in", in, "list of integer points")->required();
  pvol->callback([&] { action = [&] { return json(mcc::hull(load_json(in).get<std::vector<mcc::Point>>())); }; });
  auto* pmv = poly->add_subcommand("mixedvol", "mixed volume of n supports in n dimensions");
  pmv->add_option("--in", in, "list of supports")->required();
  pmv->callback([&] {
    action = [&] {
      std::vector<mcc::LatticePolytope> bodies;
      for (const auto& s : load_json(in).get<std::vector<std::vector<mcc::Point>>>()) bodies.push_back(mcc::hull(s));
      return json{{"mixed_volume", mcc::mixed_volume(bodies)}, {"scaled", mcc::scaled_mixed_volume(bodies)}};
    };
  });
  auto* pbk = poly->add_subcommand("bk", "Bernstein-Kushnirenko number of n supports");
  pbk->add_option("--in", in, "list of supports")->required();
  pbk->callback([&] { action = [&] { return json{{"bk", mcc::bk_number(load_json(in).get<std::vector<std::vector<mcc::Point>>>())}}; }; });
  auto* pbkd = poly->add_subcommand("bkd", "BK-degree of a Laurent polynomial");
  pbkd->add_option("--in", in, "polynomial JSON")->required();
  pbkd->callback([&] { action = [&] { return json(mcc::bk_degree(mcc::laurent_from_json(load_json(in)))); }; });

  // padic
  auto* padic = app.add_subcommand("padic", "p-adic logarithm, exponential and root bounds");
  padic->require_subcommand(1);
  auto* plg = padic->add_subcommand("log", "Iwasawa logarithm of a rational");
  plg->add_option("--x", x_str, "nonzero rational")->required();
  plg->add_option("--p", p, "prime");
  plg->callback([&] { action = [&] { return json(mcc::iwasawa_log(mcc::parse_rat(x_str), p, cfg.precision)); }; });
  auto* pexp = padic->add_subcommand("exp", "p-adic exponential");
  pexp->add_option("--x", x_str, "rational argument");
  pexp->add_option("--in", in, "p-adic number JSON");
  pexp->add_option("--p", p, "prime");
  pexp->callback([&] {
    action = [&] {
      const auto w = in.empty() ? mcc::PadicNumber::from_rational(mcc::parse_rat(x_str), p, cfg.precision) : load_json(in).get<mcc::PadicNumber>();
      return json(mcc::padic_exp(w));
    };
  });
  auto* proot = padic->add_subcommand("rootbound", "zeros of sum b_i exp(w_i z) in the unit disc");
  proot->add_option("--in", in, "{\"b\": [...], \"w\": [...], \"p\": int, \"T\": int}")->required();
  proot->callback([&] {
    action = [&] {
      const json j = load_json(in);
      const long prec = j.value("prec", cfg.precision);
      auto rep = mcc::verify_padic_root_bound(j.at("b").get<std::vector<mcc::BigRat>>(), j.at("w").get<std::vector<mcc::BigRat>>(), j.at("p").get<long>(),
                                              j.value("T", T), prec);
      return json(rep);
    };
  });
  auto* pdk = padic->add_subcommand("dk", "d_k sequence and its valuation bound");
  pdk->add_option("--in", in, "{\"w\": [...], \"p\": int, \"kmax\": int}")->required();
  pdk->callback([&] {
    action = [&] {
      const json j = load_json(in);
      const long pp = j.at("p").get<long>(), prec = j.value("prec", cfg.precision);
      std::vector<mcc::PadicNumber> w;
      for (const auto& x : j.at("w").get<std::vector<mcc::BigRat>>()) w.push_back(mcc::PadicNumber::from_rational(x, pp, prec));
      const auto d = mcc::dk_sequence(w, j.at("kmax").get<long>());
      return json{{"d", d}, {"bound", mcc::check_dk_bound(d, static_cast<long>(w.size()))}};
    };
  });

  // cond
  auto* cond = app.add_subcommand("cond", "conditions (o), (O), (M), (m), (m'), (w), (W)");
  cond->require_subcommand(1);
  auto add_group = [&](CLI::App* s) { s->add_option("--group", group_file, "MultGroup JSON")->required(); };
  auto* co = cond->add_subcommand("o", "search for a, b with <a, b> = 1");
  add_group(co);
  co->add_option("--height", height, "max-norm bound for a");
  co->callback([&] {
    action = [&] {
      auto rep = mcc::check_condition_o(mcc::multgroup_from_json(load_json(group_file)), height);
      if (rep.verdict != mcc::Verdict::holds) throw not_found(json(rep));
      return json(rep);
    };
  });
  auto* cO = cond->add_subcommand("O", "verify condition (O) for given subgroup bases");
  add_group(cO);
  cO->add_option("--A", a_str, "JSON list of vectors in Z^m")->required();
  cO->add_option("--B", b_str, "JSON list of vectors in Z^n")->required();
  cO->callback([&] {
    action = [&] {
      return json(mcc::verify_condition_O(mcc::multgroup_from_json(load_json(group_file)), json::parse(a_str).get<std::vector<std::vector<long>>>(),
                                          json::parse(b_str).get<std::vector<std::vector<long>>>()));
    };
  });
  for (const std::string tag : {"M", "m", "mprime"}) {
    auto* c = cond->add_subcommand(tag, "check condition (" + (tag == "mprime" ? std::string("m'") : tag) + ") for a polynomial");
    add_group(c);
    c->add_option("--poly", poly_file, "polynomial JSON")->required();
    c->add_option("--N", N, "box size");
    c->callback([&, tag] {
      action = [&, tag] {
        const auto X = mcc::multgroup_from_json(load_json(group_file));
        const auto P = mcc::laurent_from_json(load_json(poly_file));
        if (tag == "M") return json(mcc::check_condition_M(X, P, N, cfg.enum_cap));
        if (tag == "m") return json(mcc::check_condition_m(X, P, N, cfg.enum_cap));
        return json(mcc::check_condition_mprime(X, P, N, cfg.enum_cap));
      };
    });
  }
  auto* csearch = cond->add_subcommand("search", "polynomial with given support vanishing on X(kN)");
  add_group(csearch);
  csearch->add_option("--support", support_file, "list of exponent vectors")->required();
  csearch->add_option("--k", k, "multiplier");
  csearch->add_option("--N", N, "box size");
  csearch->callback([&] {
    action = [&] {
      auto P = mcc::vanishing_poly_search(mcc::multgroup_from_json(load_json(group_file)), load_json(support_file).get<std::vector<mcc::Exponent>>(), k, N,
                                          cfg.enum_cap, cfg.digit_cap);
      if (!P) throw not_found(json{{"found", false}});
      return json{{"found", true}, {"poly", mcc::laurent_json(*P)}};
    };
  });
  for (const std::string tag : {"w", "W"}) {
    auto* c = cond->add_subcommand(tag, "rank condition (" + tag + ") for a pencil or a p-adic log matrix");
    c->add_option("--pencil", in, "pencil JSON");
    c->add_option("--group", group_file, "MultGroup JSON (uses p-adic logarithms)");
    c->add_option("--p", p, "prime for the p-adic log matrix");
    c->callback([&, tag] {
      action = [&, tag] {
        if (!in.empty()) {
          const auto pen = mcc::pencil_from_json(load_json(in));
          return json(tag == "w" ? mcc::check_condition_w(pen, cfg.rank_options()) : mcc::check_condition_W(pen, cfg.rank_options()));
        }
        if (group_file.empty()) throw mcc::domain_error("give --pencil or --group");
        if (tag == "W") throw mcc::domain_error("condition (W) is checked on pencils only");
        return json(mcc::check_condition_w_padic(mcc::multgroup_from_json(load_json(group_file)), p, cfg.precision));
      };
    });
  }

  // p0
  auto* p0 = app.add_subcommand("p0", "auxiliary polynomial from an orthogonal pair");
  add_group(p0);
  p0->add_option("--a", a_str, "comma list or JSON")->required();
  p0->add_option("--b", b_str, "comma list or JSON")->required();
  p0->add_option("--N", N, "box size");
  p0->add_option("--threshold", nmax, "search N0 <= this with (m) passing at N0, N0+1, N0+2");
  p0->callback([&] {
    action = [&] {
      const auto X = mcc::multgroup_from_json(load_json(group_file));
      const auto a = parse_longs(a_str), b = parse_longs(b_str);
      if (nmax > 0) {
        const auto t = mcc::p0_threshold(X, a, b, nmax, cfg.enum_cap);
        json j{{"reports", t.reports}};
        j["n0"] = t.n0 ? json(*t.n0) : json(nullptr);
        if (!t.n0) throw not_found(j);
        return j;
      }
      return json(mcc::construct_P0(X, a, b, N, cfg.enum_cap));
    };
  });

  // xn
  auto* xn = app.add_subcommand("xn", "enumerate X(N)");
  add_group(xn);
  xn->add_option("--N", N, "box size");
  xn->callback([&] { action = [&] { return json(mcc::enumerate_XN(mcc::multgroup_from_json(load_json(group_file)), N, cfg.enum_cap)); }; });

  // group
  auto* grp = app.add_subcommand("group", "group matrices and rank experiments");
  grp->require_subcommand(1);
  auto add_group_opts = [&](CLI::App* s, bool constraints) {
    s->add_option("--name", name, "catalog name (C2..C12, C2xC2, S3, D4, Q8, A4, S4, D6)");
    s->add_option("--group", group_file, "group JSON");
    if (!constraints) return;
    s->add_option("--kind", kind, "free | leopoldt | gross");
    s->add_option("--H", gens, "comma-separated generator labels of H");
    s->add_option("--c", c_label, "label of the central involution (gross)");
  };
  auto constraint_args = [&](const mcc::FiniteGroup& g) {
    const auto h = parse_subgroup(g, gens);
    std::optional<std::size_t> c;
    if (!c_label.empty()) c = g.index_of(c_label);
    return std::make_pair(h, c);
  };
  auto* gre = grp->add_subcommand("rank-experiment", "generic rank of constrained group matrices");
  add_group_opts(gre, true);
  gre->add_option("--trials", trials, "number of random trials");
  gre->callback([&] {
    action = [&] {
      const auto g = load_group(name, group_file);
      const auto [h, c] = constraint_args(g);
      return json(mcc::rank_experiment(g, mcc::parse_log_kind(kind), h, c, trials, cfg.seed, cfg.rank_options()));
    };
  });
  auto* gpr = grp->add_subcommand("predict", "predicted rank");
  add_group_opts(gpr, true);
  gpr->callback([&] {
    action = [&] {
      const auto g = load_group(name, group_file);
      const auto [h, c] = constraint_args(g);
      return json{{"predicted", mcc::predicted_rank(g, mcc::parse_log_kind(kind), h, c)}};
    };
  });
  auto* gmat = grp->add_subcommand("matrix", "group matrix of a log vector (sampled when --lambda is absent)");
  add_group_opts(gmat, true);
  gmat->add_option("--lambda", in, "JSON list of rationals indexed by element");
  gmat->callback([&] {
    action = [&] {
      const auto g = load_group(name, group_file);
      std::vector<mcc::BigRat> lambda;
      json j;
      if (!in.empty()) {
        lambda = load_json(in).get<std::vector<mcc::BigRat>>();
      } else {
        const auto [h, c] = constraint_args(g);
        const auto lv = mcc::sample_log_vector(g, mcc::parse_log_kind(kind), h, c, cfg.seed);
        j["lambda"] = lv;
        lambda = lv.values;
      }
      const auto m = mcc::group_matrix(g, lambda);
      j["matrix"] = mcc::rat_matrix_json(m);
      j["rank"] = mcc::rank(m);
      return j;
    };
  });
  auto* gshow = grp->add_subcommand("show", "Cayley table of a catalog group");
  add_group_opts(gshow, false);
  gshow->callback([&] { action = [&] { return mcc::group_json(load_group(name, group_file)); }; });

  // auxpoly
  auto* aux = app.add_subcommand("auxpoly", "explicit product polynomial and its norm gap");
  aux->require_subcommand(1);
  auto* gap = aux->add_subcommand("gap", "norm-gap report");
  gap->add_option("--alpha", alpha, "integer >= 2");
  gap->add_option("--beta", beta, "integer >= 2");
  gap->add_option("--p", p, "prime with alpha = beta = 1 mod p");
  gap->add_option("--N", N, "box size");
  gap->callback([&] {
    action = [&] { return json(mcc::analytic_gap_report(mcc::BigInt(alpha), mcc::BigInt(beta), mcc::BigInt(p), N, 32, cfg.seed)); };
  });

  // suite
  auto* suite = app.add_subcommand("suite", "run every module's property batch");
  bool all = false;
  suite->add_flag("--all", all, "run all modules (default)");
  suite->callback([&] {
    action = [&] {
      const auto results = mcc::run_suite(cfg);
      bool ok = true;
      for (const auto& r : results) ok = ok && r.pass();
      json j{{"seed", cfg.seed}, {"pass", ok}, {"properties", results}};
      if (!ok) throw not_found(j);
      return j;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << app.help() << "\n" << json{{"error", e.what()}}.dump() << "\n";
    return static_cast<int>(mcc::exit_code::usage);
  }

  auto emit = [&](const json& j) {
    const std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!cfg.output.empty()) {
      std::ofstream out(cfg.output);
      out << text << "\n";
    }
  };
  try {
    cfg.apply_env();
    cfg.validate();
    emit(action());
    return 0;
  } catch (const not_found& e) {
    emit(e.payload);
    return static_cast<int>(mcc::exit_code::not_found);
  } catch (const mcc::error& e) {
    std::cerr << json{{"error", e.what()}, {"code", static_cast<int>(e.code())}}.dump() << "\n";
    return static_cast<int>(e.code());
  } catch (const json::exception& e) {
    std::cerr << json{{"error", std::string("bad JSON input: ") + e.what()}, {"code", 2}}.dump() << "\n";
    return static_cast<int>(mcc::exit_code::precondition);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"code", 1}}.dump() << "\n";
    return 1;
  }
}
