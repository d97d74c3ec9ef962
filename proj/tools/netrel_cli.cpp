#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "netrel/curves.hpp"
#include "netrel/delta_wye.hpp"
#include "netrel/genfunc.hpp"
#include "netrel/graph_families.hpp"
#include "netrel/poly_json.hpp"
#include "netrel/spectra.hpp"
#include "netrel/tables.hpp"
#include "netrel/transfer.hpp"
#include "netrel/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace netrel;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Globals {
  int digits = 20;
  int precision_bits = 128;
  unsigned threads = 1;
  std::string out;
  std::string format;
  std::vector<std::string> argv;
};

Globals G;

json provenance() {
  json j;
  j["tool"] = "netrel";
  j["version"] = kVersion;
  j["command_line"] = G.argv;
  j["precision_bits"] = G.precision_bits;
  j["digits"] = G.digits;
  j["gmp"] = gmp_version;
  j["mpfr"] = mpfr_get_version();
  return j;
}

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw InputError("cannot write " + tmp.string());
    f << content;
    if (!f) throw InputError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

void emit(const std::string& content, const std::string& path = G.out) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    write_atomic(path, content);
}

std::string with_header(json payload) {
  json j;
  j["provenance"] = provenance();
  for (auto& [k, v] : payload.items()) j[k] = v;
  return j.dump(2) + "\n";
}

std::string csv_header() { return "# provenance " + provenance().dump() + "\n"; }

Rational parse_rational(const std::string& s, const char* what) {
  try {
    return Rational::parse(s);
  } catch (const InputError&) {
    throw InputError(std::string("bad value for ") + what + ": '" + s + "'");
  }
}

Rational parse_unit(const std::string& s, const char* what) {
  Rational r = parse_rational(s, what);
  if (r < Rational(0) || r > Rational(1)) throw InputError(std::string(what) + " must lie in [0,1]");
  return r;
}

Rational parse_rho(const std::string& s) {
  Rational r = parse_rational(s, "--rho");
  if (!(r > Rational(0)) || r > Rational(1)) throw InputError("--rho must lie in (0,1]");
  return r;
}

json value_json(const Rational& v) {
  json j;
  j["exact"] = v.str();
  j["decimal"] = v.to_decimal(G.digits);
  return j;
}

json poly_or_value(const MPoly& m) {
  if (m.is_constant()) return value_json(m.constant_value());
  json j;
  j["polynomial"] = to_json(m);
  j["expression"] = m.to_string();
  return j;
}

bool want_csv() { return G.format == "csv"; }

// ---- rel2 / relA ----

struct Rel2Args {
  std::string family = "bc";
  int n = -1;
  std::optional<std::string> p, rho, instance;
  bool symbolic = false, perfect = false;
};

void cmd_rel2(const Rel2Args& a) {
  json out;
  if (a.instance) {
    std::ifstream f(*a.instance);
    if (!f) throw InputError("cannot read " + *a.instance);
    json raw;
    try {
      raw = json::parse(f);
    } catch (const json::exception& e) {
      throw InputError(std::string("bad instance JSON: ") + e.what());
    }
    InstanceFile inst = parse_instance_json(raw);
    MPoly v = inst.family == Family::bc
                  ? (a.perfect ? rel2_bc_perfect<MPoly>(build_ladder(inst.n, inst.spec))
                               : rel2_bc<MPoly>(build_ladder(inst.n, inst.spec)))
                  : (a.perfect ? rel2_fan_perfect<MPoly>(build_fan(inst.n, inst.spec))
                               : rel2_fan<MPoly>(build_fan(inst.n, inst.spec)));
    out["family"] = to_string(inst.family);
    out["n"] = inst.n;
    out["rel2"] = poly_or_value(v);
    emit(with_header(out));
    return;
  }
  const Family fam = parse_family(a.family);
  if (a.n < 0) throw InputError("--n must be >= 0");
  out["family"] = a.family;
  out["n"] = a.n;
  out["perfect_nodes"] = a.perfect;
  if (a.symbolic) {
    if (a.n > 8) throw InputError("symbolic evaluation is capped at n = 8");
    const ElementSpec spec = DistinctSymbols{};
    MPoly v = fam == Family::bc ? (a.perfect ? rel2_bc_perfect<MPoly>(build_ladder(a.n, spec))
                                             : rel2_bc<MPoly>(build_ladder(a.n, spec)))
                                : (a.perfect ? rel2_fan_perfect<MPoly>(build_fan(a.n, spec))
                                             : rel2_fan<MPoly>(build_fan(a.n, spec)));
    out["rel2"] = poly_or_value(v);
    emit(with_header(out));
    return;
  }
  if (a.p && (a.rho || a.perfect)) {
    const Rational p = parse_unit(*a.p, "--p");
    Rational v = a.perfect ? rel2_perfect_uniform_sequence<Rational>(fam, a.n, p).back()
                           : rel2_uniform<Rational>(fam, a.n, p, parse_unit(*a.rho, "--rho"));
    out["rel2"] = value_json(v);
    emit(with_header(out));
    return;
  }
  const MPoly p = a.p ? MPoly(parse_unit(*a.p, "--p")) : sym("p");
  const MPoly rho = a.rho ? MPoly(parse_unit(*a.rho, "--rho")) : sym("rho");
  MPoly v = a.perfect ? rel2_perfect_uniform_sequence<MPoly>(fam, a.n, p).back() : rel2_uniform<MPoly>(fam, a.n, p, rho);
  out["rel2"] = poly_or_value(v);
  emit(with_header(out));
}

void cmd_relA(int n, const std::optional<std::string>& p) {
  if (n < 1) throw InputError("--n must be >= 1 (n = 2 is the triangle)");
  json out;
  out["n"] = n;
  if (p) {
    out["relA"] = value_json(relA_uniform_sequence<Rational>(n, parse_unit(*p, "--p")).back());
  } else {
    out["relA"] = poly_or_value(MPoly::from_qpoly(relA_uniform_sequence<QPoly>(n, QPoly::x()).back(), "p"));
  }
  emit(with_header(out));
}

// ---- generating functions and closed forms ----

void cmd_genfunc(const std::string& family, const std::optional<std::string>& rho_s, bool perfect, bool raw) {
  GFKind kind;
  if (family == "bc")
    kind = perfect ? GFKind::bc_perfect : (raw ? GFKind::bc_raw : GFKind::bc);
  else if (family == "fan")
    kind = perfect ? GFKind::fan_perfect : GFKind::fan;
  else if (family == "allterm")
    kind = GFKind::allterm;
  else
    throw InputError("unknown family '" + family + "' (expected bc, fan or allterm)");
  if (raw && kind != GFKind::bc_raw) throw InputError("--raw applies to the imperfect-node ladder only");
  const MPoly rho = rho_s ? MPoly(parse_unit(*rho_s, "--rho")) : sym("rho");
  auto g = generating_function<MPoly>(kind, sym("p"), rho);
  json out;
  out["kind"] = to_string(kind);
  out["variable"] = "z";
  out["N"] = to_json(MPoly::from_univariate(g.N, "z"));
  out["D"] = to_json(MPoly::from_univariate(g.D, "z"));
  out["N_expression"] = MPoly::from_univariate(g.N, "z").to_string();
  out["D_expression"] = MPoly::from_univariate(g.D, "z").to_string();
  emit(with_header(out));
}

void cmd_closedform(const std::string& family, int n, const std::string& p_s, const std::optional<std::string>& rho_s,
                    bool perfect) {
  if (n < 0) throw InputError("--n must be >= 0");
  const Rational p = parse_unit(p_s, "--p");
  const auto prec = static_cast<mpfr_prec_t>(G.precision_bits);
  json out;
  out["family"] = family;
  out["n"] = n;
  out["p"] = p.str();
  if (family == "fan") {
    Rational v, check;
    if (perfect) {
      v = closed_form_fan_perfect(n, p);
      check = rel2_perfect_uniform_sequence<Rational>(Family::fan, n, p).back();
    } else {
      if (!rho_s) throw InputError("--rho is required for the fan");
      const Rational rho = parse_unit(*rho_s, "--rho");
      out["rho"] = rho.str();
      v = closed_form_fan(n, p, rho);
      check = rel2_uniform<Rational>(Family::fan, n, p, rho);
    }
    out["closed_form"] = value_json(v);
    out["matches_transfer"] = v == check;
    if (v != check) throw VerificationError("closed form differs from the transfer product");
  } else if (family == "allterm") {
    if (n < 1) throw InputError("--n must be >= 1");
    BigFloat v = allterm_closed_form_numeric(n + 1, p, prec);
    Rational exact = relA_uniform_sequence<Rational>(n, p).back();
    out["closed_form"] = v.to_string(G.digits);
    out["transfer"] = value_json(exact);
  } else if (family == "bc") {
    if (p == Rational(1)) {
      if (!rho_s) throw InputError("--rho is required");
      const Rational rho = parse_unit(*rho_s, "--rho");
      Rational v = graver_sobel_p1(n, rho);
      out["rho"] = rho.str();
      out["closed_form"] = value_json(v);
      out["matches_transfer"] = v == rel2_uniform<Rational>(Family::bc, n, p, rho);
    } else if (perfect) {
      BigFloat v = closed_form_bc_perfect(n, p, prec);
      out["closed_form"] = v.to_string(G.digits);
      out["transfer"] = value_json(rel2_perfect_uniform_sequence<Rational>(Family::bc, n, p).back());
    } else {
      if (!rho_s) throw InputError("--rho is required for the imperfect-node ladder");
      const Rational rho = parse_unit(*rho_s, "--rho");
      auto g = generating_function<Rational>(GFKind::bc, p, rho);
      RootSolveOptions opts;
      opts.start_bits = prec;
      auto cf = partial_fractions_numeric(QPoly(g.N.coeffs()), QPoly(g.D.coeffs()), opts);
      BigComplex v = evaluate(cf, n, prec);
      out["rho"] = rho.str();
      out["closed_form"] = v.re().to_string(G.digits);
      out["transfer"] = value_json(rel2_uniform<Rational>(Family::bc, n, p, rho));
    }
  } else {
    throw InputError("unknown family '" + family + "'");
  }
  emit(with_header(out));
}

// ---- zeros, curves, critical points ----

RootSolveOptions root_opts() {
  RootSolveOptions o;
  o.start_bits = G.precision_bits;
  return o;
}

void cmd_zeros(const std::string& family, int n, const std::string& rho_s) {
  if (n < 1) throw InputError("--n must be >= 1");
  RootCloud c = zero_cloud(parse_family(family), n, parse_rho(rho_s), root_opts());
  if (!c.certified) throw PrecisionExhausted("roots not certified within the precision cap");
  emit(with_header(to_json(c, G.digits)));
}

std::string curve_output(const LimitCurve& c, bool as_json = G.format == "json") {
  if (as_json) {
    json j;
    j["family"] = to_string(c.family);
    j["rho"] = c.rho.str();
    j["rejected_candidates"] = c.rejected;
    j["range_mismatch"] = c.range_mismatch;
    json pts = json::array();
    for (const auto& p : c.points)
      pts.push_back({{"re", p.p.re().to_string(G.digits)},
                     {"im", p.p.im().to_string(G.digits)},
                     {"branch_id", p.branch},
                     {"T_or_theta", p.param}});
    j["points"] = std::move(pts);
    return with_header(j);
  }
  std::ostringstream os;
  os << csv_header();
  write_curve_csv(os, c, G.digits);
  return os.str();
}

void cmd_curves(const std::string& family, const std::string& rho_s, int grid) {
  const Rational rho = parse_rho(rho_s);
  LimitCurve c = parse_family(family) == Family::bc ? limiting_curves_bc(rho, grid, G.precision_bits)
                                                    : limiting_curves_fan(rho, grid, G.precision_bits);
  emit(curve_output(c));
}

json critical_json(const Rational& rho) {
  const auto prec = static_cast<mpfr_prec_t>(G.precision_bits);
  json j;
  j["rho"] = rho.str();
  CriticalPoints cp = critical_points(rho, prec);
  j["p_A"] = cp.p_A.to_string(G.digits);
  j["T_A"] = cp.T_A.to_string(G.digits);
  j["p_B"] = cp.p_B.to_string(G.digits);
  j["T_B"] = cp.T_B.to_string(G.digits);
  j["p_C"] = {{"re", cp.p_C.re().to_string(G.digits)}, {"im", cp.p_C.im().to_string(G.digits)}};
  j["p_D"] = cp.p_D.to_string(G.digits);
  if (cp.p_E) j["p_E"] = cp.p_E->to_string(G.digits);
  j["degree_P1"] = {{"nominal", cp.degree_P1}, {"reduced", cp.reduced_degree_P1}};
  j["degree_P2"] = {{"nominal", cp.degree_P2}, {"reduced", cp.reduced_degree_P2}};
  PCrit pc = p_crit(rho, prec);
  j["p_crit"] = {{"value", pc.value.to_string(G.digits)},
                 {"boundary", pc.boundary},
                 {"double_eigenvalue", pc.double_root.to_string(G.digits)},
                 {"residual_P", pc.residual_P.to_string(4)},
                 {"residual_dP", pc.residual_dP.to_string(4)}};
  AsymptoticPoints ap = asymptotic_points(rho, prec);
  j["small_rho_expansion"] = {{"p_A", ap.p_A.to_string(12)},
                              {"p_B", ap.p_B.to_string(12)},
                              {"p_C", ap.p_C.to_string(12)},
                              {"p_D", ap.p_D.to_string(12)},
                              {"p_E", ap.p_E.to_string(12)}};
  return j;
}

void cmd_critical(const std::string& rho_s) {
  json j = critical_json(parse_rho(rho_s));
  AsymptoticConstants c = asymptotic_constants(G.precision_bits);
  j["constants"] = {{"chi", c.chi.to_string(G.digits)},
                    {"kappa", c.kappa.to_string(G.digits)},
                    {"alpha", c.alpha.to_string(G.digits)}};
  emit(with_header(j));
}

// ---- tables and figures ----

void cmd_tables() {
  auto F = tables::table1_computed();
  const auto& ref1 = tables::table1_reference();
  auto T2 = tables::table2_computed();
  const auto& ref2 = tables::table2_reference();
  int mismatches = 0;

  std::ostringstream t1;
  t1 << csv_header() << "i,F_i,F_i_reference,match\n";
  json j1 = json::array();
  for (std::size_t i = 0; i < ref1.size(); ++i) {
    const bool ok = F[i].str() == ref1[i];
    mismatches += !ok;
    t1 << i << ',' << F[i].str() << ',' << ref1[i] << ',' << (ok ? "yes" : "no") << '\n';
    j1.push_back({{"i", i}, {"F_i", F[i].str()}, {"reference", ref1[i]}, {"match", ok}});
  }
  for (std::size_t i = ref1.size(); i < F.size(); ++i)
    if (!F[i].is_zero()) ++mismatches;

  std::ostringstream t2;
  t2 << csv_header()
     << "p,exact,exact_reference,match,kruskal_katona_paper_reported_not_computed,"
        "mincost_edp_paper_reported_not_computed,brecht_colbourn_paper_reported_not_computed\n";
  json j2 = json::array();
  for (std::size_t i = 0; i < ref2.size(); ++i) {
    const bool ok = T2[i].exact == ref2[i].exact;
    mismatches += !ok;
    t2 << ref2[i].p << ',' << T2[i].exact << ',' << ref2[i].exact << ',' << (ok ? "yes" : "no") << ','
       << ref2[i].kruskal_katona << ',' << ref2[i].min_cost << ',' << ref2[i].brecht_colbourn << '\n';
    j2.push_back({{"p", ref2[i].p},
                  {"exact", T2[i].exact},
                  {"reference", ref2[i].exact},
                  {"match", ok},
                  {"paper_reported_not_computed",
                   {{"kruskal_katona", ref2[i].kruskal_katona},
                    {"mincost_edp", ref2[i].min_cost},
                    {"brecht_colbourn", ref2[i].brecht_colbourn}}}});
  }

  if (G.out.empty() || G.out == "-") {
    if (want_csv()) {
      std::cout << t1.str() << '\n' << t2.str();
    } else {
      json j;
      j["table1"] = j1;
      j["table2"] = j2;
      j["mismatches"] = mismatches;
      std::cout << with_header(j);
    }
  } else {
    const fs::path dir(G.out);
    write_atomic(dir / "table1.csv", t1.str());
    write_atomic(dir / "table2.csv", t2.str());
    std::cerr << "wrote " << (dir / "table1.csv").string() << " and " << (dir / "table2.csv").string() << "\n";
  }
  if (mismatches) throw VerificationError(std::to_string(mismatches) + " table entries differ from the reference");
}

void cmd_figures(int n) {
  if (G.out.empty() || G.out == "-") throw InputError("figures needs --out DIR");
  if (n < 2) throw InputError("--n must be >= 2");
  const fs::path dir(G.out);
  const auto prec = static_cast<mpfr_prec_t>(G.precision_bits);

  // degeneracy boundary
  {
    std::ostringstream os;
    os << csv_header() << "rho,p_crit\n";
    for (int k = 1; k <= 100; ++k) {
      Rational rho(k, 100);
      os << rho.to_decimal(2) << ',' << p_crit(rho, prec).value.to_string(G.digits) << '\n';
    }
    write_atomic(dir / "fig_pcrit.csv", os.str());
  }
  // perfect-node ladder eigenvalues
  {
    std::ostringstream os;
    os << csv_header() << "p,lambda1,lambda2,lambda3\n";
    for (int k = 1; k < 100; ++k) {
      Rational p(k, 100);
      auto l = bc_cubic_eigenvalues(p, prec);
      os << p.to_decimal(2);
      for (const auto& x : l) os << ',' << x.to_string(G.digits);
      os << '\n';
    }
    write_atomic(dir / "fig_eigenvalues.csv", os.str());
  }
  // bounds versus exact
  {
    std::ostringstream os;
    os << csv_header()
       << "p,exact,kruskal_katona_paper_reported_not_computed,mincost_edp_paper_reported_not_computed,"
          "brecht_colbourn_paper_reported_not_computed\n";
    auto T2 = tables::table2_computed();
    const auto& ref = tables::table2_reference();
    for (std::size_t i = 0; i < ref.size(); ++i)
      os << ref[i].p << ',' << T2[i].exact << ',' << ref[i].kruskal_katona << ',' << ref[i].min_cost << ','
         << ref[i].brecht_colbourn << '\n';
    write_atomic(dir / "fig_bounds.csv", os.str());
  }
  // zero clouds, optionally in parallel
  struct Job {
    Family f;
    Rational rho;
    std::string file;
  };
  const std::vector<Job> jobs{{Family::bc, Rational(1), "fig_zeros_bc_rho1.json"},
                              {Family::bc, Rational(1, 100), "fig_zeros_bc_rho0.01.json"},
                              {Family::fan, Rational(1), "fig_zeros_fan_rho1.json"},
                              {Family::fan, Rational(9999, 10000), "fig_zeros_fan_rho0.9999.json"}};
  std::vector<std::string> results(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::size_t next = 0;
  std::mutex mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lk(mu);
        if (next >= jobs.size()) return;
        i = next++;
      }
      try {
        RootCloud c = zero_cloud(jobs[i].f, n, jobs[i].rho, root_opts());
        results[i] = with_header(to_json(c, G.digits));
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned nt = std::max(1u, std::min<unsigned>(G.threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!errors[i].empty()) throw PrecisionExhausted(jobs[i].file + ": " + errors[i]);
    write_atomic(dir / jobs[i].file, results[i]);
  }
  // limiting curves matching the clouds
  write_atomic(dir / "fig_curve_bc_rho1.csv", curve_output(limiting_curves_bc(Rational(1), 2000, prec), false));
  write_atomic(dir / "fig_curve_bc_rho0.01.csv",
               curve_output(limiting_curves_bc(Rational(1, 100), 2000, prec), false));
  write_atomic(dir / "fig_curve_fan_rho1.csv", curve_output(limiting_curves_fan(Rational(1), 2000, prec), false));
  write_atomic(dir / "fig_curve_fan_rho0.9999.csv",
               curve_output(limiting_curves_fan(Rational(9999, 10000), 2000, prec), false));
  std::cerr << "wrote figure data to " << dir.string() << "\n";
}

// ---- verification ----

void cmd_verify(const std::string& family, int max_n, int trials, std::uint64_t seed) {
  if (max_n < 0 || max_n > 6) throw InputError("--max-n must lie in [0,6]");
  if (trials < 1) throw InputError("--trials must be >= 1");
  std::vector<Family> fams;
  if (family == "all")
    fams = {Family::bc, Family::fan};
  else
    fams = {parse_family(family)};
  VerifyOptions o;
  o.max_n = max_n;
  o.trials = trials;
  o.seed = seed;
  o.symbolic_max_n = std::min(4, max_n);
  o.threads = G.threads;
  auto res = run_verify_suites(fams, o);
  bool ok = true;
  for (const auto& r : res) ok = ok && r.ok;
  if (G.format == "json") {
    json arr = json::array();
    for (const auto& r : res)
      arr.push_back({{"suite", r.suite},
                     {"family", to_string(r.family)},
                     {"n", r.n},
                     {"checks", r.checks},
                     {"pass", r.ok},
                     {"detail", r.detail}});
    json j;
    j["results"] = arr;
    j["pass"] = ok;
    emit(with_header(j));
  } else {
    std::ostringstream os;
    os << csv_header();
    char line[160];
    std::snprintf(line, sizeof line, "%-26s %-6s %3s %7s  %s\n", "suite", "family", "n", "checks", "result");
    os << line;
    for (const auto& r : res) {
      std::snprintf(line, sizeof line, "%-26s %-6s %3d %7d  %s", r.suite.c_str(), to_string(r.family).c_str(), r.n,
                    r.checks, r.ok ? "PASS" : "FAIL");
      os << line;
      if (!r.ok) os << "  " << r.detail;
      os << '\n';
    }
    os << (ok ? "all suites passed\n" : "verification FAILED\n");
    emit(os.str());
  }
  if (!ok) throw VerificationError("verification suites failed");
}

void cmd_deltawye(const std::vector<std::string>& v, const std::string& embedding) {
  TriangleConfig<Rational> t{parse_unit(v[0], "--A"), parse_unit(v[1], "--B"), parse_unit(v[2], "--C"),
                             parse_unit(v[3], "--a"), parse_unit(v[4], "--b"), parse_unit(v[5], "--c")};
  StarConfig s = triangle_to_star(t);
  TriangleEmbedding emb = embed_triangle(t);
  if (embedding == "pendant") {
    auto d = emb.graph.add_node("D", RelValue(Rational(1)));
    emb.graph.add_edge(emb.A, d, RelValue(Rational(1, 2)), "AD");
  } else if (embedding != "triangle") {
    throw InputError("--embedding must be triangle or pendant");
  }
  EquivalenceReport rep = verify_equivalence(t, s, emb);
  json j;
  j["star"] = {{"p_A", s.p_A.str()}, {"p_B", s.p_B.str()}, {"p_C", s.p_C.str()}, {"O", s.O.str()}, {"formal", s.formal}};
  j["checks"] = rep.checks;
  j["equivalent"] = rep.ok;
  j["mismatches"] = rep.mismatches;
  emit(with_header(j));
  if (!rep.ok) throw VerificationError("star is not equivalent to the triangle");
}

}  // namespace

int main(int argc, char** argv) {
  G.argv.assign(argv, argv + argc);
  CLI::App app{"Exact and high-precision reliability of ladder and fan networks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--digits", G.digits, "significant digits in decimal output")->check(CLI::Range(1, 10000));
  app.add_option("--precision-bits", G.precision_bits, "working precision in bits")->check(CLI::Range(64, 1 << 20));
  app.add_option("--threads", G.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--out", G.out, "output file (or directory for tables/figures)");
  app.add_option("--format", G.format, "output format")->check(CLI::IsMember({"csv", "json"}));

  Rel2Args r2;
  auto* rel2 = app.add_subcommand("rel2", "two-terminal reliability S0 -> Sn");
  rel2->add_option("--family", r2.family)->check(CLI::IsMember({"bc", "fan"}));
  rel2->add_option("--n", r2.n);
  rel2->add_option("--p", r2.p);
  rel2->add_option("--rho", r2.rho);
  rel2->add_option("--instance", r2.instance, "instance JSON file");
  rel2->add_flag("--symbolic", r2.symbolic, "distinct symbol per element (n <= 8)");
  rel2->add_flag("--perfect-nodes", r2.perfect);

  int ra_n = -1;
  std::optional<std::string> ra_p;
  auto* rela = app.add_subcommand("relA", "all-terminal reliability (terminal index n, n = 2 is the triangle)");
  rela->add_option("--n", ra_n)->required();
  rela->add_option("--p", ra_p);

  std::string gf_family = "bc";
  std::optional<std::string> gf_rho;
  bool gf_rho_sym = false, gf_perfect = false, gf_raw = false;
  auto* gf = app.add_subcommand("genfunc", "generating function N(z)/D(z)");
  gf->add_option("--family", gf_family)->check(CLI::IsMember({"bc", "fan", "allterm"}));
  auto* gf_rho_opt = gf->add_option("--rho", gf_rho);
  gf->add_flag("--rho-sym", gf_rho_sym)->excludes(gf_rho_opt);
  gf->add_flag("--perfect-nodes", gf_perfect);
  gf->add_flag("--raw", gf_raw, "ladder series without the n = 0, 1 seeds");

  std::string cf_family = "fan", cf_p;
  int cf_n = -1;
  std::optional<std::string> cf_rho;
  bool cf_perfect = false;
  auto* cf = app.add_subcommand("closedform", "closed-form reliability");
  cf->add_option("--family", cf_family)->check(CLI::IsMember({"bc", "fan", "allterm"}));
  cf->add_option("--n", cf_n)->required();
  cf->add_option("--p", cf_p)->required();
  cf->add_option("--rho", cf_rho);
  cf->add_flag("--perfect-nodes", cf_perfect);

  std::string z_family = "bc", z_rho = "1";
  int z_n = -1;
  auto* zeros = app.add_subcommand("zeros", "certified zeros of Rel2 in the complex p-plane");
  zeros->add_option("--family", z_family)->check(CLI::IsMember({"bc", "fan"}));
  zeros->add_option("--n", z_n)->required();
  zeros->add_option("--rho", z_rho);

  std::string c_family = "bc", c_rho = "1";
  int c_grid = 2000;
  auto* curves = app.add_subcommand("curves", "limiting curves of the zeros");
  curves->add_option("--family", c_family)->check(CLI::IsMember({"bc", "fan"}));
  curves->add_option("--rho", c_rho);
  curves->add_option("--grid", c_grid)->check(CLI::Range(2, 1000000));

  std::string k_rho = "1";
  auto* crit = app.add_subcommand("critical", "critical points and degeneracy boundary of the ladder");
  crit->add_option("--rho", k_rho);

  auto* tbl = app.add_subcommand("tables", "regenerate the F_i table and the exact reliability column");

  int f_n = 150;
  auto* figs = app.add_subcommand("figures", "emit figure point sets");
  figs->add_option("--n", f_n, "cloud size");

  std::string v_family = "all";
  int v_max_n = 6, v_trials = 20;
  std::uint64_t v_seed = 1;
  auto* ver = app.add_subcommand("verify", "oracle, affinity, delta-wye and symbolic suites");
  ver->add_option("--family", v_family)->check(CLI::IsMember({"bc", "fan", "all"}));
  ver->add_option("--max-n", v_max_n);
  ver->add_option("--trials", v_trials);
  ver->add_option("--seed", v_seed);

  std::vector<std::string> dw(6, "1");
  std::string dw_embed = "triangle";
  auto* dwc = app.add_subcommand("deltawye", "triangle-to-star transformation");
  dwc->add_option("--A", dw[0]);
  dwc->add_option("--B", dw[1]);
  dwc->add_option("--C", dw[2]);
  dwc->add_option("--a", dw[3]);
  dwc->add_option("--b", dw[4]);
  dwc->add_option("--c", dw[5]);
  dwc->add_option("--embedding", dw_embed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  try {
    if (*rel2) cmd_rel2(r2);
    else if (*rela) cmd_relA(ra_n, ra_p);
    else if (*gf) cmd_genfunc(gf_family, gf_rho_sym ? std::nullopt : gf_rho, gf_perfect, gf_raw);
    else if (*cf) cmd_closedform(cf_family, cf_n, cf_p, cf_rho, cf_perfect);
    else if (*zeros) cmd_zeros(z_family, z_n, z_rho);
    else if (*curves) cmd_curves(c_family, c_rho, c_grid);
    else if (*crit) cmd_critical(k_rho);
    else if (*tbl) cmd_tables();
    else if (*figs) cmd_figures(f_n);
    else if (*ver) cmd_verify(v_family, v_max_n, v_trials, v_seed);
    else if (*dwc) cmd_deltawye(dw, dw_embed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
