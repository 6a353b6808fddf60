// File-driven front end: algebra ingestion, computation commands, verification
// suites, structured reports.  Exit codes: 0 success, 2 not stabilized,
// 3 validation or parse failure.
#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "cyclohom/conjugate_frobenius.hpp"
#include "cyclohom/oracle.hpp"
#include "cyclohom/periodic_homology.hpp"

using namespace cyclohom;
using nlohmann::json;

namespace {

struct Options {
  std::string algebra_file;
  std::string degrees = "0..2";
  int rows = 0;  // 0: derive from the degree window
  int cols = 12;
  int stab_steps = 0;
  int max_stages = 0;
  i64 p = 3;
  std::string format = "text";
  unsigned seed = 1;
  int threads = 0;
  int page = 1;
  std::string side = "coperiodic";
  std::string kind = "tate";
  int order = 0;
};

[[noreturn]] void fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(3);
}

std::pair<int, int> parse_degrees(const std::string& s) {
  size_t dots = s.find("..");
  if (dots == std::string::npos) fail("degrees must look like lo..hi");
  try {
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (lo > hi) fail("degrees window is empty");
    return {lo, hi};
  } catch (const std::exception&) {
    fail("degrees must look like lo..hi");
  }
}

AlgebraPresentation builder_algebra(const std::string& name, i64 p) {
  std::string head = name, arg;
  size_t colon = name.find(':');
  if (colon != std::string::npos) {
    head = name.substr(0, colon);
    arg = name.substr(colon + 1);
  }
  auto num = [&](int dflt) {
    if (arg.empty()) return dflt;
    try {
      return std::stoi(arg);
    } catch (const std::exception&) {
      fail("bad builder argument in '" + name + "'");
    }
  };
  if (head == "field") return ground_field(p);
  if (head == "matrix") return matrix_algebra(num(2), p);
  if (head == "truncpoly") return truncated_poly(num(2), p);
  if (head == "group") return group_algebra(num(2), p);
  if (head == "exterior") return exterior_dg(p);
  if (head == "product") return product_algebra(ground_field(p), ground_field(p));
  fail("unknown builder '" + name + "'");
}

AlgebraPresentation load_algebra(const Options& opt) {
  if (opt.algebra_file.empty()) fail("--algebra is required for this command");
  std::ifstream in(opt.algebra_file);
  if (!in) fail("cannot open " + opt.algebra_file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(opt.algebra_file + ": " + e.what());
  }
  i64 p = j.value("p", opt.p);
  if (j.contains("builder")) return builder_algebra(j["builder"].get<std::string>(), p);
  AlgebraPresentation a;
  a.p = p;
  try {
    a.labels = j.at("basis").get<std::vector<std::string>>();
    a.dim = static_cast<int>(a.labels.size());
    a.deg.assign(static_cast<size_t>(a.dim), 0);
    if (j.contains("degrees"))
      for (auto& [label, d] : j["degrees"].items()) {
        auto it = std::find(a.labels.begin(), a.labels.end(), label);
        if (it == a.labels.end()) fail("degrees entry for unknown label " + label);
        a.deg[static_cast<size_t>(it - a.labels.begin())] = d.get<int>();
      }
    a.unit = j.at("unit").get<std::vector<i64>>();
    a.mul.assign(static_cast<size_t>(a.dim),
                 std::vector<SparseVec>(static_cast<size_t>(a.dim)));
    for (auto& e : j.at("mul")) {
      int i = e.at(0).get<int>(), jj = e.at(1).get<int>(), k = e.at(2).get<int>();
      i64 c = e.at(3).get<i64>();
      a.mul.at(static_cast<size_t>(i)).at(static_cast<size_t>(jj)).emplace_back(k, c);
    }
    for (auto& row : a.mul)
      for (auto& sv : row) std::sort(sv.begin(), sv.end());
    if (j.contains("diff") && !j["diff"].empty()) {
      a.diff = SpMat(p, a.dim, a.dim);
      for (auto& e : j["diff"])
        a.diff.set(e.at(1).get<int>(), e.at(0).get<int>(), e.at(2).get<i64>());
    }
  } catch (const json::exception& e) {
    fail(opt.algebra_file + ": " + e.what());
  }
  try {
    return build_algebra(a);
  } catch (const std::exception& e) {
    fail(opt.algebra_file + ": " + e.what());
  }
}

PeriodicPolicy policy_of(const Options& opt) {
  PeriodicPolicy pol;
  if (opt.stab_steps > 0) pol.steps = opt.stab_steps;
  if (opt.max_stages > 0) pol.max_stages = opt.max_stages;
  if (opt.threads > 0) {
    pol.threads = opt.threads;
  } else if (const char* env = std::getenv("CYCLOHOM_THREADS")) {
    pol.threads = std::max(1, std::atoi(env));
  }
  return pol;
}

json table_json(const StabTable& t) {
  json rows = json::array();
  for (const DegreeStab& d : t.at) {
    json r{{"degree", d.degree}};
    if (d.stabilized) {
      r["dim"] = d.dim;
      r["certificate"] = {{"stage", d.stage}, {"history", d.history}};
    } else {
      r["lower"] = d.lower;
      r["upper"] = d.upper;
    }
    rows.push_back(r);
  }
  return rows;
}

void print_table(const Options& opt, const StabTable& t, std::ostream& os) {
  for (const DegreeStab& d : t.at) {
    if (opt.format == "csv") {
      if (d.stabilized)
        os << d.degree << "," << d.dim << "\n";
      else
        os << d.degree << ",?," << d.lower << "," << d.upper << "\n";
    } else {
      os << "  degree " << d.degree << ": ";
      if (d.stabilized)
        os << "dim " << d.dim << "  (certified at stage " << d.stage << ")";
      else
        os << "bounds [" << d.lower << ", " << d.upper << "]  (not stabilized)";
      os << "\n";
    }
  }
}

void print_dims(const Options& opt, int lo, const std::vector<int>& dims,
                std::ostream& os) {
  for (size_t i = 0; i < dims.size(); ++i) {
    if (opt.format == "csv")
      os << lo + static_cast<int>(i) << "," << dims[i] << "\n";
    else
      os << "  degree " << lo + static_cast<int>(i) << ": dim " << dims[i] << "\n";
  }
}

void emit(const Options& opt, const json& report, std::ostream& os) {
  if (opt.format == "json") os << report.dump(2) << "\n";
}

int finish_table(const Options& opt, const std::string& cmd, const StabTable& t) {
  json rep{{"schema", 1}, {"command", cmd}, {"result", table_json(t)}};
  if (opt.format == "json")
    emit(opt, rep, std::cout);
  else
    print_table(opt, t, std::cout);
  return t.all_stabilized() ? 0 : 2;
}

int finish_dims(const Options& opt, const std::string& cmd, int lo,
                const std::vector<int>& dims) {
  if (opt.format == "json") {
    json rows = json::array();
    for (size_t i = 0; i < dims.size(); ++i)
      rows.push_back({{"degree", lo + static_cast<int>(i)}, {"dim", dims[i]}});
    emit(opt, {{"schema", 1}, {"command", cmd}, {"result", rows}}, std::cout);
  } else {
    print_dims(opt, lo, dims, std::cout);
  }
  return 0;
}

CyclicModuleData nerve_for(const AlgebraPresentation& a, const Options& opt,
                           int hi) {
  int depth = opt.rows > 0 ? opt.rows - 1 : hi + 1;
  return build_anat(a, std::max(depth, hi + 1));
}

// ---- verification suites ----------------------------------------------------

int suite_relations(i64 p) {
  std::vector<AlgebraPresentation> corpus{
      ground_field(p), truncated_poly(2, p),
      product_algebra(ground_field(p), ground_field(p)), matrix_algebra(2, p),
      group_algebra(static_cast<int>(p), p), exterior_dg(p)};
  bool ok = true;
  for (auto& a : corpus) {
    CyclicModuleData e = build_anat(a, 5);
    std::vector<std::string> bad = check_cyclic_relations(e);
    for (auto& b : bad) std::cout << "  FAIL " << b << "\n";
    if (!bad.empty()) ok = false;
    try {
      build_tsygan(e, 6);
    } catch (const std::exception& ex) {
      std::cout << "  FAIL lattice: " << ex.what() << "\n";
      ok = false;
    }
  }
  std::cout << (ok ? "PASS" : "FAIL") << " relations (p = " << p << ")\n";
  return ok ? 0 : 3;
}

int suite_tate(i64 p) {
  bool ok = true;
  CyclicGroupModule triv{p, static_cast<int>(p), SpMat::identity(p, 1)};
  std::vector<int> dims =
      tate_dims(from_module(triv), TateKind::tate, false, -4, 4);
  for (int v : dims) ok = ok && v == 1;
  SpMat reg(p, static_cast<int>(p), static_cast<int>(p));
  for (int i = 0; i < static_cast<int>(p); ++i)
    reg.set((i + 1) % static_cast<int>(p), i, 1);
  CyclicGroupModule free{p, static_cast<int>(p), reg};
  for (int v : tate_dims(from_module(free), TateKind::tate, false, -2, 2))
    ok = ok && v == 0;
  // order coprime to p
  int m = (p == 2) ? 3 : 2;
  SpMat cyc(p, m, m);
  for (int i = 0; i < m; ++i) cyc.set((i + 1) % m, i, 1);
  for (int v : tate_dims(from_module(CyclicGroupModule{p, m, cyc}),
                         TateKind::tate, false, -2, 2))
    ok = ok && v == 0;
  // extended complexes match plain ones
  CyclicGroupComplex e = from_module(triv);
  std::vector<int> ext = extended_tate_dims(static_cast<int>(p),
                                            2 * static_cast<int>(p), e,
                                            TateKind::tate, -2, 2);
  ok = ok && ext == tate_dims(e, TateKind::tate, false, -2, 2);
  // oracle agreement
  oracle::GroupHomologyReport rep =
      oracle::brute_group_homology(static_cast<int>(p), SpMat::identity(p, 1), 3);
  ok = ok && rep.tate_even == 1 && rep.tate_odd == 1;
  std::cout << (ok ? "PASS" : "FAIL") << " tate (p = " << p << ")\n";
  return ok ? 0 : 3;
}

int suite_tensor(i64 p, unsigned seed, int count) {
  std::mt19937 rng(seed);
  bool ok = true;
  i64 a_const = psi_constant(p);
  for (int trial = 0; trial < count && ok; ++trial) {
    bool two_term = trial % 2 == 1;
    int d0 = 1 + static_cast<int>(rng() % (two_term ? 3 : 4));
    ChainComplex m(p, 0, two_term ? 1 : 0);
    m.set_dim(0, d0);
    m.set_diff(0, SpMat(p, 0, d0));
    if (two_term) {
      int d1 = 1 + static_cast<int>(rng() % 3);
      m.set_dim(1, d1);
      SpMat d(p, d0, d1);
      for (int r = 0; r < d0; ++r)
        for (int c = 0; c < d1; ++c) {
          i64 v = static_cast<i64>(rng() % p);
          if (v) d.set(r, c, v);
        }
      m.set_diff(1, d);
    }
    PsiReport rep = psi_check(m, static_cast<int>(p));
    if (!rep.tight || !rep.iso || !rep.additive || rep.a != a_const) {
      std::cout << "  FAIL trial " << trial << ":";
      for (auto& v : rep.violations) std::cout << " " << v;
      std::cout << "\n";
      ok = false;
    }
  }
  std::cout << (ok ? "PASS" : "FAIL") << " tensor (p = " << p
            << ", a = " << a_const << ")\n";
  return ok ? 0 : 3;
}

int suite_morita(i64 p, const PeriodicPolicy& base) {
  PeriodicPolicy pol = base;
  pol.steps = 2;
  pol.threads = std::max(pol.threads, 2);
  CyclicModuleData f = build_anat(ground_field(p), 16);
  CyclicModuleData m = build_anat(matrix_algebra(2, p), 9);
  StabTable tf = hpbar_dims(f, -2, 2, pol);
  TsyganWindow wm = build_tsygan(m, 10);
  StabTable tm = hpbar_dims_window(wm, -2, 2, pol);
  bool ok = tf.all_stabilized() && tm.all_stabilized() && tf.dims() == tm.dims();
  std::cout << "  F_" << p << ":";
  for (int v : tf.dims()) std::cout << " " << v;
  std::cout << "\n  M_2(F_" << p << "):";
  for (int v : tm.dims()) std::cout << " " << v;
  std::cout << "\n" << (ok ? "PASS" : "FAIL") << " morita\n";
  return ok ? 0 : 3;
}

int suite_comparison(i64 p, const PeriodicPolicy& pol) {
  bool ok = true;
  for (auto& a : {ground_field(p), truncated_poly(2, p)}) {
    CyclicModuleData e = build_anat(a, 16);
    CompareReport rep = compare_5dia(e, -2, 2, pol);
    if (!rep.l_iso || !rep.r_iso || !rep.R_iso) ok = false;
  }
  CyclicModuleData x = build_anat(exterior_dg(p), 16);
  CompareReport xr = compare_5dia(x, -2, 2, pol);
  if (!xr.r_iso || !xr.R_iso) ok = false;
  std::cout << (ok ? "PASS" : "FAIL") << " comparison (p = " << p << ")\n";
  return ok ? 0 : 3;
}

int suite_edgewise(i64 p) {
  bool ok = true;
  for (auto& a : {ground_field(p), truncated_poly(2, p)}) {
    CyclicModuleData e = build_anat(a, 3 * 4 + 2);
    CyclicModuleData sub = edgewise(e, 3, 3);
    if (hc_dims(e, 0, 2) != hc_dims(sub, 0, 2)) ok = false;
  }
  std::cout << (ok ? "PASS" : "FAIL") << " edgewise (p = " << p << ")\n";
  return ok ? 0 : 3;
}

int suite_conjugate(i64 p, const PeriodicPolicy& pol) {
  bool ok = true;
  // degeneration for semisimple algebras: the first-page column sums over the
  // full contributing window equal the certified co-periodic dims
  for (auto& a : {ground_field(p),
                  product_algebra(ground_field(p), ground_field(p))}) {
    CyclicModuleData e = build_anat(a, 16);
    StabTable bar = hpbar_dims(e, -2, 2, pol);
    ConjE1 t = conjugate_e1(a, -2, 2, 0, 3);
    if (!bar.all_stabilized()) ok = false;
    for (int n = -2; n <= 2 && ok; ++n)
      if (t.totals[static_cast<size_t>(n + 2)] != bar.deg(n).dim) ok = false;
  }
  // adaptedness of the nerves backing the sequence
  AdaptReport ad = adaptedness_check(truncated_poly(2, p), 1);
  if (!ad.adapted) ok = false;
  std::cout << (ok ? "PASS" : "FAIL") << " conjugate (p = " << p << ")\n";
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"co-periodic cyclic homology desk computations"};
  app.require_subcommand(1);
  Options opt;
  std::string verify_suite;
  int psi_dim = 1;
  bool psi_two_term = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algebra", opt.algebra_file, "algebra JSON file");
    sub->add_option("--degrees", opt.degrees, "degree window lo..hi");
    sub->add_option("--rows", opt.rows, "row window");
    sub->add_option("--cols", opt.cols, "column window");
    sub->add_option("--stab-steps", opt.stab_steps, "agreeing comparisons required");
    sub->add_option("--max-stages", opt.max_stages, "tower growth cap");
    sub->add_option("--p", opt.p, "prime for builders");
    sub->add_option("--format", opt.format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--seed", opt.seed, "seed for randomized suites");
    sub->add_option("--threads", opt.threads, "worker threads");
    return sub;
  };

  CLI::App* hh = add_common(app.add_subcommand("hh", "Hochschild dims"));
  CLI::App* hc = add_common(app.add_subcommand("hc", "cyclic dims"));
  CLI::App* hp = add_common(app.add_subcommand("hp", "periodic dims"));
  CLI::App* hpbar = add_common(app.add_subcommand("hpbar", "co-periodic dims"));
  CLI::App* cp = add_common(app.add_subcommand("cp", "polynomial periodic dims"));
  CLI::App* restricted =
      add_common(app.add_subcommand("restricted", "restricted theories"));
  restricted->add_option("--side", opt.side, "periodic|coperiodic")
      ->check(CLI::IsMember({"periodic", "coperiodic"}));
  CLI::App* compare =
      add_common(app.add_subcommand("compare", "five-theory comparison"));
  CLI::App* tate = add_common(app.add_subcommand("tate", "cyclic group Tate dims"));
  tate->add_option("--order", opt.order, "group order (default p)");
  tate->add_option("--kind", opt.kind, "homology|tate|cotate|poly")
      ->check(CLI::IsMember({"homology", "tate", "cotate", "poly"}));
  CLI::App* subdivide =
      add_common(app.add_subcommand("subdivide", "edgewise subdivision check"));
  CLI::App* psi = add_common(app.add_subcommand("psi", "tensor power and psi"));
  psi->add_option("--dim", psi_dim, "dimension of the probe space");
  psi->add_flag("--two-term", psi_two_term, "use a contractible two-term probe");
  CLI::App* conj_e1 =
      add_common(app.add_subcommand("conj-e1", "conjugate first page table"));
  CLI::App* conj_pages =
      add_common(app.add_subcommand("conj-pages", "conjugate filtration pages"));
  conj_pages->add_option("--page", opt.page, "page index r");
  CLI::App* verify = add_common(app.add_subcommand("verify", "verification suites"));
  verify->add_option("suite", verify_suite,
                     "relations|tate|tensor|morita|comparison|edgewise|conjugate")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  auto [lo, hi] = parse_degrees(opt.degrees);
  PeriodicPolicy pol = policy_of(opt);

  try {
    if (hh->parsed()) {
      AlgebraPresentation a = load_algebra(opt);
      CyclicModuleData e = nerve_for(a, opt, hi);
      return finish_dims(opt, "hh", lo, hh_dims(e, lo, hi));
    }
    if (hc->parsed()) {
      AlgebraPresentation a = load_algebra(opt);
      CyclicModuleData e = nerve_for(a, opt, hi);
      return finish_dims(opt, "hc", lo, hc_dims(e, lo, hi));
    }
    if (hp->parsed()) {
      AlgebraPresentation a = load_algebra(opt);
      CyclicModuleData e = nerve_for(a, opt, std::max(hi + 12, 16));
      return finish_table(opt, "hp", hp_dims(e, lo, hi, pol));
    }
    if (hpbar->parsed()) {
      AlgebraPresentation a = load_algebra(opt);
      CyclicModuleData e = nerve_for(a, opt, std::max(hi + 12, 16));
      return finish_table(opt, "hpbar", hpbar_dims(e, lo, hi, pol));
    }
    if (cp->parsed()) {
      AlgebraPresentation a = load_algebra(opt);
      CyclicModuleData e = nerve_for(a, opt, std::max(hi + 12, 16));
      return finish_table(opt, "cp", cp_poly_dims(e, lo, hi, pol));
    }
    if (restricted->parsed()) {
      AlgebraPresentation a = load_algebra(opt);
      CyclicModuleData e = nerve_for(a, opt, std::max(hi + 12, 16));
      RestrictedSide side = opt.side == "periodic" ? RestrictedSide::periodic
                                                   : RestrictedSide::coperiodic;
      return finish_table(opt, "restricted", restricted_dims(e, side, lo, hi, pol));
    }
    if (compare->parsed()) {
      AlgebraPresentation a = load_algebra(opt);
      CyclicModuleData e = nerve_for(a, opt, std::max(hi + 12, 16));
      CompareReport rep = compare_5dia(e, lo, hi, pol);
      json jr{{"schema", 1},
              {"command", "compare"},
              {"maps",
               {{"l", rep.l_iso}, {"L", rep.L_iso}, {"r", rep.r_iso}, {"R", rep.R_iso}}},
              {"hp", table_json(rep.hp)},
              {"restricted_periodic", table_json(rep.restricted_periodic)},
              {"poly", table_json(rep.poly)},
              {"restricted_coperiodic", table_json(rep.restricted_coperiodic)},
              {"coperiodic", table_json(rep.coperiodic)}};
      if (opt.format == "json") {
        emit(opt, jr, std::cout);
      } else {
        std::cout << "maps: l=" << rep.l_iso << " L=" << rep.L_iso
                  << " r=" << rep.r_iso << " R=" << rep.R_iso << "\n";
        for (auto& [name, t] :
             std::vector<std::pair<std::string, const StabTable*>>{
                 {"hp", &rep.hp},
                 {"poly", &rep.poly},
                 {"coperiodic", &rep.coperiodic}}) {
          std::cout << name << ":\n";
          print_table(opt, *t, std::cout);
        }
      }
      bool all = rep.hp.all_stabilized() && rep.poly.all_stabilized() &&
                 rep.coperiodic.all_stabilized();
      return all ? 0 : 2;
    }
    if (tate->parsed()) {
      int order = opt.order > 0 ? opt.order : static_cast<int>(opt.p);
      CyclicGroupModule m{opt.p, order, SpMat::identity(opt.p, 1)};
      TateKind kind = opt.kind == "homology" ? TateKind::homology
                      : opt.kind == "cotate" ? TateKind::cotate
                      : opt.kind == "poly"   ? TateKind::poly
                                             : TateKind::tate;
      return finish_dims(opt, "tate", lo,
                         tate_dims(from_module(m), kind, false, lo, hi));
    }
    if (subdivide->parsed()) {
      AlgebraPresentation a = load_algebra(opt);
      int l = static_cast<int>(opt.p);
      CyclicModuleData e = build_anat(a, l * (hi + 2) - 1);
      CyclicModuleData sub = edgewise(e, l, hi + 1);
      std::vector<int> orig = hc_dims(e, lo, hi);
      std::vector<int> subd = hc_dims(sub, lo, hi);
      if (opt.format == "json") {
        emit(opt,
             {{"schema", 1},
              {"command", "subdivide"},
              {"original", orig},
              {"subdivided", subd},
              {"equal", orig == subd}},
             std::cout);
      } else {
        print_dims(opt, lo, subd, std::cout);
        std::cout << (orig == subd ? "matches the original\n"
                                   : "MISMATCH with the original\n");
      }
      return orig == subd ? 0 : 3;
    }
    if (psi->parsed()) {
      ChainComplex m(opt.p, 0, psi_two_term ? 1 : 0);
      m.set_dim(0, psi_dim);
      m.set_diff(0, SpMat(opt.p, 0, psi_dim));
      if (psi_two_term) {
        m.set_dim(1, psi_dim);
        SpMat d(opt.p, psi_dim, psi_dim);
        for (int i = 0; i < psi_dim; ++i) d.set(i, i, 1);
        m.set_diff(1, d);
      }
      PsiReport rep = psi_check(m, static_cast<int>(opt.p));
      if (opt.format == "json") {
        emit(opt,
             {{"schema", 1},
              {"command", "psi"},
              {"tight", rep.tight},
              {"iso", rep.iso},
              {"additive", rep.additive},
              {"a", rep.a},
              {"violations", rep.violations}},
             std::cout);
      } else {
        std::cout << "tight=" << rep.tight << " iso=" << rep.iso
                  << " additive=" << rep.additive << " a=" << rep.a << "\n";
        for (auto& v : rep.violations) std::cout << "  " << v << "\n";
      }
      return rep.violations.empty() ? 0 : 3;
    }
    if (conj_e1->parsed()) {
      AlgebraPresentation a = load_algebra(opt);
      ConjE1 t = conjugate_e1(a, lo, hi, 0, std::min(opt.cols, 4));
      if (opt.format == "json") {
        emit(opt,
             {{"schema", 1},
              {"command", "conj-e1"},
              {"cells", t.cell},
              {"totals", t.totals}},
             std::cout);
      } else {
        for (int n = lo; n <= hi; ++n) {
          if (opt.format == "csv") {
            std::cout << n << "," << t.totals[static_cast<size_t>(n - lo)] << "\n";
          } else {
            std::cout << "  degree " << n << ":";
            for (int v : t.cell[static_cast<size_t>(n - lo)]) std::cout << " " << v;
            std::cout << "  (total " << t.totals[static_cast<size_t>(n - lo)]
                      << ")\n";
          }
        }
      }
      return 0;
    }
    if (conj_pages->parsed()) {
      AlgebraPresentation a = load_algebra(opt);
      ConjugatePage g = conjugate_pages(a, opt.page, lo, hi, pol);
      if (opt.format == "json") {
        emit(opt,
             {{"schema", 1},
              {"command", "conj-pages"},
              {"jmin", g.jmin},
              {"jmax", g.jmax},
              {"dims", g.dims},
              {"einf", g.einf},
              {"u_periodic", g.u_periodic}},
             std::cout);
      } else {
        for (int j = g.jmin; j <= g.jmax; ++j) {
          std::cout << "  column " << j << ":";
          for (int v : g.dims[static_cast<size_t>(j - g.jmin)])
            std::cout << " " << v;
          std::cout << "\n";
        }
        std::cout << "u-periodic: " << g.u_periodic << "\n";
      }
      return 0;
    }
    if (verify->parsed()) {
      if (verify_suite == "relations") return suite_relations(opt.p);
      if (verify_suite == "tate") return suite_tate(opt.p);
      if (verify_suite == "tensor")
        return suite_tensor(opt.p, opt.seed, 25);
      if (verify_suite == "morita") return suite_morita(opt.p, pol);
      if (verify_suite == "comparison") return suite_comparison(opt.p, pol);
      if (verify_suite == "edgewise") return suite_edgewise(opt.p);
      if (verify_suite == "conjugate") return suite_conjugate(opt.p, pol);
      fail("unknown suite '" + verify_suite + "'");
    }
  } catch (const std::exception& e) {
    fail(e.what());
  }
  return 0;
}
