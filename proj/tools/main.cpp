// toral-hopf: analysis of invariant-torus bifurcations in non-resonant
// multi-Hopf Eulerian flows. Subcommands cover cell combinatorics, leaf
// reduction, normal forms, leaf/cell bifurcation classification, the
// closed-form radial flow, direct simulation and the verification suite.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "json.hpp"
#include "toral/algebra.hpp"
#include "toral/cellbif.hpp"
#include "toral/cells.hpp"
#include "toral/leaf.hpp"
#include "toral/leafbif.hpp"
#include "toral/normalform.hpp"
#include "toral/sim.hpp"

using nlohmann::json;
using namespace toral;

namespace {

constexpr const char* kVersion = "1.0.0";

// Exit codes: 0 success, 1 input error, 2 analysis rejected, 3 numeric failure.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Every run prints a manifest on stderr: the command line, hashes of every
// input file, the numeric tower, tolerances and sampling seed.
struct Manifest {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::string tower = "double";
  json tolerances = json::object();
  long seed = 0;

  void add_input(const std::string& path, const std::string& content) {
    inputs[path] = "fnv1a64:" + fnv1a64(content);
  }
  void emit() const {
    json m;
    m["command"] = command;
    m["inputs"] = inputs;
    m["tower"] = tower;
    m["tolerances"] = tolerances;
    m["seed"] = seed;
    m["version"] = kVersion;
    std::cerr << m.dump() << "\n";
  }
};

std::vector<double> parse_doubles(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw InputError("not a number: '" + tok + "'");
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  for (double v : parse_doubles(csv)) out.push_back(static_cast<int>(v));
  return out;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stol(s));
    return Rat(std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InputError("not a rational 'p/q': '" + s + "'");
  }
}

std::vector<Rat> parse_rats(const std::string& csv) {
  std::vector<Rat> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
  return out;
}

EulerianSystem load_system(const std::string& path, Manifest& mf) {
  std::string text = read_file(path);
  mf.add_input(path, text);
  try {
    return system_from_json(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("bad system file ") + path + ": " + e.what());
  }
}

CellNFCoeffs load_coeffs(const std::string& path, Manifest& mf) {
  std::string text = read_file(path);
  mf.add_input(path, text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("bad coefficients file ") + path + ": " +
                     e.what());
  }
  CellNFCoeffs cf;
  try {
    cf.n = j.at("n").get<int>();
    cf.sigma = KPermutation::from_selected(
        cf.n, j.at("sigma").get<std::vector<int>>());
    cf.k = cf.sigma.k;
    cf.a_e = j.at("a_e").get<std::vector<double>>();
    cf.a_ee = j.at("a_ee").get<std::vector<std::vector<double>>>();
  } catch (const std::exception& e) {
    throw InputError(std::string("bad coefficients schema in ") + path + ": " +
                     e.what());
  }
  if (static_cast<int>(cf.a_e.size()) != cf.n ||
      static_cast<int>(cf.a_ee.size()) != cf.n)
    throw InputError("coefficient tables must have n rows");
  return cf;
}

LeafSpec leaf_from_flags(int n, const std::string& sigma_csv,
                         const std::string& c_csv,
                         const std::string& c2_csv) {
  KPermutation sig = KPermutation::from_selected(n, parse_ints(sigma_csv));
  if (!c2_csv.empty())
    return LeafSpec::from_squares(sig, parse_rats(c2_csv));
  if (c_csv.empty()) throw InputError("one of --c / --c2 is required");
  return LeafSpec::from_doubles(sig, parse_doubles(c_csv));
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw InputError("cannot open output file: " + path);
  return file;
}

std::string lkey_str(const LKey& key) {
  std::ostringstream ss;
  ss << "rho^" << 2 * key.j;
  for (size_t i = 0; i < key.mu.size(); ++i)
    if (key.mu[i] != 0) ss << " mu" << i << "^" << key.mu[i];
  return ss.str();
}

void print_leafbif(const LeafBifReport& rep) {
  std::cout << "origin: " << (rep.origin_stable ? "stable" : "unstable")
            << "\n";
  std::cout << "varieties:\n";
  for (const auto& v : rep.varieties)
    std::cout << "  " << v.name << ": on=" << (v.on_variety ? "yes" : "no")
              << " signed_distance=" << fmt(v.signed_distance) << "\n";
  std::cout << "tori (" << rep.tori.size() << "):\n";
  for (const auto& t : rep.tori) {
    std::cout << "  R=" << fmt(t.R) << " "
              << (t.stable ? "stable" : "unstable") << " radii=[";
    for (size_t i = 0; i < t.radius_vector.size(); ++i)
      std::cout << (i ? "," : "") << fmt(t.radius_vector[i]);
    std::cout << "]\n";
  }
}

LeafBifReport run_leafbif(int s, const std::vector<double>& nu, double a,
                          const LeafSpec& leaf) {
  if (static_cast<int>(nu.size()) != s)
    throw InputError("--nu must list exactly s values");
  if (s == 1) return analyze_s1(nu[0], a, leaf);
  if (s == 2) return analyze_s2(nu[0], nu[1], a, leaf);
  return analyze_s3(nu[0], nu[1], nu[2], a, leaf);
}

void write_region_csv(std::ostream& os, const CellBifReport& rep, int n) {
  for (int i = 1; i <= n; ++i) os << "c" << i << ",";
  os << "gamma,region,R_minus,R_plus,stable_minus,stable_plus\n";
  for (const auto& row : rep.grid) {
    for (int i = 0; i < n; ++i) os << fmt(row.C[i]) << ",";
    os << row.gamma << "," << row.region << "," << fmt(row.R_minus) << ","
       << fmt(row.R_plus) << "," << (row.stable_minus ? 1 : 0) << ","
       << (row.stable_plus ? 1 : 0) << "\n";
  }
}

int dispatch(int argc, char** argv) {
  CLI::App app{"toral-hopf: invariant-torus bifurcation analysis for "
               "non-resonant multi-Hopf Eulerian flows"};
  app.require_subcommand(1);

  Manifest mf;
  {
    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
    mf.command = cmd.str();
  }

  // --- cells ---
  auto* cells = app.add_subcommand("cells", "enumerate invariant cells");
  int cn = 0, ck = 0;
  bool closure = false, toral = false;
  cells->add_option("--n", cn, "number of oscillator pairs")->required();
  cells->add_option("--k", ck, "selected pairs per cell")->required();
  cells->add_flag("--closure", closure, "also list sphere-cell closures");
  cells->add_flag("--toral", toral, "also list toral CW descriptors");
  cells->callback([&] {
    if (cn < 1 || ck < 1 || ck > cn) throw InputError("need 1 <= k <= n");
    auto all = enumerate_Skn(cn, ck);
    std::cout << all.size() << " cells (n=" << cn << ", k=" << ck << ")\n";
    for (const auto& sig : all) {
      std::cout << sig.to_string() << "\n";
      if (closure) {
        auto cl = sphere_cell_closure(SphereCell{sig});
        std::cout << "  closure: " << cl.size() << " cells\n";
      }
      if (toral) {
        auto d = toral_cw_over_sphere(sig);
        std::cout << "  toral CW: " << d.total_cells() << " cells\n";
      }
    }
  });

  // --- classify ---
  auto* classify = app.add_subcommand("classify", "classify a state vector");
  std::string xarg;
  classify->add_option("--x", xarg, "state x1,y1,...,xn,yn")->required();
  classify->callback([&] {
    auto x = parse_doubles(xarg);
    if (x.empty() || x.size() % 2) throw InputError("--x needs 2n components");
    CellPoint p = classify_point(x);
    std::cout << "k=" << p.k << " sigma=" << p.sigma.to_string() << " C=[";
    for (size_t i = 0; i < p.C.size(); ++i)
      std::cout << (i ? "," : "") << fmt(p.C[i]);
    std::cout << "] rho_1=" << fmt(p.rho_1) << "\n";
  });

  // --- leaf-reduce ---
  auto* lred = app.add_subcommand("leaf-reduce",
                                  "restrict a system to an invariant leaf");
  std::string sys_path, sigma_csv, c_csv, c2_csv;
  int rho_max = 7, mu_max = 2;
  lred->add_option("--system", sys_path, "system JSON file")->required();
  lred->add_option("--sigma", sigma_csv, "selected pair indices")->required();
  lred->add_option("--c", c_csv, "leaf components (decimal)");
  lred->add_option("--c2", c2_csv, "squared components (rationals p/q)");
  lred->add_option("--rho-max", rho_max, "radial truncation degree");
  lred->add_option("--mu-max", mu_max, "parameter truncation degree");
  lred->callback([&] {
    EulerianSystem sys = load_system(sys_path, mf);
    LeafSpec leaf = leaf_from_flags(sys.n, sigma_csv, c_csv, c2_csv);
    mf.tower = c2_csv.empty() ? "double" : "rational/radical exact";
    Trunc tr;
    tr.rho_max = rho_max;
    tr.mu_max = mu_max;
    LeafVectorField lvf = leaf_reduce(sys, leaf, tr);
    std::cout << "radial terms (" << lvf.radial.size() << "):\n";
    for (const auto& t : lvf.radial) {
      std::cout << "  " << t.coeff.to_string() << " * rho^" << t.rho_pow();
      for (size_t i = 0; i < t.mu.size(); ++i)
        if (t.mu[i]) std::cout << " mu" << i << "^" << t.mu[i];
      for (size_t j = 0; j < t.cospow.size(); ++j) {
        if (t.cospow[j]) std::cout << " cos(th" << j + 1 << ")^" << t.cospow[j];
        if (t.sinpow[j]) std::cout << " sin(th" << j + 1 << ")^" << t.sinpow[j];
      }
      std::cout << "\n";
    }
    for (int j = 0; j < leaf.k(); ++j)
      std::cout << "angular[" << j + 1 << "]: " << lvf.angular[j].size()
                << " terms, omega_hat=" << lvf.omega_hat[j].to_string()
                << "\n";
  });

  // --- normal-form ---
  auto* nf_cmd = app.add_subcommand(
      "normal-form", "first-level or infinite-level leaf normal form");
  int grade = 7;
  bool infinite = false;
  nf_cmd->add_option("--system", sys_path, "system JSON file")->required();
  nf_cmd->add_option("--sigma", sigma_csv, "selected pair indices")->required();
  nf_cmd->add_option("--c2", c2_csv, "squared components (rationals p/q)")
      ->required();
  nf_cmd->add_option("--grade", grade, "truncation grade");
  nf_cmd->add_option("--mu-max", mu_max, "parameter truncation degree");
  nf_cmd->add_flag("--infinite", infinite, "continue to the infinite level");
  nf_cmd->callback([&] {
    EulerianSystem sys = load_system(sys_path, mf);
    LeafSpec leaf = leaf_from_flags(sys.n, sigma_csv, "", c2_csv);
    mf.tower = "rational/radical exact";
    Trunc tr;
    tr.rho_max = grade;
    tr.mu_max = mu_max;
    GradedLElement nf = first_level_nf(leaf_reduce(sys, leaf, tr), grade, mu_max);
    int s = detect_s(nf);
    if (infinite) {
      NFResult res = infinite_level_pnf(nf, grade, mu_max);
      nf = res.element;
      std::cout << "level=infinite s=" << res.s << " grade=" << res.grade
                << "\n";
    } else {
      std::cout << "level=first s=" << s << " grade=" << grade << "\n";
    }
    std::cout << "euler terms:\n";
    for (const auto& [keyv, val] : nf.euler_terms)
      std::cout << "  " << lkey_str(keyv) << ": " << val.to_string() << "\n";
    for (int i = 0; i < nf.k(); ++i) {
      std::cout << "theta[" << i + 1 << "] terms:\n";
      for (const auto& [keyv, val] : nf.theta_terms[i])
        std::cout << "  " << lkey_str(keyv) << ": " << val.to_string() << "\n";
    }
  });

  // --- leaf-bif ---
  auto* lbif = app.add_subcommand("leaf-bif",
                                  "leaf bifurcation classification (s=1,2,3)");
  int s_order = 3;
  std::string nu_csv, sweep_path, out_path;
  double a_lead = 0.0;
  int leaf_n = 0;
  lbif->add_option("--s", s_order, "order of the amplitude equation")
      ->required();
  lbif->add_option("--nu", nu_csv, "unfolding parameters nu0[,nu1[,nu2]]");
  lbif->add_option("--a", a_lead, "leading coefficient a_s");
  lbif->add_option("--n", leaf_n, "ambient pair count (default k)");
  lbif->add_option("--sigma", sigma_csv, "selected pair indices");
  lbif->add_option("--c", c_csv, "leaf components");
  lbif->add_option("--sweep", sweep_path,
                   "JSON {schema:1, points:[[nu...,a],...]} for a CSV sweep");
  lbif->add_option("--out", out_path, "output path ('-' = stdout)");
  lbif->callback([&] {
    if (s_order < 1 || s_order > 3) throw InputError("--s must be 1, 2 or 3");
    LeafSpec leaf =
        sigma_csv.empty()
            ? LeafSpec::from_doubles(KPermutation::from_selected(1, {1}), {1.0})
            : leaf_from_flags(
                  leaf_n > 0 ? leaf_n
                             : static_cast<int>(parse_ints(sigma_csv).size()),
                  sigma_csv, c_csv, c2_csv);
    if (!sweep_path.empty()) {
      std::string text = read_file(sweep_path);
      mf.add_input(sweep_path, text);
      json j = json::parse(text);
      std::ofstream file;
      std::ostream& os = open_out(out_path, file);
      os << "nu0,nu1,nu2,a,n_positive,roots,stability,varieties\n";
      for (const auto& pt : j.at("points")) {
        std::vector<double> vals = pt.get<std::vector<double>>();
        if (static_cast<int>(vals.size()) != s_order + 1)
          throw InputError("sweep points need s nu values plus a_s");
        std::vector<double> nu(vals.begin(), vals.end() - 1);
        LeafBifReport rep = run_leafbif(s_order, nu, vals.back(), leaf);
        for (int i = 0; i < 3; ++i)
          os << (i < s_order ? fmt(nu[i]) : "") << ",";
        os << fmt(vals.back()) << "," << rep.tori.size() << ",";
        for (size_t i = 0; i < rep.tori.size(); ++i)
          os << (i ? ";" : "") << fmt(rep.tori[i].R);
        os << ",";
        for (size_t i = 0; i < rep.tori.size(); ++i)
          os << (i ? ";" : "") << (rep.tori[i].stable ? "s" : "u");
        os << ",";
        bool first = true;
        for (const auto& v : rep.varieties)
          if (v.on_variety) {
            os << (first ? "" : ";") << v.name;
            first = false;
          }
        os << "\n";
      }
      return;
    }
    if (nu_csv.empty()) throw InputError("--nu required without --sweep");
    print_leafbif(run_leafbif(s_order, parse_doubles(nu_csv), a_lead, leaf));
  });

  // --- cell-bif / regions ---
  std::string coeffs_path;
  double nu0 = 0.0;
  int grid = 0;
  auto add_cellbif_flags = [&](CLI::App* cmd) {
    cmd->add_option("--coeffs", coeffs_path, "coefficients JSON file")
        ->required();
    cmd->add_option("--nu0", nu0, "unfolding parameter")->required();
    cmd->add_option("--grid", grid, "sphere grid points (0 = default)");
    cmd->add_option("--out", out_path, "CSV output path ('-' = stdout)");
  };
  auto* cbif = app.add_subcommand("cell-bif",
                                  "cell-level bifurcation classification");
  add_cellbif_flags(cbif);
  cbif->callback([&] {
    CellNFCoeffs cf = load_coeffs(coeffs_path, mf);
    CellBifReport rep = classify_cell_bifurcation(cf, nu0, grid);
    std::cout << "regime=" << rep.regime
              << " equivalence_region=" << rep.equivalence_region << "\n";
    std::cout << "nu_min=" << fmt(rep.critical.nu_min)
              << " nu_max=" << fmt(rep.critical.nu_max) << " (unfiltered "
              << fmt(rep.critical.nu_min_unfiltered) << ", "
              << fmt(rep.critical.nu_max_unfiltered) << ")\n";
    for (const auto& v : rep.varieties)
      std::cout << "variety " << v.name << ": threshold=" << fmt(v.threshold)
                << " on=" << (v.on_variety ? "yes" : "no") << "\n";
    for (const auto& m : rep.manifolds)
      std::cout << "manifold " << m.name << " over " << m.over << ": "
                << m.descriptor.total_cells() << " toral cells, "
                << (m.bistable ? "bistable"
                               : (m.stable ? "stable" : "unstable"))
                << ", measure " << fmt(m.measure_fraction) << "\n";
    if (!out_path.empty()) {
      std::ofstream file;
      write_region_csv(open_out(out_path, file), rep, cf.n);
    }
  });
  auto* regions = app.add_subcommand("regions",
                                     "region-labeled sphere samples as CSV");
  add_cellbif_flags(regions);
  regions->callback([&] {
    CellNFCoeffs cf = load_coeffs(coeffs_path, mf);
    CellBifReport rep = classify_cell_bifurcation(cf, nu0, grid);
    std::ofstream file;
    write_region_csv(open_out(out_path, file), rep, cf.n);
  });

  // --- flow-exact ---
  auto* fexact = app.add_subcommand("flow-exact",
                                    "closed-form degree-3 radial flow");
  std::string r0_csv;
  double t_end = 1.0;
  fexact->add_option("--coeffs", coeffs_path, "coefficients JSON file")
      ->required();
  fexact->add_option("--r0", r0_csv, "initial radii")->required();
  fexact->add_option("--nu0", nu0, "unfolding parameter")->required();
  fexact->add_option("--t", t_end, "evaluation time")->required();
  fexact->callback([&] {
    CellNFCoeffs cf = load_coeffs(coeffs_path, mf);
    std::vector<double> r0 = parse_doubles(r0_csv);
    if (static_cast<int>(r0.size()) != cf.n)
      throw InputError("--r0 needs n components");
    ExactFlowResult res = exact_flow(r0, t_end, nu0, cf);
    if (res.blowup) {
      std::cout << "blowup in [" << fmt(res.t_blow_lo) << ", "
                << fmt(res.t_blow_hi) << "]\n";
      throw NumericError("finite-time blowup before t");
    }
    std::cout << "r(t)=[";
    for (size_t i = 0; i < res.r.size(); ++i)
      std::cout << (i ? "," : "") << fmt(res.r[i]);
    std::cout << "]\n";
  });

  // --- simulate ---
  auto* simc = app.add_subcommand("simulate", "direct numerical integration");
  std::string x0_csv, mu_csv, tspan = "0:100", method = "dopri-adaptive";
  double dt = 1e-3, rel_tol = 1e-10, abs_tol = 1e-12;
  int stride = 1;
  bool diagnostics = false;
  simc->add_option("--system", sys_path, "system JSON file")->required();
  simc->add_option("--x0", x0_csv, "initial state x1,y1,...")->required();
  simc->add_option("--mu", mu_csv, "parameter values");
  simc->add_option("--t", tspan, "time span t0:t1");
  simc->add_option("--method", method, "rk4 | dopri-adaptive");
  simc->add_option("--dt", dt, "fixed step / recording pace");
  simc->add_option("--rel-tol", rel_tol, "adaptive relative tolerance");
  simc->add_option("--abs-tol", abs_tol, "adaptive absolute tolerance");
  simc->add_option("--stride", stride, "record every N-th step");
  simc->add_option("--out", out_path, "trajectory CSV path ('-' = stdout)");
  simc->add_flag("--diagnostics", diagnostics,
                 "append invariance report as a JSON footer file");
  simc->callback([&] {
    EulerianSystem sys = load_system(sys_path, mf);
    SimConfig cfg;
    if (method == "rk4")
      cfg.method = SimMethod::Rk4;
    else if (method == "dopri-adaptive")
      cfg.method = SimMethod::DopriAdaptive;
    else
      throw InputError("unknown method: " + method);
    auto colon = tspan.find(':');
    if (colon == std::string::npos) throw InputError("--t must be t0:t1");
    cfg.t0 = std::stod(tspan.substr(0, colon));
    cfg.t1 = std::stod(tspan.substr(colon + 1));
    cfg.dt = dt;
    cfg.rel_tol = rel_tol;
    cfg.abs_tol = abs_tol;
    cfg.record_stride = stride;
    mf.tolerances = {{"dt", dt}, {"rel_tol", rel_tol}, {"abs_tol", abs_tol}};
    std::vector<double> x0 = parse_doubles(x0_csv);
    std::vector<double> mu =
        mu_csv.empty() ? std::vector<double>(sys.nparams(), 0.0)
                       : parse_doubles(mu_csv);
    Trajectory traj = integrate(sys, x0, mu, cfg);
    std::ofstream file;
    std::ostream& os = open_out(out_path, file);
    os << "t";
    for (int i = 1; i <= sys.n; ++i) os << ",x" << i << ",y" << i;
    for (int i = 1; i <= sys.n; ++i) os << ",rho" << i;
    os << "\n";
    for (size_t s = 0; s < traj.times.size(); ++s) {
      os << fmt(traj.times[s]);
      for (double v : traj.states[s]) os << "," << fmt(v);
      for (int i = 1; i <= sys.n; ++i) os << "," << fmt(traj.radius(s, i));
      os << "\n";
    }
    if (diagnostics) {
      InvarianceReport inv = invariance_diagnostics(traj);
      json d;
      d["leaf_defect_max"] = inv.leaf_defect_max;
      d["zero_pair_max"] = inv.zero_pair_max;
      d["support"] = inv.support;
      d["completed"] = traj.completed;
      d["failure"] = traj.failure;
      std::string diag_path =
          (out_path.empty() || out_path == "-") ? "diagnostics.json"
                                                : out_path + ".diag.json";
      std::ofstream dout(diag_path);
      dout << d.dump(2) << "\n";
      std::cerr << "diagnostics written to " << diag_path << "\n";
    }
    if (!traj.completed) throw NumericError("integration failed: " + traj.failure);
  });

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string suite = "paper-examples";
  verify->add_option("--suite", suite, "suite name (paper-examples)");
  verify->callback([&] {
    if (suite != "paper-examples") throw InputError("unknown suite: " + suite);
    if (toral::acceptance::run_suite(std::cout) != 0)
      throw NumericError("verification suite failed");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // usage text; nonzero on bad flags
  }
  mf.emit();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "analysis rejected: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  }
}
