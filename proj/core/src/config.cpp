#include "ipsd/config.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ipsd {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const char* block,
                  std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw ConfigError(std::string("unknown key '") + key + "' in " + block + " block");
  }
}

Rational rational_from(const json& v, const char* what) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
      throw ConfigError(std::string("cannot parse ") + what + " as a rational");
    }
  }
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ConfigError(std::string(what) + " must be an integer or a rational string like \"1/4\"");
}

Config int_vector_from(const json& v, const char* what) {
  if (!v.is_array()) throw ConfigError(std::string(what) + " must be an array of integers");
  Config out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw ConfigError(std::string(what) + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

const std::vector<std::string> kKinds = {
    "sep",          "sep2j",        "sip",
    "irw",          "ladder_sep",   "bmp",
    "bep",          "kmp",          "dual_kmp",
    "boundary_sep2j", "boundary_bep", "dual_absorbing_sep2j",
    "dual_absorbing_sip"};

const std::vector<std::string> kExperiments = {
    "check-algebra", "check-duality", "check-stationary", "simulate",
    "mc-duality",    "profile",       "limits"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

// Structured writer: human report plus byte-stable key=value records and an
// optional CSV table.
class Emitter {
 public:
  Emitter(const std::string& out_dir) : dir_(out_dir) {
    std::filesystem::create_directories(dir_);
  }

  void record(const std::string& key, const std::string& value) {
    records_.emplace_back(key, value);
  }
  void record(const std::string& key, double value) {
    std::ostringstream os;
    os << std::setprecision(17) << value;
    record(key, os.str());
  }
  void record(const std::string& key, const Rational& value) {
    record(key, value.str());
  }
  void report_line(const std::string& line) { report_ += line + "\n"; }

  void csv_header(const std::string& header) { csv_ = header + "\n"; }
  void csv_row(const std::string& row) { csv_ += row + "\n"; }

  void flush(bool pass) {
    {
      std::ofstream kv(dir_ + "/results.kv");
      for (const auto& [k, v] : records_) kv << k << "=" << v << "\n";
      kv << "verdict=" << (pass ? "pass" : "fail") << "\n";
    }
    {
      std::ofstream rep(dir_ + "/report.txt");
      std::time_t now = std::time(nullptr);
      char stamp[64];
      std::strftime(stamp, sizeof stamp, "%Y-%m-%d %H:%M:%S", std::gmtime(&now));
      rep << "generated: " << stamp << " UTC\n\n" << report_;
      rep << "\nverdict: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    if (!csv_.empty()) {
      std::ofstream csv(dir_ + "/table.csv");
      csv << csv_;
    }
  }

 private:
  std::string dir_;
  std::vector<std::pair<std::string, std::string>> records_;
  std::string report_;
  std::string csv_;
};

std::string config_to_string(const Config& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");
  require_keys(root, "top-level", {"model", "graph", "run"});
  if (!root.contains("model") || !root.contains("run"))
    throw ConfigError("config needs model and run blocks");

  ExperimentConfig cfg;

  const json& model = root["model"];
  require_keys(model, "model", {"kind", "j", "m", "levels", "lambda", "rho"});
  if (!model.contains("kind")) throw ConfigError("model.kind is required");
  cfg.kind = model["kind"].get<std::string>();
  if (!contains(kKinds, cfg.kind)) throw ConfigError("unknown model kind '" + cfg.kind + "'");
  if (model.contains("j")) {
    Rational j = rational_from(model["j"], "model.j");
    Rational twice = 2 * j;
    if (denominator(twice) != 1 || twice <= 0)
      throw ConfigError("model.j must be a positive half-integer");
    cfg.two_j = static_cast<int>(numerator(twice));
  }
  if (model.contains("m")) {
    if (!model["m"].is_number_integer() || model["m"].get<int>() < 1)
      throw ConfigError("model.m must be a positive integer");
    cfg.m = model["m"].get<int>();
  }
  if (model.contains("levels")) {
    if (!model["levels"].is_number_integer() || model["levels"].get<int>() < 1)
      throw ConfigError("model.levels must be a positive integer");
    cfg.levels = model["levels"].get<int>();
  }
  if (model.contains("lambda")) cfg.lambda = rational_from(model["lambda"], "model.lambda");
  if (model.contains("rho")) cfg.rho = rational_from(model["rho"], "model.rho");

  if (root.contains("graph")) {
    const json& graph = root["graph"];
    require_keys(graph, "graph", {"sites", "edges", "boundary"});
    if (!graph.contains("sites")) throw ConfigError("graph.sites is required");
    cfg.graph.n_sites = graph["sites"].get<int>();
    if (cfg.graph.n_sites < 1) throw ConfigError("graph.sites must be positive");
    if (graph.contains("edges")) {
      for (const auto& e : graph["edges"]) {
        if (!e.is_array() || e.size() != 3)
          throw ConfigError("graph.edges entries must be [i, l, weight]");
        cfg.graph.edges.emplace_back(e[0].get<int>(), e[1].get<int>(),
                                     rational_from(e[2], "edge weight"));
      }
    } else {
      for (int i = 0; i + 1 < cfg.graph.n_sites; ++i)
        cfg.graph.edges.emplace_back(i, i + 1, Rational(1));
    }
    if (graph.contains("boundary")) {
      for (const auto& [site, value] : graph["boundary"].items())
        cfg.graph.boundary[std::stoi(site)] = rational_from(value, "boundary parameter");
    }
  } else {
    cfg.graph.n_sites = 2;
    cfg.graph.edges.emplace_back(0, 1, Rational(1));
  }

  const json& run = root["run"];
  require_keys(run, "run",
               {"experiment", "t", "dt", "samples", "seed", "sector", "cutoff",
                "tolerance", "eta0", "xi0", "param_list"});
  if (!run.contains("experiment")) throw ConfigError("run.experiment is required");
  cfg.experiment = run["experiment"].get<std::string>();
  if (!contains(kExperiments, cfg.experiment))
    throw ConfigError("unknown experiment '" + cfg.experiment + "'");
  if (run.contains("t")) cfg.t = run["t"].get<double>();
  if (run.contains("dt")) cfg.dt = run["dt"].get<double>();
  if (run.contains("samples")) cfg.samples = run["samples"].get<long>();
  if (run.contains("seed")) cfg.seed = run["seed"].get<std::uint64_t>();
  if (run.contains("sector")) cfg.sector = run["sector"].get<int>();
  if (run.contains("cutoff")) cfg.cutoff = run["cutoff"].get<int>();
  if (run.contains("tolerance")) cfg.tolerance = run["tolerance"].get<double>();
  if (run.contains("eta0")) cfg.eta0 = int_vector_from(run["eta0"], "run.eta0");
  if (run.contains("xi0")) cfg.xi0 = int_vector_from(run["xi0"], "run.xi0");
  if (run.contains("param_list"))
    cfg.param_list = int_vector_from(run["param_list"], "run.param_list");
  return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

namespace {

int effective_two_j(const ExperimentConfig& cfg) {
  return cfg.kind == "sep" ? 1 : cfg.two_j;
}

bool is_su2_kind(const std::string& kind) {
  return kind == "sep" || kind == "sep2j" || kind == "ladder_sep" ||
         kind == "boundary_sep2j" || kind == "dual_absorbing_sep2j" || kind == "bmp";
}

RatMatrix block(const RatMatrix& a, std::size_t n) {
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = a(i, j);
  return b;
}

bool run_check_algebra(const ExperimentConfig& cfg, Emitter& em) {
  bool pass = true;
  auto check = [&](const std::string& name, const RatMatrix& residual, std::size_t exact) {
    bool ok = block(residual, exact).is_zero();
    em.record("commutator." + name, ok ? "0" : residual.max_abs_entry().value.str());
    em.report_line("commutator " + name + ": " + (ok ? "exactly zero" : "NONZERO"));
    pass = pass && ok;
  };
  if (is_su2_kind(cfg.kind)) {
    OperatorTriple r = su2_rep(effective_two_j(cfg));
    check("[J0,J+]-J+", commutator(r.zero, r.plus) - r.plus, r.exact_dim);
    check("[J0,J-]+J-", commutator(r.zero, r.minus) + r.minus, r.exact_dim);
    check("[J+,J-]-2J0", commutator(r.plus, r.minus) - r.zero * Rational(2), r.exact_dim);
  } else if (cfg.kind == "irw") {
    OperatorTriple r = heisenberg_rep(cfg.cutoff);
    check("[a-,a+]-1", commutator(r.minus, r.plus) - RatMatrix::identity(r.dim), r.exact_dim);
  } else {
    OperatorTriple r = su11_rep(cfg.m, cfg.cutoff);
    check("[K0,K+]-K+", commutator(r.zero, r.plus) - r.plus, r.exact_dim);
    check("[K0,K-]+K-", commutator(r.zero, r.minus) + r.minus, r.exact_dim);
    check("[K+,K-]+2K0", commutator(r.plus, r.minus) + r.zero * Rational(2), r.exact_dim);
  }
  return pass;
}

bool report_residual(Emitter& em, const std::string& name, const Residual& r) {
  em.record("residual." + name, r.zero ? "0" : r.witness.value.str());
  em.report_line(name + " residual: " + (r.zero ? "exactly 0" : "NONZERO"));
  return r.zero;
}

bool run_check_duality(const ExperimentConfig& cfg, Emitter& em) {
  Kernel k = build_kernel(cfg.graph);
  bool pass = true;
  if (cfg.kind == "sep" || cfg.kind == "sep2j" || cfg.kind == "sip" || cfg.kind == "irw") {
    for (int na = 0; na <= cfg.sector; ++na)
      for (int nb = 0; nb <= na; ++nb) {
        CTMCGenerator la = cfg.kind == "sip"  ? sip_generator(k, cfg.m, na)
                           : cfg.kind == "irw" ? irw_generator(k, na)
                                               : sep2j_generator(k, effective_two_j(cfg), na);
        CTMCGenerator lb = cfg.kind == "sip"  ? sip_generator(k, cfg.m, nb)
                           : cfg.kind == "irw" ? irw_generator(k, nb)
                                               : sep2j_generator(k, effective_two_j(cfg), nb);
        DualityFunction d = cfg.kind == "sip"  ? sip_duality(cfg.m)
                            : cfg.kind == "irw" ? irw_duality()
                                                : sep2j_duality(effective_two_j(cfg));
        std::string name = "LD-DL^T." + std::to_string(na) + "." + std::to_string(nb);
        pass = report_residual(em, name, verify_selfduality_sectors(la, lb, d)) && pass;
      }
  } else if (cfg.kind == "ladder_sep") {
    CTMCGenerator fine = ladder_sep_generator(k, cfg.levels, cfg.sector);
    CTMCGenerator coarse = sep2j_generator(k, cfg.levels, cfg.sector);
    int n = k.n_sites(), levels = cfg.levels;
    try {
      lumping_check(fine, coarse,
                    [n, levels](const Config& z) { return ladder_projection(z, n, levels); });
      em.record("lumping", "0");
      em.report_line("ladder lumping onto per-site counts: exact");
    } catch (const NotLumpable& e) {
      em.record("lumping", e.what());
      em.report_line(std::string("ladder lumping: FAILED (") + e.what() + ")");
      pass = false;
    }
  } else if (cfg.kind == "boundary_sep2j" || cfg.kind == "dual_absorbing_sep2j") {
    int two_j = effective_two_j(cfg);
    CTMCGenerator l = boundary_sep2j_generator(k, two_j);
    for (int nb = 1; nb <= cfg.sector; ++nb) {
      CTMCGenerator ld = dual_absorbing_sep2j_generator(k, two_j, nb);
      RatMatrix d = duality_matrix(boundary_sep2j_duality(k, two_j), l.space(), ld.space());
      std::string name = "boundary-LD-DL^T." + std::to_string(nb);
      pass = report_residual(em, name, verify_duality(l.dense(), ld.dense(), d)) && pass;
    }
  } else if (cfg.kind == "bmp") {
    DiffOperator l = bmp_operator(k, 1);
    for (int nb = 1; nb <= cfg.sector; ++nb) {
      CTMCGenerator ld = sip_generator(k, 1, nb);
      Residual r = verify_duality_diffusion(l, ld, [](const Config& xi) {
        return duality_polynomial(ContinuousModel::BMP, xi, 1);
      });
      pass = report_residual(em, "bmp-sip." + std::to_string(nb), r) && pass;
    }
  } else if (cfg.kind == "bep") {
    DiffOperator l = bep_operator(k, cfg.m);
    for (int nb = 1; nb <= cfg.sector; ++nb) {
      CTMCGenerator ld = sip_generator(k, cfg.m, nb);
      int m = cfg.m;
      Residual r = verify_duality_diffusion(l, ld, [m](const Config& xi) {
        return duality_polynomial(ContinuousModel::BEP, xi, m);
      });
      pass = report_residual(em, "bep-sip." + std::to_string(nb), r) && pass;
    }
  } else if (cfg.kind == "boundary_bep" || cfg.kind == "dual_absorbing_sip") {
    DiffOperator l = boundary_bep_operator(k, cfg.m);
    for (int nb = 1; nb <= cfg.sector; ++nb) {
      CTMCGenerator ld = dual_absorbing_sip_generator(k, cfg.m, nb);
      int m = cfg.m;
      const Kernel* kp = &k;
      Residual r = verify_duality_diffusion(l, ld, [kp, m](const Config& xi) {
        return boundary_bep_duality_polynomial(*kp, m, xi);
      });
      pass = report_residual(em, "boundary-bep-sip." + std::to_string(nb), r) && pass;
    }
  } else if (cfg.kind == "kmp" || cfg.kind == "dual_kmp") {
    for (int total = 0; total <= cfg.sector; ++total)
      for (int xi = 0; xi <= total; ++xi) {
        Polynomial r = thermal_duality_residual(cfg.m, xi, total - xi);
        std::string name =
            "thermal." + std::to_string(xi) + "." + std::to_string(total - xi);
        em.record("residual." + name, r.is_zero() ? "0" : r.to_string());
        em.report_line(name + " residual: " + (r.is_zero() ? "exactly 0" : "NONZERO"));
        pass = pass && r.is_zero();
      }
  } else {
    throw ConfigError("check-duality does not support model kind '" + cfg.kind + "'");
  }
  return pass;
}

bool run_check_stationary(const ExperimentConfig& cfg, Emitter& em) {
  Kernel k = build_kernel(cfg.graph);
  if (cfg.kind == "kmp" || cfg.kind == "dual_kmp") {
    Rational res = gamma_hat_stationarity_residual(cfg.m, cfg.sector);
    em.record("stationarity.residual", res);
    em.report_line("pair redistribution law stationarity residual: " + res.str());
    return res == 0;
  }
  CTMCGenerator l = cfg.kind == "sip"  ? sip_generator(k, cfg.m, cfg.sector)
                    : cfg.kind == "irw" ? irw_generator(k, cfg.sector)
                    : cfg.kind == "sep" || cfg.kind == "sep2j"
                        ? sep2j_generator(k, effective_two_j(cfg), std::nullopt)
                        : throw ConfigError("check-stationary does not support model kind '" +
                                            cfg.kind + "'");
  std::vector<Rational> mu(l.space().size(), 1);
  for (std::size_t s = 0; s < l.space().size(); ++s) {
    const Config& c = l.space().state(s);
    Rational w = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (cfg.kind == "sip") {
        w *= pow_rational(2 * cfg.lambda, c[i]) * rising_factorial(Rational(cfg.m, 2), c[i]) /
             Rational(factorial(c[i]));
      } else if (cfg.kind == "irw") {
        w *= pow_rational(cfg.lambda, c[i]) / Rational(factorial(c[i]));
      } else {
        int two_j = effective_two_j(cfg);
        w *= Rational(binomial(two_j, c[i])) * pow_rational(cfg.rho, c[i]) *
             pow_rational(1 - cfg.rho, two_j - c[i]);
      }
    }
    mu[s] = w;
  }
  auto witness = detailed_balance_check(l, mu);
  if (witness) {
    em.record("detailed_balance", "fail at states " + std::to_string(witness->first) + "," +
                                      std::to_string(witness->second));
    em.report_line("detailed balance: FAILED");
    return false;
  }
  em.record("detailed_balance", "pass");
  em.report_line("detailed balance of the product measure: exact");
  return true;
}

RateView rate_view_for(const ExperimentConfig& cfg, const Kernel& k) {
  if (cfg.kind == "sep" || cfg.kind == "sep2j") return sep2j_rate_view(k, effective_two_j(cfg));
  if (cfg.kind == "sip") return sip_rate_view(k, cfg.m);
  if (cfg.kind == "irw") return irw_rate_view(k);
  if (cfg.kind == "boundary_sep2j") return boundary_sep2j_rate_view(k, effective_two_j(cfg));
  if (cfg.kind == "dual_absorbing_sep2j")
    return dual_absorbing_sep2j_rate_view(k, effective_two_j(cfg));
  if (cfg.kind == "dual_absorbing_sip") return dual_absorbing_sip_rate_view(k, cfg.m);
  throw ConfigError("no jump-rate view for model kind '" + cfg.kind + "'");
}

bool run_simulate(const ExperimentConfig& cfg, Emitter& em) {
  Kernel k = build_kernel(cfg.graph);
  if (cfg.eta0.empty()) throw ConfigError("simulate needs run.eta0");
  RateView view = rate_view_for(cfg, k);
  CounterRng rng(cfg.seed, 0);
  TrajectoryResult tr = gillespie(view, cfg.eta0, cfg.t, rng);
  em.record("final_state", config_to_string(tr.state));
  em.record("n_events", std::to_string(tr.n_events));
  em.report_line("trajectory from " + config_to_string(cfg.eta0) + " to " +
                 config_to_string(tr.state) + " in " + std::to_string(tr.n_events) + " events");
  em.csv_header("slot,occupation");
  for (std::size_t i = 0; i < tr.state.size(); ++i)
    em.csv_row(std::to_string(i) + "," + std::to_string(tr.state[i]));
  return true;
}

bool run_mc_duality(const ExperimentConfig& cfg, Emitter& em) {
  Kernel k = build_kernel(cfg.graph);
  if (cfg.eta0.empty() || cfg.xi0.empty()) throw ConfigError("mc-duality needs run.eta0 and run.xi0");
  if (cfg.kind != "sep" && cfg.kind != "sep2j" && cfg.kind != "sip" && cfg.kind != "irw")
    throw ConfigError("mc-duality supports the self-dual jump models");
  RateView view = rate_view_for(cfg, k);
  DualityFunction d = cfg.kind == "sip"  ? sip_duality(cfg.m)
                      : cfg.kind == "irw" ? irw_duality()
                                          : sep2j_duality(effective_two_j(cfg));
  MCComparison c = mc_duality_check(view, view, d, cfg.eta0, cfg.xi0, cfg.t, cfg.samples,
                                    cfg.seed);
  em.record("mc.lhs", c.lhs);
  em.record("mc.rhs", c.rhs);
  em.record("mc.z_score", c.z_score);
  em.record("mc.n_samples", std::to_string(c.n_samples));
  em.record("mc.reran", c.reran ? "yes" : "no");
  std::ostringstream os;
  os << "E[D(eta_t,xi0)] = " << c.lhs << " +- " << c.lhs_stderr << ", E[D(eta0,xi_t)] = "
     << c.rhs << " +- " << c.rhs_stderr << " (z = " << c.z_score << ")";
  em.report_line(os.str());
  return c.pass;
}

bool run_profile(const ExperimentConfig& cfg, Emitter& em) {
  Kernel k = build_kernel(cfg.graph);
  if (k.boundary().empty()) throw ConfigError("profile needs boundary sites in the graph");
  std::vector<Rational> prof;
  std::string quantity;
  if (cfg.kind == "boundary_sep2j" || cfg.kind == "sep" || cfg.kind == "sep2j") {
    prof = stationary_profile_sep2j(k, effective_two_j(cfg));
    quantity = "E[eta_i]";
  } else if (cfg.kind == "kmp" || cfg.kind == "bep" || cfg.kind == "boundary_bep" ||
             cfg.kind == "dual_kmp") {
    prof = stationary_profile_energy(k, cfg.m);
    quantity = "E[z_i]";
  } else {
    throw ConfigError("profile does not support model kind '" + cfg.kind + "'");
  }
  em.csv_header("site," + quantity + ",exact");
  for (std::size_t i = 0; i < prof.size(); ++i) {
    std::ostringstream os;
    os << std::setprecision(17) << static_cast<double>(prof[i]);
    em.csv_row(std::to_string(i) + "," + os.str() + "," + prof[i].str());
    em.record("profile." + std::to_string(i), prof[i]);
    em.report_line("site " + std::to_string(i) + ": " + quantity + " = " + prof[i].str());
  }
  return true;
}

bool run_limits(const ExperimentConfig& cfg, Emitter& em) {
  Kernel k = build_kernel(cfg.graph);
  Config start = cfg.eta0.empty() ? Config{2, 0} : cfg.eta0;
  if (static_cast<int>(start.size()) != k.n_sites())
    throw ConfigError("limits start configuration must cover all sites");
  std::vector<int> params = cfg.param_list.empty() ? std::vector<int>{2, 8, 32} : cfg.param_list;
  std::vector<double> tv;
  std::string label;
  if (cfg.kind == "sep" || cfg.kind == "sep2j") {
    std::vector<int> two_js;
    for (int j : params) two_js.push_back(2 * j);
    tv = limit_table_j(k, two_js, start, cfg.t);
    label = "j";
  } else if (cfg.kind == "sip" || cfg.kind == "bep") {
    tv = limit_table_m(k, params, start, cfg.t);
    label = "m";
  } else {
    throw ConfigError("limits does not support model kind '" + cfg.kind + "'");
  }
  em.csv_header(label + ",tv_distance");
  bool decreasing = true;
  for (std::size_t i = 0; i < tv.size(); ++i) {
    std::ostringstream os;
    os << std::setprecision(17) << tv[i];
    em.csv_row(std::to_string(params[i]) + "," + os.str());
    em.record("tv." + std::to_string(params[i]), tv[i]);
    em.report_line(label + " = " + std::to_string(params[i]) + ": TV distance " + os.str());
    if (i > 0 && tv[i] >= tv[i - 1]) decreasing = false;
  }
  em.record("tv.decreasing", decreasing ? "yes" : "no");
  return decreasing;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg, const std::string& out_dir) {
  Emitter em(out_dir);
  em.record("model.kind", cfg.kind);
  em.record("run.experiment", cfg.experiment);
  em.record("run.seed", std::to_string(cfg.seed));
  em.report_line("model: " + cfg.kind + ", experiment: " + cfg.experiment);
  bool pass = false;
  if (cfg.experiment == "check-algebra") pass = run_check_algebra(cfg, em);
  else if (cfg.experiment == "check-duality") pass = run_check_duality(cfg, em);
  else if (cfg.experiment == "check-stationary") pass = run_check_stationary(cfg, em);
  else if (cfg.experiment == "simulate") pass = run_simulate(cfg, em);
  else if (cfg.experiment == "mc-duality") pass = run_mc_duality(cfg, em);
  else if (cfg.experiment == "profile") pass = run_profile(cfg, em);
  else if (cfg.experiment == "limits") pass = run_limits(cfg, em);
  em.flush(pass);
  return pass ? 0 : 1;
}

std::string catalog_text() {
  // Stable order; each line: kind, dynamics, supported experiments.
  return
      "sep                   exclusion walkers, rate eta_i (1 - eta_l); checks: check-algebra check-duality check-stationary simulate mc-duality limits\n"
      "sep2j                 partial exclusion, rate eta_i (2j - eta_l); checks: check-algebra check-duality check-stationary simulate mc-duality limits\n"
      "sip                   inclusion walkers, rate 2 xi_i (2 xi_j + m); checks: check-algebra check-duality check-stationary simulate mc-duality limits\n"
      "irw                   independent walkers, rate eta_i; checks: check-algebra check-duality check-stationary simulate mc-duality\n"
      "ladder_sep            exclusion on sites x levels, lumps to sep2j; checks: check-duality simulate\n"
      "bmp                   momentum exchange, bond rotation generator (x_i d_j - x_j d_i)^2; checks: check-algebra check-duality\n"
      "bep                   energy diffusion, 4 z_i z_j (d_i - d_j)^2 - 2m (z_i - z_j)(d_i - d_j); checks: check-algebra check-duality limits\n"
      "kmp                   instantaneous thermalization of bond energy, Beta(m/2, m/2) share; checks: check-duality check-stationary profile\n"
      "dual_kmp              instantaneous thermalization of bond particles, discrete pair law; checks: check-duality check-stationary\n"
      "boundary_sep2j        partial exclusion with reservoir birth/death at boundary sites; checks: check-duality simulate profile\n"
      "boundary_bep          energy diffusion with reservoir coupling at boundary sites; checks: check-duality profile\n"
      "dual_absorbing_sep2j  partial exclusion with absorption into sinks; checks: check-duality simulate\n"
      "dual_absorbing_sip    inclusion walkers with absorption into sinks; checks: check-duality simulate\n";
}

}  // namespace ipsd
