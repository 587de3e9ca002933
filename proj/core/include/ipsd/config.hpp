#ifndef IPSD_CONFIG_HPP
#define IPSD_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ipsd/lattice.hpp"
#include "ipsd/poly.hpp"
#include "ipsd/statespace.hpp"
#include "ipsd/verify.hpp"

namespace ipsd {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Declarative experiment description, parsed from a JSON file. Rationals may
// be given as strings like "1/4"; unknown keys are rejected.
struct ExperimentConfig {
  // model block
  std::string kind;  // sep, sep2j, sip, irw, ladder_sep, bmp, bep, kmp,
                     // dual_kmp, boundary_sep2j, boundary_bep,
                     // dual_absorbing_sep2j, dual_absorbing_sip
  int two_j = 1;
  int m = 1;
  int levels = 1;
  Rational lambda = Rational(1, 4);
  Rational rho = Rational(1, 2);

  GraphSpec graph;

  // run block
  std::string experiment;  // check-algebra, check-duality, check-stationary,
                           // simulate, mc-duality, profile, limits
  double t = 1.0;
  double dt = 1e-3;
  long samples = 10000;
  std::uint64_t seed = 1;
  int sector = 2;
  int cutoff = 12;
  double tolerance = 3.0;  // sigma for mean comparisons
  Config eta0, xi0;
  std::vector<int> param_list;  // j or m values for the limits experiment
};

ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

// Executes the experiment, writing report.txt (human, timestamped),
// results.kv (machine-readable key=value records, byte-stable for a fixed
// config and seed) and table.csv where tabular output applies.
// Returns 0 on pass, 1 on check failure.
int run_experiment(const ExperimentConfig& cfg, const std::string& out_dir);

// Model/check catalog in stable order.
std::string catalog_text();

}  // namespace ipsd

#endif
