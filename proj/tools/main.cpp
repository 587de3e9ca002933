#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "ipsd/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"interacting-particle-system duality workbench"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  long seed_override = -1;
  int threads = 1;
  if (const char* env = std::getenv("IPSD_OUT_DIR")) out_dir = env;
  if (out_dir.empty()) out_dir = ".";

  CLI::App* run = app.add_subcommand("run", "execute an experiment from a config file");
  run->add_option("--config", config_path, "path to the JSON experiment config")->required();
  run->add_option("--seed", seed_override, "override the config seed");
  run->add_option("--threads", threads, "worker threads for Monte Carlo runs");
  run->add_option("--out", out_dir, "output directory (default $IPSD_OUT_DIR or .)");

  CLI::App* catalog = app.add_subcommand("catalog", "list model kinds and supported checks");

  CLI11_PARSE(app, argc, argv);

  if (catalog->parsed()) {
    std::cout << ipsd::catalog_text();
    return 0;
  }

  try {
    ipsd::ExperimentConfig cfg = ipsd::parse_config(config_path);
    if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
    int status = ipsd::run_experiment(cfg, out_dir);
    if (status != 0) std::cerr << "check failed; see " << out_dir << "/report.txt\n";
    return status;
  } catch (const ipsd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
