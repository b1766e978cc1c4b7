#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "rts/bench.hpp"

namespace {

rts::NoiseSpec build_noise(const std::string& kind, double sigma, double lo, double hi) {
  if (kind == "none") return rts::NoiseSpec::none();
  if (kind == "gaussian") return rts::NoiseSpec::gaussian(sigma);
  if (kind == "uniform") return rts::NoiseSpec::uniform(lo, hi);
  throw CLI::ValidationError("--noise", "expected none, gaussian or uniform");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Flat key=value lines; '#' starts a comment, blank lines are skipped.
std::vector<std::pair<std::string, std::string>> load_flat_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos || trim(body.substr(0, eq)).empty())
      throw std::runtime_error("config: expected key=value at " + path + ":" +
                               std::to_string(lineno));
    pairs.emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }
  return pairs;
}

// CLI11's set_config never fires on a subcommand, so the file is located by hand
// before the real parse and applied as per-option defaults; explicit flags win.
std::string config_path_from_argv(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
  }
  return {};
}

void apply_config_defaults(CLI::App& run, const std::string& path) {
  for (const auto& [key, value] : load_flat_config(path)) {
    auto* opt = key == "config" ? nullptr : run.get_option_no_throw("--" + key);
    if (opt == nullptr) throw std::runtime_error("config: unknown key '" + key + "'");
    opt->required(false);
    try {
      opt->default_val(value);
    } catch (const CLI::Error&) {
      throw std::runtime_error("config: bad value '" + value + "' for key '" + key + "'");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular tree search benchmark runner"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "run one benchmark experiment");

  rts::ExperimentConfig cfg;
  std::string sense = "min";
  std::string baseline = "none";
  std::string noise = "gaussian";
  double noise_sigma = 1.0;
  double noise_lo = -1.0, noise_hi = 1.0;

  std::string config_path;
  run->add_option("--config", config_path, "flat key=value file; command-line flags win");
  run->add_option("--objective", cfg.objective, "rastrigin | sphere | step_sphere | vee")
      ->capture_default_str();
  run->add_option("--dim", cfg.dim, "problem dimension")->capture_default_str();
  run->add_option("--sense", sense, "min | max")->capture_default_str();
  run->add_option("--budget", cfg.budget, "total simulator calls")->required();
  run->add_option("--n0", cfg.stage1_budget, "uniform warmup size")->required();
  run->add_option("--alpha", cfg.split.alpha, "spatial balance share")
      ->capture_default_str();
  run->add_option("--kappa", cfg.split.kappa, "forced-random split probability")
      ->capture_default_str();
  run->add_option("--beta", cfg.split.beta, "child I-sample share")
      ->capture_default_str();
  run->add_option("--cp", cfg.cp, "UCT exploration constant")->capture_default_str();
  run->add_option("--fmin", cfg.split.balance.min_count, "sample-balance floor")
      ->capture_default_str();
  run->add_option("--reps", cfg.reps, "independent replications")->capture_default_str();
  run->add_option("--seed", cfg.base_seed, "base seed; replication r mixes in r")
      ->capture_default_str();
  run->add_option("--baseline", baseline, "none | uniform_random")->capture_default_str();
  run->add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  run->add_option("--workers", cfg.workers, "concurrent replications")
      ->capture_default_str();
  run->add_option("--noise", noise, "none | gaussian | uniform")->capture_default_str();
  run->add_option("--noise-sigma", noise_sigma, "gaussian noise scale")
      ->capture_default_str();
  run->add_option("--noise-lo", noise_lo, "uniform noise lower bound")
      ->capture_default_str();
  run->add_option("--noise-hi", noise_hi, "uniform noise upper bound")
      ->capture_default_str();
  run->add_flag("--dump-tree", cfg.dump_tree, "write tree_rep<k>.txt per replication");
  run->add_flag("--dump-samples", cfg.dump_samples,
                "write samples_rep<k>.csv per replication");

  try {
    const std::string path = config_path_from_argv(argc, argv);
    if (!path.empty()) apply_config_defaults(*run, path);
  } catch (const std::exception& e) {
    std::cerr << "rtsopt: " << e.what() << "\n";
    return 1;
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (sense == "min") cfg.sense = rts::Sense::kMinimize;
    else if (sense == "max") cfg.sense = rts::Sense::kMaximize;
    else throw std::invalid_argument("--sense expects min or max");

    if (baseline == "none") cfg.baseline = rts::BaselineKind::kNone;
    else if (baseline == "uniform_random") cfg.baseline = rts::BaselineKind::kUniformRandom;
    else throw std::invalid_argument("--baseline expects none or uniform_random");

    cfg.noise = build_noise(noise, noise_sigma, noise_lo, noise_hi);

    const rts::ExperimentResult res = rts::run_experiment(cfg);
    rts::emit(res, cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "rtsopt: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
