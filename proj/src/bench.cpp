#include "rts/bench.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rts/stats.hpp"

namespace rts {

const char* const kRepCsvHeader =
    "rep,seed,true_value,estimate,total_sims,leaf_count,max_depth,"
    "min_leaf_depth,deferred_splits";

namespace {

// Full-precision decimal form so CSV round-trips reproduce the double.
std::string g17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fixed3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

Objective build_objective(const ExperimentConfig& cfg) {
  Objective obj = make_objective(cfg.objective, cfg.dim);
  return obj.spec().sense == cfg.sense ? obj : obj.with_sense(cfg.sense);
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.reps < 1) throw std::invalid_argument("experiment: reps must be >= 1");
  if (cfg.workers < 1) throw std::invalid_argument("experiment: workers must be >= 1");
  if (cfg.out_dir.empty()) throw std::invalid_argument("experiment: empty output dir");
}

StatRow summarize_metric(const std::string& algorithm, const std::string& metric,
                         const std::vector<double>& values, Sense sense,
                         std::optional<double> target) {
  const double lo_q = quantile(values, 0.25);
  const double mid = quantile(values, 0.5);
  const double hi_q = quantile(values, 0.75);
  double best = values[0], worst = values[0];
  for (const double v : values) {
    best = std::min(best, v);
    worst = std::max(worst, v);
  }
  if (sense == Sense::kMaximize) std::swap(best, worst);
  const double rmse = target ? rmse_against(values, *target)
                             : std::numeric_limits<double>::quiet_NaN();
  return StatRow{algorithm, metric, mean_of(values), rmse, best, lo_q, mid, hi_q, worst};
}

void append_rows(std::vector<StatRow>& rows, const std::string& algorithm,
                 const std::vector<double>& true_values,
                 const std::vector<double>& estimates, const Objective& obj) {
  const auto target = obj.spec().optimum_value;
  const Sense sense = obj.spec().sense;
  rows.push_back(summarize_metric(algorithm, "true_value", true_values, sense, target));
  rows.push_back(summarize_metric(algorithm, "estimate", estimates, sense, target));
}

}  // namespace

BaselineRecord uniform_random_baseline(const Objective& objective, const NoiseSpec& noise,
                                       long budget, std::uint64_t seed, int rep) {
  if (budget < 1) throw std::invalid_argument("baseline: budget must be >= 1");
  RngStream rng(seed);
  const Hyperrectangle cube = Hyperrectangle::unit(objective.dim());
  Point best_x;
  double best_y = 0.0;
  for (long i = 0; i < budget; ++i) {
    Point x = uniform_sample(cube, rng);
    const double y = objective.simulate(x, noise, rng);
    if (i == 0 || y > best_y) {
      best_y = y;
      best_x = std::move(x);
    }
  }
  const bool minimizing = objective.spec().sense == Sense::kMinimize;
  return BaselineRecord{rep, seed,
                        objective.eval_true(objective.to_user(best_x)),
                        minimizing ? -best_y : best_y, budget};
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const Objective obj = build_objective(cfg);

  if (cfg.dump_tree || cfg.dump_samples)
    std::filesystem::create_directories(cfg.out_dir);

  ExperimentResult out;
  out.reps.resize(cfg.reps);

  auto run_one = [&](int rep) {
    SearchConfig sc;
    sc.budget = cfg.budget;
    sc.stage1_budget = cfg.stage1_budget;
    sc.split = cfg.split;
    sc.cp = cfg.cp;
    sc.seed = mix_seed(cfg.base_seed, static_cast<std::uint64_t>(rep));
    RegularTreeSearch search(obj, cfg.noise, sc);
    const RunResult r = search.run();
    out.reps[rep] = RepRecord{rep,          sc.seed,        r.true_value,
                              r.estimate,   r.total_sims,   r.leaf_count,
                              r.max_depth,  r.min_leaf_depth, r.deferred_splits};
    if (cfg.dump_tree) {
      std::ofstream f(std::filesystem::path(cfg.out_dir) /
                      ("tree_rep" + std::to_string(rep) + ".txt"));
      dump_tree(f, search.tree(), search.store());
    }
    if (cfg.dump_samples) {
      std::ofstream f(std::filesystem::path(cfg.out_dir) /
                      ("samples_rep" + std::to_string(rep) + ".csv"));
      dump_samples(f, search.tree(), search.store());
    }
  };

  const int workers = std::min(cfg.workers, cfg.reps);
  if (workers <= 1) {
    for (int rep = 0; rep < cfg.reps; ++rep) run_one(rep);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        for (int rep = t; rep < cfg.reps; rep += workers) run_one(rep);
      });
    }
    for (auto& th : pool) th.join();
  }

  if (cfg.baseline == BaselineKind::kUniformRandom) {
    out.baseline.reserve(cfg.reps);
    for (int rep = 0; rep < cfg.reps; ++rep) {
      out.baseline.push_back(uniform_random_baseline(
          obj, cfg.noise, cfg.budget,
          mix_seed(cfg.base_seed, static_cast<std::uint64_t>(rep)), rep));
    }
  }

  std::vector<double> tv, est;
  tv.reserve(cfg.reps);
  est.reserve(cfg.reps);
  for (const auto& r : out.reps) {
    tv.push_back(r.true_value);
    est.push_back(r.estimate);
  }
  append_rows(out.summary, "regular_tree_search", tv, est, obj);
  if (!out.baseline.empty()) {
    tv.clear();
    est.clear();
    for (const auto& r : out.baseline) {
      tv.push_back(r.true_value);
      est.push_back(r.estimate);
    }
    append_rows(out.summary, "uniform_random", tv, est, obj);
  }
  return out;
}

void emit(const ExperimentResult& res, const ExperimentConfig& cfg, std::ostream& os) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);

  {
    std::ofstream f(fs::path(cfg.out_dir) / "reps.csv", std::ios::binary);
    if (!f) throw std::runtime_error("emit: cannot write reps.csv");
    f << kRepCsvHeader << "\n";
    for (const auto& r : res.reps) {
      f << r.rep << "," << r.seed << "," << g17(r.true_value) << ","
        << g17(r.estimate) << "," << r.total_sims << "," << r.leaf_count << ","
        << r.max_depth << "," << r.min_leaf_depth << "," << r.deferred_splits
        << "\n";
    }
  }

  if (!res.baseline.empty()) {
    std::ofstream f(fs::path(cfg.out_dir) / "baseline_reps.csv", std::ios::binary);
    if (!f) throw std::runtime_error("emit: cannot write baseline_reps.csv");
    f << "rep,seed,true_value,estimate,total_sims\n";
    for (const auto& r : res.baseline) {
      f << r.rep << "," << r.seed << "," << g17(r.true_value) << ","
        << g17(r.estimate) << "," << r.total_sims << "\n";
    }
  }

  {
    std::ofstream f(fs::path(cfg.out_dir) / "summary.csv", std::ios::binary);
    if (!f) throw std::runtime_error("emit: cannot write summary.csv");
    f << "algorithm,metric,mean,rmse,best,q25,q50,q75,worst\n";
    for (const auto& s : res.summary) {
      f << s.algorithm << "," << s.metric << "," << g17(s.mean) << ","
        << g17(s.rmse) << "," << g17(s.best) << "," << g17(s.q25) << ","
        << g17(s.q50) << "," << g17(s.q75) << "," << g17(s.worst) << "\n";
    }
  }

  char line[256];
  os << cfg.objective << " d=" << cfg.dim << " budget=" << cfg.budget
     << " reps=" << res.reps.size() << "\n";
  std::snprintf(line, sizeof line, "%-22s %-11s %10s %10s %10s %10s %10s %10s %10s",
                "algorithm", "metric", "mean", "rmse", "best", "25%", "50%", "75%",
                "worst");
  os << line << "\n";
  for (const auto& s : res.summary) {
    std::snprintf(line, sizeof line,
                  "%-22s %-11s %10s %10s %10s %10s %10s %10s %10s",
                  s.algorithm.c_str(), s.metric.c_str(), fixed3(s.mean).c_str(),
                  fixed3(s.rmse).c_str(), fixed3(s.best).c_str(),
                  fixed3(s.q25).c_str(), fixed3(s.q50).c_str(),
                  fixed3(s.q75).c_str(), fixed3(s.worst).c_str());
    os << line << "\n";
  }
}

}  // namespace rts
