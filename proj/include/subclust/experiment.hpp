#ifndef SUBCLUST_EXPERIMENT_HPP
#define SUBCLUST_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subclust/bounds.hpp"
#include "subclust/pipeline.hpp"
#include "subclust/synthetic.hpp"

namespace subclust {

/// One multi-trial pipeline experiment: generate (or load) an instance,
/// pick xi (explicit or from a sample-size calculator), run seeded trials
/// and score them against the alpha * opt + gamma_avg + eta threshold.
struct ExperimentConfig {
  GeneratorSpec generator;
  Objective objective = Objective::kMedian;
  BlackBoxAlgorithm algorithm = BlackBoxAlgorithm::kLocalSearch;
  int k = 1;
  double alpha = 1.0;
  double gamma = 0.0;
  double eps = kNonPrivateEps;
  double delta = 0.0;
  int rounds = 0;
  int trials = 1;
  double eta = 0.1;
  double theta = 0.1;
  double c = 3.0;
  std::optional<BoundVariant> variant;  // defaults to <objective>-metric
  std::optional<double> xi;             // explicit xi overrides the calculator
  int proxy_runs = 20;
  std::uint64_t base_seed = 0;
  EmptySamplePolicy empty_sample_policy = EmptySamplePolicy::kError;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  PipelineReport report;
  bool success = false;
};

struct ExperimentReport {
  std::vector<TrialRecord> trials;
  double diameter = 0.0;
  int data_size = 0;
  double xi = 0.0;
  std::int64_t sample_bound_size = 0;  // 0 when xi was given explicitly
  RegimeFlag regime = RegimeFlag::kSublinear;
  double opt_proxy = 0.0;
  std::string opt_proxy_source;  // "oracle" or "best-of-<R>-local-search"
  double guarantee_threshold = 0.0;  // alpha * opt_proxy + gamma_avg + eta
  double success_fraction = 0.0;
  double wall_time_ms = 0.0;  // excluded from canonical reports
};

ExperimentReport run_experiment(const ExperimentConfig& cfg);

enum class ReportFormat { kJson, kCsv };

/// JSON is the full nested report; CSV is one row per trial with columns
/// seed, sample_size, avg_cost_on_sample, avg_cost_on_full, eps_prime,
/// delta_prime, success. Reals carry 12 significant digits in both.
std::string render_report(const ExperimentReport& report, ReportFormat format,
                          bool include_timing = false);

void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path,
                 bool include_timing = false);

}  // namespace subclust

#endif  // SUBCLUST_EXPERIMENT_HPP
