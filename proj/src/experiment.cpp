#include "subclust/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>

#include "subclust/errors.hpp"
#include "subclust/json_io.hpp"
#include "subclust/oracle.hpp"

namespace subclust {

namespace {

BoundVariant default_variant(Objective o) {
  return o == Objective::kMedian ? BoundVariant::kMedianMetric : BoundVariant::kMeansMetric;
}

// Oracle optimum when enumerable, otherwise the best of proxy_runs seeded
// local-search runs on the full data; an upper bound on the optimum either
// way, which keeps the success criterion conservative.
double compute_opt_proxy(const MetricSpace& space, const Dataset& data,
                         const ExperimentConfig& cfg, std::string* source) {
  const bool squared = cfg.objective == Objective::kMeans;
  if (binomial_coeff_capped(space.size(), cfg.k, 1000000) <= 1000000) {
    *source = "oracle";
    return squared ? brute_force_opt_means(space, data, cfg.k).optimum_avg_cost
                   : brute_force_opt_median(space, data, cfg.k).optimum_avg_cost;
  }
  *source = "best-of-" + std::to_string(cfg.proxy_runs) + "-local-search";
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < cfg.proxy_runs; ++j) {
    Rng rng(splitmix64(cfg.base_seed ^ 0x70726f7879ULL) + j);
    const CenterSet c = squared ? local_search_kmeans(space, data, cfg.k, cfg.rounds, rng)
                                : local_search_kmedian(space, data, cfg.k, cfg.rounds, rng);
    best = std::min(best, squared ? avg_cost_means(data, c) : avg_cost_median(data, c));
  }
  return best;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.trials < 1) throw ValidationError("InvalidConfig: trials must be >= 1");

  Rng gen_rng(splitmix64(cfg.base_seed));
  SyntheticInstance instance = generate_synthetic(cfg.generator, gen_rng);
  const MetricSpace& space = instance.space;
  const Dataset data = instance.dataset();

  ExperimentReport report;
  report.data_size = data.size();
  report.diameter = space.diameter();

  if (cfg.xi.has_value()) {
    if (!(*cfg.xi > 0.0) || *cfg.xi > 1.0)
      throw ValidationError("InvalidSamplingProbability: xi must lie in (0, 1]");
    report.xi = *cfg.xi;
    report.regime = report.xi >= 1.0 ? RegimeFlag::kFullData : RegimeFlag::kSublinear;
  } else {
    BoundInputs in;
    in.M = space.diameter();
    in.alpha = cfg.alpha;
    in.gamma = cfg.gamma;
    in.k = cfg.k;
    in.n = space.size();
    in.d = space.kind() == SpaceKind::kEuclidean ? space.dimension() : 0;
    in.eta = cfg.eta;
    in.theta = cfg.theta;
    in.c = cfg.c;
    const SampleBound bound = sample_bound(cfg.variant.value_or(default_variant(cfg.objective)), in);
    const XiChoice choice = choose_xi_from_bound(bound, data.size());
    report.xi = choice.xi;
    report.regime = choice.regime;
    report.sample_bound_size = bound.size;
  }

  report.opt_proxy = compute_opt_proxy(space, data, cfg, &report.opt_proxy_source);
  // Black-box additive error gamma is stated in total-cost units; divide by
  // the expected sample size to move it to average-cost units.
  const double gamma_avg = cfg.gamma / std::max(1.0, report.xi * data.size());
  report.guarantee_threshold = cfg.alpha * report.opt_proxy + gamma_avg + cfg.eta;

  PipelineConfig pipe;
  pipe.k = cfg.k;
  pipe.xi = report.xi;
  pipe.empty_sample_policy = cfg.empty_sample_policy;
  pipe.blackbox.algorithm = cfg.algorithm;
  pipe.blackbox.rounds = cfg.rounds;
  pipe.blackbox.meta.alpha = cfg.alpha;
  pipe.blackbox.meta.gamma = cfg.gamma;
  pipe.blackbox.meta.eps = cfg.eps;
  pipe.blackbox.meta.delta = cfg.delta;
  pipe.blackbox.meta.objective = cfg.objective;

  int successes = 0;
  report.trials.reserve(cfg.trials);
  for (int i = 0; i < cfg.trials; ++i) {
    TrialRecord t;
    t.seed = cfg.base_seed + static_cast<std::uint64_t>(i);
    pipe.seed = t.seed;
    t.report = run_pipeline(space, data, pipe);
    t.success = t.report.avg_cost_on_full <= report.guarantee_threshold;
    successes += t.success ? 1 : 0;
    report.trials.push_back(std::move(t));
  }
  report.success_fraction = static_cast<double>(successes) / cfg.trials;
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string render_report(const ExperimentReport& report, ReportFormat format,
                          bool include_timing) {
  if (format == ReportFormat::kJson)
    return experiment_report_json(report, include_timing).dump(2) + "\n";
  std::ostringstream out;
  out << "seed,sample_size,avg_cost_on_sample,avg_cost_on_full,eps_prime,delta_prime,success\n";
  for (const auto& t : report.trials) {
    out << t.seed << ',' << t.report.sample_size << ','
        << format_real12(t.report.avg_cost_on_sample) << ','
        << format_real12(t.report.avg_cost_on_full) << ','
        << format_real12(t.report.amplified.eps_prime) << ','
        << format_real12(t.report.amplified.delta_prime) << ',' << (t.success ? 1 : 0) << '\n';
  }
  return out.str();
}

void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path,
                 bool include_timing) {
  std::ofstream out(path);
  if (!out) throw RuntimeError("IoError: cannot write " + path);
  out << render_report(report, format, include_timing);
  if (!out) throw RuntimeError("IoError: failed writing " + path);
}

}  // namespace subclust
