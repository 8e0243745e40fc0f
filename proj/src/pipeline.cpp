#include "subclust/pipeline.hpp"

#include <string>

#include "subclust/errors.hpp"

namespace subclust {

Dataset poisson_subsample(const Dataset& data, double xi, Rng& rng) {
  if (!(xi > 0.0) || xi > 1.0)
    throw ValidationError("InvalidSamplingProbability: xi must lie in (0, 1], got " +
                          std::to_string(xi));
  std::vector<int> sampled;
  sampled.reserve(static_cast<size_t>(xi * data.size()) + 16);
  for (int x : data.members)
    if (rng.uniform() < xi) sampled.push_back(x);
  Dataset out;
  out.space = data.space;
  out.members = std::move(sampled);
  return out;
}

PipelineReport run_pipeline(const MetricSpace& space, const Dataset& data,
                            const PipelineConfig& cfg) {
  if (data.space != &space)
    throw ValidationError("InvalidDataset: dataset belongs to a different space");
  if (data.size() == 0) throw ValidationError("EmptyDataset: nothing to cluster");

  Rng rng(cfg.seed);
  PipelineReport report;
  report.regime = cfg.xi >= 1.0 ? RegimeFlag::kFullData : RegimeFlag::kSublinear;

  Dataset sample = poisson_subsample(data, cfg.xi, rng);
  if (sample.size() == 0) {
    if (cfg.empty_sample_policy == EmptySamplePolicy::kRetryOnce) {
      report.retried = true;
      sample = poisson_subsample(data, cfg.xi, rng);
    }
    if (sample.size() == 0)
      throw RuntimeError("EmptySample: the subsample came back empty" +
                         std::string(report.retried ? " twice" : ""));
  }

  report.centers = cfg.blackbox.run(space, sample, cfg.k, rng, &report.budget);
  report.sample_size = sample.size();
  const bool squared = cfg.blackbox.meta.objective == Objective::kMeans;
  report.avg_cost_on_sample =
      squared ? avg_cost_means(sample, report.centers) : avg_cost_median(sample, report.centers);
  report.avg_cost_on_full =
      squared ? avg_cost_means(data, report.centers) : avg_cost_median(data, report.centers);
  report.amplified = amplify({cfg.blackbox.meta.eps, cfg.blackbox.meta.delta}, cfg.xi);
  return report;
}

XiChoice choose_xi_from_bound(const SampleBound& bound, std::int64_t data_size) {
  if (data_size < 1) throw ValidationError("EmptyDataset: data_size must be >= 1");
  XiChoice out;
  if (bound.size >= data_size) {
    out.xi = 1.0;
    out.regime = RegimeFlag::kFullData;
  } else {
    out.xi = static_cast<double>(bound.size) / static_cast<double>(data_size);
    out.regime = RegimeFlag::kSublinear;
  }
  return out;
}

}  // namespace subclust
