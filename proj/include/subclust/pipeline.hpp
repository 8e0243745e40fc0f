#ifndef SUBCLUST_PIPELINE_HPP
#define SUBCLUST_PIPELINE_HPP

#include <cstdint>

#include "subclust/blackbox.hpp"
#include "subclust/bounds.hpp"
#include "subclust/metric.hpp"
#include "subclust/privacy.hpp"
#include "subclust/rng.hpp"

namespace subclust {

enum class EmptySamplePolicy { kError, kRetryOnce };

enum class RegimeFlag { kSublinear, kFullData };

struct PipelineConfig {
  double xi = 0.1;  // sampling probability in (0, 1]; 1 is the no-sampling path
  int k = 1;
  ClusteringBlackBox blackbox;
  std::uint64_t seed = 0;
  EmptySamplePolicy empty_sample_policy = EmptySamplePolicy::kError;
};

struct PipelineReport {
  CenterSet centers;
  int sample_size = 0;
  double avg_cost_on_sample = 0.0;
  double avg_cost_on_full = 0.0;
  AmplifiedPrivacy amplified;
  RegimeFlag regime = RegimeFlag::kSublinear;
  bool retried = false;
  BudgetLedger budget;
};

// Bernoulli(xi) per member, order preserving; an empty result is allowed
// and handled by the pipeline policy.
Dataset poisson_subsample(const Dataset& data, double xi, Rng& rng);

// Subsample, run the black box on the sample, evaluate on both sample and
// full data, and attach amplify(blackbox privacy, xi).
PipelineReport run_pipeline(const MetricSpace& space, const Dataset& data,
                            const PipelineConfig& cfg);

struct XiChoice {
  double xi = 0.0;
  RegimeFlag regime = RegimeFlag::kSublinear;
};

// Bridges a target sample size to the Bernoulli sampling rate: min(1, s/|D|),
// flagging the full-data regime when the ratio clamps.
XiChoice choose_xi_from_bound(const SampleBound& bound, std::int64_t data_size);

}  // namespace subclust

#endif  // SUBCLUST_PIPELINE_HPP
