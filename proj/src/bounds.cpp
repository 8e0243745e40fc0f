#include "subclust/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subclust/errors.hpp"

namespace subclust {

namespace {

bool is_means(BoundVariant v) {
  return v == BoundVariant::kMeansMetric || v == BoundVariant::kMeansEuclid;
}

bool is_euclid(BoundVariant v) {
  return v == BoundVariant::kMedianEuclid || v == BoundVariant::kMeansEuclid;
}

void validate_common(const BoundInputs& in) {
  if (!(in.M >= 0.0)) throw ValidationError("InvalidBoundInputs: M must be nonnegative");
  if (!(in.alpha >= 1.0)) throw ValidationError("InvalidBoundInputs: alpha must be >= 1");
  if (!(in.gamma >= 0.0)) throw ValidationError("InvalidBoundInputs: gamma must be >= 0");
  if (!(in.eta > 0.0)) throw ValidationError("InvalidBoundInputs: eta must be positive");
  if (!(in.theta > 0.0 && in.theta < 1.0))
    throw ValidationError("InvalidBoundInputs: theta must lie in (0, 1)");
  if (!(in.c > 0.0)) throw ValidationError("InvalidBoundInputs: c must be positive");
  if (in.k < 1) throw ValidationError("InvalidBoundInputs: k must be >= 1");
}

// Bad-solution count term: k ln n for metric, k d ln(sqrt(d) M / 2 eta) for
// euclidean. The euclidean net degenerates once sqrt(d) M / (2 eta) <= 1.
double log_solution_count(BoundVariant v, const BoundInputs& in) {
  if (!is_euclid(v)) {
    if (in.n < in.k)
      throw ValidationError("InvalidBoundInputs: metric variants need n >= k, got n=" +
                            std::to_string(in.n));
    return in.k * std::log(static_cast<double>(in.n));
  }
  if (in.d < 1) throw ValidationError("InvalidBoundInputs: euclidean variants need d >= 1");
  const double net_arg = std::sqrt(static_cast<double>(in.d)) * in.M / (2.0 * in.eta);
  if (net_arg <= 1.0)
    throw ValidationError("EtaTooLargeForNet: sqrt(d)*M/(2*eta) = " + std::to_string(net_arg) +
                          " <= 1, the net term is nonpositive");
  return in.k * static_cast<double>(in.d) * std::log(net_arg);
}

std::int64_t ceil_clamped(double v) {
  const double c = std::ceil(v);
  if (c < 1.0) return 1;
  return static_cast<std::int64_t>(c);
}

}  // namespace

SampleBound sample_bound(BoundVariant variant, const BoundInputs& in) {
  validate_common(in);
  const double m_eff = is_means(variant) ? in.M * in.M : in.M;
  const double log_theta = -std::log(in.theta);
  const double good = m_eff * in.alpha * (1.0 + in.alpha) * log_theta / in.eta;
  const double bad = (m_eff / in.eta) * (m_eff / in.eta) * (log_theta + log_solution_count(variant, in));
  SampleBound out;
  out.variant = variant;
  out.good_term = in.c * good;
  out.bad_term = in.c * bad;
  out.dominant_term = out.bad_term > out.good_term ? DominantTerm::kBadLemma
                                                   : DominantTerm::kGoodLemma;
  out.size = ceil_clamped(std::max(out.good_term, out.bad_term));
  return out;
}

SampleBound s_median_metric(const BoundInputs& in) { return sample_bound(BoundVariant::kMedianMetric, in); }
SampleBound s_median_euclid(const BoundInputs& in) { return sample_bound(BoundVariant::kMedianEuclid, in); }
SampleBound s_means_metric(const BoundInputs& in) { return sample_bound(BoundVariant::kMeansMetric, in); }
SampleBound s_means_euclid(const BoundInputs& in) { return sample_bound(BoundVariant::kMeansEuclid, in); }

std::int64_t inner_good_bound(BoundVariant variant, double M, double alpha, double beta,
                              double theta, double opt_avg) {
  if (!(beta > 0.0)) throw ValidationError("InvalidBoundInputs: beta must be positive");
  if (!(theta > 0.0 && theta < 1.0))
    throw ValidationError("InvalidBoundInputs: theta must lie in (0, 1)");
  if (!(opt_avg > 0.0))
    throw ValidationError("ZeroOptimumCost: the good-solution bound diverges at opt_avg = 0");
  const double m_eff = is_means(variant) ? M * M : M;
  const double denom_scale = is_means(variant) ? 2.0 : 1.0;
  const double v = 3.0 * m_eff * alpha * (beta + alpha) * (-std::log(theta)) /
                   (denom_scale * beta * beta * opt_avg);
  return ceil_clamped(v);
}

std::int64_t inner_bad_bound(BoundVariant variant, double M, double beta, double theta,
                             double opt_avg, std::int64_t n, int d, int k, double eta) {
  if (!(beta > 0.0)) throw ValidationError("InvalidBoundInputs: beta must be positive");
  if (!(theta > 0.0 && theta < 1.0))
    throw ValidationError("InvalidBoundInputs: theta must lie in (0, 1)");
  if (!(opt_avg > 0.0))
    throw ValidationError("ZeroOptimumCost: the bad-solution bound diverges at opt_avg = 0");
  BoundInputs counts;
  counts.k = k;
  counts.n = n;
  counts.d = d;
  counts.M = M;
  counts.eta = eta;
  const double log_count = log_solution_count(variant, counts);
  const double lt = -std::log(theta);
  double v;
  if (is_means(variant)) {
    v = 2.0 * M * M * M * M * (lt + log_count) / (beta * beta * opt_avg * opt_avg);
  } else {
    v = M * M * (lt + log_count) / (2.0 * beta * beta * opt_avg * opt_avg);
  }
  return ceil_clamped(v);
}

const char* bound_variant_name(BoundVariant v) {
  switch (v) {
    case BoundVariant::kMedianMetric: return "median-metric";
    case BoundVariant::kMedianEuclid: return "median-euclid";
    case BoundVariant::kMeansMetric: return "means-metric";
    case BoundVariant::kMeansEuclid: return "means-euclid";
  }
  return "median-metric";
}

BoundVariant bound_variant_from_name(const std::string& name) {
  if (name == "median-metric") return BoundVariant::kMedianMetric;
  if (name == "median-euclid") return BoundVariant::kMedianEuclid;
  if (name == "means-metric") return BoundVariant::kMeansMetric;
  if (name == "means-euclid") return BoundVariant::kMeansEuclid;
  throw ValidationError("InvalidBoundInputs: unknown variant '" + name + "'");
}

const char* dominant_term_name(DominantTerm t) {
  return t == DominantTerm::kGoodLemma ? "good-lemma" : "bad-lemma";
}

}  // namespace subclust
