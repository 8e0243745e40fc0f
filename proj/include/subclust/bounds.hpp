#ifndef SUBCLUST_BOUNDS_HPP
#define SUBCLUST_BOUNDS_HPP

#include <cstdint>
#include <string>

namespace subclust {

enum class BoundVariant { kMedianMetric, kMedianEuclid, kMeansMetric, kMeansEuclid };

enum class DominantTerm { kGoodLemma, kBadLemma };

/// Inputs of the combined sample-size bounds. The metric variants use n
/// (ground-set size), the euclidean variants use d (dimension).
struct BoundInputs {
  double M = 1.0;       // diameter
  double alpha = 1.0;   // multiplicative approximation, >= 1
  double gamma = 0.0;   // additive approximation (recorded, not in the formula)
  int k = 1;            // cluster count
  std::int64_t n = 0;   // ground-set size, metric variants
  int d = 0;            // dimension, euclidean variants
  double eta = 0.1;     // extra additive slack, > 0
  double theta = 0.05;  // failure probability, in (0, 1)
  double c = 3.0;       // leading constant
};

struct SampleBound {
  BoundVariant variant;
  std::int64_t size = 1;
  DominantTerm dominant_term = DominantTerm::kGoodLemma;
  double good_term = 0.0;  // c * first max branch
  double bad_term = 0.0;   // c * second max branch
};

// Combined bounds, one per variant:
//   median metric:  s = ceil(c * max{ M a(1+a) ln(1/th)/eta, (M/eta)^2 (ln(1/th) + k ln n) })
//   median euclid:  k ln n  ->  k d ln(sqrt(d) M / (2 eta))
//   means *:        M -> M^2 in both branches
// Results are clamped to >= 1.
SampleBound sample_bound(BoundVariant variant, const BoundInputs& in);

SampleBound s_median_metric(const BoundInputs& in);
SampleBound s_median_euclid(const BoundInputs& in);
SampleBound s_means_metric(const BoundInputs& in);
SampleBound s_means_euclid(const BoundInputs& in);

/// Good-solution sample size at explicit beta, given the optimum average
/// cost: median ceil(3 M a (b+a) ln(1/th) / (b^2 opt)), means variant has
/// M^2 and a 2 b^2 denominator.
std::int64_t inner_good_bound(BoundVariant variant, double M, double alpha, double beta,
                              double theta, double opt_avg);

/// Bad-solution sample size at explicit beta. Metric variants count n^k bad
/// solutions, euclidean variants a (sqrt(d) M / 2 eta)^{kd} net; means
/// variants use the 2 M^4 / b^2 numerator.
std::int64_t inner_bad_bound(BoundVariant variant, double M, double beta, double theta,
                             double opt_avg, std::int64_t n, int d, int k, double eta);

const char* bound_variant_name(BoundVariant v);
BoundVariant bound_variant_from_name(const std::string& name);
const char* dominant_term_name(DominantTerm t);

}  // namespace subclust

#endif  // SUBCLUST_BOUNDS_HPP
