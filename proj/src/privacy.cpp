#include "subclust/privacy.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "subclust/errors.hpp"

namespace subclust {

namespace {

using boost::multiprecision::cpp_rational;

void validate_spec(const PrivacySpec& spec) {
  if (!(spec.eps > 0.0))
    throw ValidationError("InvalidPrivacySpec: eps must be positive, got " +
                          std::to_string(spec.eps));
  if (!(spec.delta >= 0.0) || spec.delta >= 1.0)
    throw ValidationError("InvalidPrivacySpec: delta must lie in [0, 1), got " +
                          std::to_string(spec.delta));
}

void validate_xi(double xi) {
  if (!(xi > 0.0) || xi > 1.0)
    throw ValidationError("InvalidSamplingProbability: xi must lie in (0, 1], got " +
                          std::to_string(xi));
}

double log_choose(int n, int k) { return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0); }

// Upper tail by direct positive-term summation in log space; no 1-minus
// cancellation, so it stays accurate even when the tail is ~1e-300.
double binomial_tail_logspace(double xi, int g, int threshold) {
  const double log_xi = std::log(xi);
  const double log_1mxi = std::log1p(-xi);
  double tail = 0.0;
  for (int j = g; j > threshold; --j)
    tail += std::exp(log_choose(g, j) + j * log_xi + (g - j) * log_1mxi);
  return std::min(tail, 1.0);
}

// cpp_rational's double constructor represents the float value exactly, so
// the whole sum is exact for the binary value of xi. Callers guarantee
// 0 < xi < 1 here.
double binomial_tail_rational(double xi, int g, int threshold) {
  const cpp_rational x(xi);
  const cpp_rational one_minus = 1 - x;
  cpp_rational power = 1;
  for (int j = 0; j < g; ++j) power *= one_minus;  // x^j (1-x)^(g-j) at j = 0
  cpp_rational coeff = 1;                          // C(g, j)
  cpp_rational lower = power;
  for (int j = 1; j <= threshold; ++j) {
    coeff = coeff * (g - j + 1) / j;
    power = power * x / one_minus;
    lower += coeff * power;
  }
  const cpp_rational tail = 1 - lower;
  return std::max(0.0, std::min(1.0, static_cast<double>(tail)));
}

}  // namespace

AmplifiedPrivacy amplify(const PrivacySpec& spec, double xi) {
  validate_spec(spec);
  validate_xi(xi);
  const double grow = std::log1p(xi * std::expm1(spec.eps));
  const double shrink_denom = xi * std::expm1(-spec.eps) + 1.0;
  assert(shrink_denom > 0.0);  // holds for all xi <= 1, eps > 0
  const double shrink = -std::log1p(xi * std::expm1(-spec.eps));
  AmplifiedPrivacy out;
  out.xi = xi;
  out.eps_prime = std::max(grow, shrink);
  out.delta_prime = std::max(std::exp(-spec.eps) * spec.delta * xi / shrink_denom,
                             spec.delta * xi);
  return out;
}

double group_privacy_delta(double xi, int g, int threshold) {
  validate_xi(xi);
  if (g < 1) throw ValidationError("InvalidGroupSize: g must be >= 1");
  if (threshold < 0 || threshold > g)
    throw ValidationError("ThresholdOutOfRange: T=" + std::to_string(threshold) +
                          " outside [0, " + std::to_string(g) + "]");
  if (threshold == g) return 0.0;  // the full binomial sum equals 1
  if (xi == 1.0) return 1.0;       // all g differing points always enter the sample
  return g <= 64 ? binomial_tail_rational(xi, g, threshold)
                 : binomial_tail_logspace(xi, g, threshold);
}

GroupPrivacyResult group_privacy_guarantee(const AmplifiedPrivacy& amplified, int g,
                                           int threshold) {
  GroupPrivacyResult out;
  out.g = g;
  out.threshold = threshold;
  out.xi = amplified.xi;
  out.delta_group = group_privacy_delta(amplified.xi, g, threshold);
  out.eps_group = threshold * amplified.eps_prime;
  return out;
}

std::pair<double, double> naive_group_privacy(const PrivacySpec& spec, int g) {
  validate_spec(spec);
  if (spec.delta != 0.0)
    throw ValidationError("NonzeroDeltaUnsupported: the (g*eps, 0) baseline is stated for pure DP");
  if (g < 1) throw ValidationError("InvalidGroupSize: g must be >= 1");
  return {g * spec.eps, 0.0};
}

}  // namespace subclust
