#ifndef SUBCLUST_ORACLE_HPP
#define SUBCLUST_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "subclust/metric.hpp"

namespace subclust {

struct OracleResult {
  CenterSet optimum_centers;
  double optimum_avg_cost = 0.0;
  std::int64_t enumerated_count = 0;
};

// Exhaustive minimum over all k-subsets of the ground set; equal-cost
// optima resolve to the lexicographically smallest index tuple. Guarded by
// C(|V|, k) <= 1e6.
OracleResult brute_force_opt_median(const MetricSpace& space, const Dataset& data, int k);
OracleResult brute_force_opt_means(const MetricSpace& space, const Dataset& data, int k);

// Continuous euclidean optimum by grid search over the dataset bounding box
// (d <= 2, k <= 2 only; resolution <= 0 selects diameter/1000 per axis).
OracleResult grid_opt_median(const MetricSpace& space, const Dataset& data, int k,
                             double resolution = 0.0);
OracleResult grid_opt_means(const MetricSpace& space, const Dataset& data, int k,
                            double resolution = 0.0);

// Exact exponential-mechanism distribution, long-double accumulation with a
// max-utility shift; sums to 1 within 1e-14 and is utility-shift invariant.
std::vector<double> em_distribution_oracle(const std::vector<double>& utilities, double eps,
                                           double sensitivity);

std::int64_t binomial_coeff_capped(int n, int k, std::int64_t cap);

}  // namespace subclust

#endif  // SUBCLUST_ORACLE_HPP
