#include "subclust/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "subclust/errors.hpp"

namespace subclust {

namespace {

constexpr std::int64_t kEnumerationCap = 1000000;

void validate_oracle_inputs(const MetricSpace& space, const Dataset& data, int k) {
  if (data.space != &space)
    throw ValidationError("InvalidDataset: dataset belongs to a different space");
  if (data.size() == 0) throw ValidationError("EmptyDataset: nothing to cluster");
  if (k < 1 || k > space.size())
    throw ValidationError("KTooLarge: k=" + std::to_string(k) + " for |V|=" +
                          std::to_string(space.size()));
}

double subset_avg_cost(const MetricSpace& space, const std::vector<int>& members,
                       const std::vector<int>& centers, bool squared) {
  double total = 0.0;
  for (int x : members) {
    double best = std::numeric_limits<double>::infinity();
    for (int c : centers) {
      double d = space.distance_unchecked(x, c);
      if (squared) d *= d;
      best = std::min(best, d);
    }
    total += best;
  }
  return total / static_cast<double>(members.size());
}

OracleResult brute_force_opt(const MetricSpace& space, const Dataset& data, int k,
                             bool squared) {
  validate_oracle_inputs(space, data, k);
  const int n = space.size();
  const std::int64_t count = binomial_coeff_capped(n, k, kEnumerationCap);
  if (count > kEnumerationCap)
    throw ValidationError("InstanceTooLarge: C(" + std::to_string(n) + "," + std::to_string(k) +
                          ") exceeds the enumeration cap");

  std::vector<int> comb(k);
  for (int i = 0; i < k; ++i) comb[i] = i;
  std::vector<int> best_comb = comb;
  double best_cost = subset_avg_cost(space, data.members, comb, squared);
  std::int64_t examined = 1;
  // Lexicographic successor enumeration; strict improvement keeps the
  // lexicographically smallest optimum.
  while (true) {
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    const double cost = subset_avg_cost(space, data.members, comb, squared);
    ++examined;
    if (cost < best_cost) {
      best_cost = cost;
      best_comb = comb;
    }
  }

  OracleResult out;
  out.optimum_centers = CenterSet::from_indices(space, best_comb, CenterRole::kOptimal);
  out.optimum_avg_cost = best_cost;
  out.enumerated_count = examined;
  return out;
}

double free_avg_cost(const MetricSpace& space, const std::vector<int>& members,
                     const std::vector<std::vector<double>>& centers, bool squared) {
  double total = 0.0;
  for (int x : members) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : centers) {
      double d = space.distance_to_point(x, c);
      if (squared) d *= d;
      best = std::min(best, d);
    }
    total += best;
  }
  return total / static_cast<double>(members.size());
}

OracleResult grid_opt(const MetricSpace& space, const Dataset& data, int k, double resolution,
                      bool squared) {
  validate_oracle_inputs(space, data, k);
  if (space.kind() != SpaceKind::kEuclidean)
    throw ValidationError("InvalidGridSearch: grid search needs a euclidean space");
  const int d = space.dimension();
  if (d > 2 || k > 2)
    throw ValidationError("InstanceTooLarge: grid search supports d <= 2 and k <= 2");
  if (resolution <= 0.0) resolution = space.diameter() / 1000.0;
  if (resolution <= 0.0)
    throw ValidationError("InvalidGridSearch: zero-diameter data needs an explicit resolution");

  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  for (int x : data.members) {
    const double* p = space.point(x);
    for (int j = 0; j < d; ++j) {
      lo[j] = std::min(lo[j], p[j]);
      hi[j] = std::max(hi[j], p[j]);
    }
  }

  std::vector<std::vector<double>> grid;
  if (d == 1) {
    const int steps = static_cast<int>(std::floor((hi[0] - lo[0]) / resolution)) + 1;
    for (int i = 0; i < steps; ++i) grid.push_back({lo[0] + i * resolution});
  } else {
    const int sx = static_cast<int>(std::floor((hi[0] - lo[0]) / resolution)) + 1;
    const int sy = static_cast<int>(std::floor((hi[1] - lo[1]) / resolution)) + 1;
    for (int i = 0; i < sx; ++i)
      for (int j = 0; j < sy; ++j) grid.push_back({lo[0] + i * resolution, lo[1] + j * resolution});
  }
  const std::int64_t g = static_cast<std::int64_t>(grid.size());
  const std::int64_t count = k == 1 ? g : g * (g - 1) / 2;
  if (count > kEnumerationCap)
    throw ValidationError("InstanceTooLarge: grid candidate count " + std::to_string(count) +
                          " exceeds the enumeration cap; coarsen the resolution");

  double best_cost = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> best;
  std::int64_t examined = 0;
  std::vector<std::vector<double>> cs(k);
  if (k == 1) {
    for (const auto& c : grid) {
      cs[0] = c;
      const double cost = free_avg_cost(space, data.members, cs, squared);
      ++examined;
      if (cost < best_cost) {
        best_cost = cost;
        best = cs;
      }
    }
  } else {
    for (size_t a = 0; a < grid.size(); ++a)
      for (size_t b = a + 1; b < grid.size(); ++b) {
        cs[0] = grid[a];
        cs[1] = grid[b];
        const double cost = free_avg_cost(space, data.members, cs, squared);
        ++examined;
        if (cost < best_cost) {
          best_cost = cost;
          best = cs;
        }
      }
  }

  OracleResult out;
  out.optimum_centers = CenterSet::from_points(space, best, CenterRole::kOptimal);
  out.optimum_avg_cost = best_cost;
  out.enumerated_count = examined;
  return out;
}

}  // namespace

std::int64_t binomial_coeff_capped(int n, int k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  double v = 1.0;
  for (int i = 1; i <= k; ++i) {
    v *= static_cast<double>(n - k + i) / i;
    if (v > static_cast<double>(cap) * 2.0) return cap + 1;
  }
  return static_cast<std::int64_t>(std::llround(v));
}

OracleResult brute_force_opt_median(const MetricSpace& space, const Dataset& data, int k) {
  return brute_force_opt(space, data, k, false);
}

OracleResult brute_force_opt_means(const MetricSpace& space, const Dataset& data, int k) {
  return brute_force_opt(space, data, k, true);
}

OracleResult grid_opt_median(const MetricSpace& space, const Dataset& data, int k,
                             double resolution) {
  return grid_opt(space, data, k, resolution, false);
}

OracleResult grid_opt_means(const MetricSpace& space, const Dataset& data, int k,
                            double resolution) {
  return grid_opt(space, data, k, resolution, true);
}

std::vector<double> em_distribution_oracle(const std::vector<double>& utilities, double eps,
                                           double sensitivity) {
  if (utilities.empty()) throw ValidationError("EmptyCandidateSet: no candidates");
  if (!(sensitivity > 0.0)) throw ValidationError("InvalidSensitivity: must be positive");
  if (!(eps > 0.0)) throw ValidationError("InvalidPrivacySpec: eps must be positive");
  const size_t m = utilities.size();
  std::vector<double> out(m, 0.0);
  if (std::isinf(eps)) {
    size_t best = 0;
    for (size_t i = 1; i < m; ++i)
      if (utilities[i] > utilities[best]) best = i;
    out[best] = 1.0;
    return out;
  }
  const long double scale = static_cast<long double>(eps) / (2.0L * sensitivity);
  long double shift = -std::numeric_limits<long double>::infinity();
  for (double u : utilities) shift = std::max(shift, u * scale);
  std::vector<long double> w(m);
  long double total = 0.0L;
  for (size_t i = 0; i < m; ++i) {
    w[i] = expl(static_cast<long double>(utilities[i]) * scale - shift);
    total += w[i];
  }
  for (size_t i = 0; i < m; ++i) out[i] = static_cast<double>(w[i] / total);
  return out;
}

}  // namespace subclust
