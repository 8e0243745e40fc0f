#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "subclust/oracle.hpp"
#include "subclust/rng.hpp"

using namespace subclust;

namespace {

MetricSpace line_space(const std::vector<double>& xs) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return MetricSpace::euclidean(std::move(pts));
}

}  // namespace

TEST_CASE("brute force on the two-pair line") {
  const MetricSpace sp = line_space({0, 1, 10, 11});
  const Dataset d(sp);
  const OracleResult med = brute_force_opt_median(sp, d, 2);
  CHECK(med.optimum_avg_cost == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(med.optimum_centers.indices == std::vector<int>{0, 2});  // lexicographic tie winner
  CHECK(med.enumerated_count == 6);

  const OracleResult mea = brute_force_opt_means(sp, d, 2);
  CHECK(mea.optimum_avg_cost == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("brute force degenerate cases") {
  const MetricSpace sp = line_space({0, 2, 9});
  const Dataset d(sp);
  CHECK(brute_force_opt_median(sp, d, 3).optimum_avg_cost == 0.0);

  const MetricSpace pair = line_space({0, 2});
  const Dataset dp(pair);
  const OracleResult r = brute_force_opt_median(pair, dp, 1);
  CHECK(r.optimum_avg_cost == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.optimum_centers.indices == std::vector<int>{0});  // symmetric tie, lowest index
}

TEST_CASE("brute force rejects runaway enumeration") {
  std::vector<double> xs(50);
  std::iota(xs.begin(), xs.end(), 0.0);
  const MetricSpace sp = line_space(xs);
  const Dataset d(sp);
  CHECK_THROWS_AS(brute_force_opt_median(sp, d, 10), ValidationError);
}

TEST_CASE("brute force result is a global minimum witness") {
  Rng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 9; ++i) pts.push_back({rng.uniform(), rng.uniform()});
    const MetricSpace sp = MetricSpace::euclidean(std::move(pts));
    const Dataset d(sp);
    const OracleResult opt = brute_force_opt_median(sp, d, 2);
    for (int probe = 0; probe < 100; ++probe) {
      const CenterSet c = CenterSet::from_indices(sp, rng.sample_without_replacement(9, 2));
      CHECK(opt.optimum_avg_cost <= avg_cost_median(d, c) + 1e-12);
    }
  }
}

TEST_CASE("grid oracle finds the continuous k-means center") {
  const MetricSpace sp = line_space({0, 1});
  const Dataset d(sp);
  const OracleResult r = grid_opt_means(sp, d, 1, 1e-3);
  CHECK(r.optimum_centers.points.size() == 1);
  CHECK(r.optimum_centers.points[0][0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.optimum_avg_cost == doctest::Approx(0.25).epsilon(1e-6));
}

TEST_CASE("grid oracle tracks the analytic centroid") {
  Rng rng(57);
  std::vector<double> xs;
  for (int i = 0; i < 12; ++i) xs.push_back(rng.uniform());
  const MetricSpace sp = line_space(xs);
  const Dataset d(sp);
  const double centroid = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double res = sp.diameter() / 1000.0;
  const OracleResult r = grid_opt_means(sp, d, 1);
  CHECK(std::abs(r.optimum_centers.points[0][0] - centroid) <= res + 1e-12);
}

TEST_CASE("grid oracle guards") {
  const MetricSpace sp = MetricSpace::euclidean({{0, 0, 0}, {1, 1, 1}});
  const Dataset d(sp);
  CHECK_THROWS_AS(grid_opt_means(sp, d, 1), ValidationError);  // d = 3

  const MetricSpace line = line_space({0, 1});
  const Dataset dl(line);
  CHECK_THROWS_AS(grid_opt_means(line, dl, 2, 1e-5), ValidationError);  // too many pairs
}

TEST_CASE("em distribution oracle") {
  SUBCASE("uniform on equal utilities") {
    const auto p = em_distribution_oracle({1.0, 1.0, 1.0, 1.0}, 2.0, 1.0);
    for (double v : p) CHECK(v == doctest::Approx(0.25).epsilon(1e-14));
  }

  SUBCASE("closed-form two-candidate value") {
    const auto p = em_distribution_oracle({0.0, -1.0}, 2.0, 1.0);
    CHECK(p[0] == doctest::Approx(0.731058578630005).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(0.268941421369995).epsilon(1e-12));
  }

  SUBCASE("sums to one and shrugs off utility shifts") {
    const std::vector<double> u = {0.3, -2.0, 1.7, 0.0, 5.5};
    const auto p = em_distribution_oracle(u, 0.7, 2.0);
    double total = 0.0;
    for (double v : p) total += v;
    CHECK(std::abs(total - 1.0) < 1e-14);
    std::vector<double> shifted = u;
    for (double& v : shifted) v += 123.456;
    const auto q = em_distribution_oracle(shifted, 0.7, 2.0);
    for (size_t i = 0; i < u.size(); ++i) CHECK(p[i] == doctest::Approx(q[i]).epsilon(1e-13));
  }

  SUBCASE("empty candidate set is rejected") {
    CHECK_THROWS_AS(em_distribution_oracle({}, 1.0, 1.0), ValidationError);
  }
}
