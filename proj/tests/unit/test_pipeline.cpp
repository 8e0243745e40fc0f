#include <doctest.h>

#include <cmath>
#include <vector>

#include "subclust/json_io.hpp"
#include "subclust/oracle.hpp"
#include "subclust/pipeline.hpp"

using namespace subclust;

namespace {

MetricSpace line_space(const std::vector<double>& xs) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return MetricSpace::euclidean(std::move(pts));
}

}  // namespace

TEST_CASE("subsampling at xi=1 keeps everything") {
  const MetricSpace sp = line_space({0, 1, 2, 3, 4});
  const Dataset d(sp, {0, 1, 1, 3});
  Rng rng(5);
  const Dataset s = poisson_subsample(d, 1.0, rng);
  CHECK(s.members == d.members);
}

TEST_CASE("subsample sizes concentrate") {
  const MetricSpace sp = line_space({0.0});
  Dataset d;
  d.space = &sp;
  d.members.assign(10000, 0);
  int within = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    const int size = poisson_subsample(d, 0.1, rng).size();
    if (std::abs(size - 1000) <= 90) ++within;  // 3 sigma, sigma = sqrt(900)
  }
  CHECK(within >= 990);
}

TEST_CASE("per-element inclusion frequency matches xi") {
  const MetricSpace sp = line_space({0, 1, 2, 3, 4, 5, 6, 7});
  const Dataset d(sp);
  std::vector<int> counts(8, 0);
  const int trials = 10000;
  Rng rng(77);
  for (int t = 0; t < trials; ++t)
    for (int m : poisson_subsample(d, 0.3, rng).members) counts[m]++;
  const double expected = trials * 0.3;
  const double var = trials * 0.3 * 0.7;
  double chi2 = 0.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / var;
  CHECK(chi2 < 26.12);  // chi-square 0.999 quantile, 8 dof
}

TEST_CASE("subsampling validation") {
  const MetricSpace sp = line_space({0, 1});
  const Dataset d(sp);
  Rng rng(0);
  CHECK_THROWS_AS(poisson_subsample(d, 0.0, rng), ValidationError);
  CHECK_THROWS_AS(poisson_subsample(d, 1.0001, rng), ValidationError);
}

TEST_CASE("pipeline with the oracle box at xi=1 reproduces the brute force optimum") {
  const MetricSpace sp = line_space({0, 1, 10, 11});
  const Dataset d(sp);
  PipelineConfig cfg;
  cfg.xi = 1.0;
  cfg.k = 2;
  cfg.seed = 3;
  cfg.blackbox.algorithm = BlackBoxAlgorithm::kExhaustiveOracle;
  const PipelineReport r = run_pipeline(sp, d, cfg);
  const OracleResult opt = brute_force_opt_median(sp, d, 2);
  CHECK(r.avg_cost_on_full == opt.optimum_avg_cost);
  CHECK(r.sample_size == 4);
  CHECK(r.regime == RegimeFlag::kFullData);
}

TEST_CASE("pipeline report carries the recomputed amplification") {
  const MetricSpace sp = line_space({0, 0.5, 1, 6, 6.5, 7, 13});
  const Dataset d(sp);
  PipelineConfig cfg;
  cfg.xi = 0.8;
  cfg.k = 2;
  cfg.seed = 12;
  cfg.blackbox.algorithm = BlackBoxAlgorithm::kDpLocalSearch;
  cfg.blackbox.meta.eps = 0.5;
  cfg.blackbox.meta.delta = 0.125;
  cfg.blackbox.rounds = 8;
  const PipelineReport r = run_pipeline(sp, d, cfg);
  const AmplifiedPrivacy again = amplify({0.5, 0.125}, 0.8);
  CHECK(round_sig12(r.amplified.eps_prime) == round_sig12(again.eps_prime));
  CHECK(round_sig12(r.amplified.delta_prime) == round_sig12(again.delta_prime));
  CHECK(r.regime == RegimeFlag::kSublinear);
  CHECK(r.avg_cost_on_full >= 0.0);
  CHECK(r.avg_cost_on_full <= sp.diameter() + 1e-12);
  CHECK(r.budget.total == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pipeline reports are byte-stable under a fixed seed") {
  const MetricSpace sp = line_space({0, 0.5, 1, 6, 6.5, 7});
  const Dataset d(sp);
  PipelineConfig cfg;
  cfg.xi = 0.7;
  cfg.k = 2;
  cfg.seed = 99;
  cfg.blackbox.algorithm = BlackBoxAlgorithm::kLocalSearch;
  const PipelineReport a = run_pipeline(sp, d, cfg);
  const PipelineReport b = run_pipeline(sp, d, cfg);
  CHECK(pipeline_report_json(a, &sp).dump() == pipeline_report_json(b, &sp).dump());
}

TEST_CASE("empty sample policies") {
  const MetricSpace sp = line_space({0, 1});
  const Dataset d(sp);
  PipelineConfig cfg;
  cfg.xi = 1e-12;  // empty with near certainty under any seed
  cfg.k = 1;
  cfg.seed = 0;
  cfg.blackbox.algorithm = BlackBoxAlgorithm::kExhaustiveOracle;

  cfg.empty_sample_policy = EmptySamplePolicy::kError;
  CHECK_THROWS_AS(run_pipeline(sp, d, cfg), RuntimeError);

  cfg.empty_sample_policy = EmptySamplePolicy::kRetryOnce;
  CHECK_THROWS_WITH_AS(run_pipeline(sp, d, cfg), doctest::Contains("twice"), RuntimeError);
}

TEST_CASE("xi choice from a sample bound") {
  SampleBound b;
  b.size = 2372;
  const XiChoice small = choose_xi_from_bound(b, 1000000);
  CHECK(small.xi == doctest::Approx(0.002372).epsilon(1e-15));
  CHECK(small.regime == RegimeFlag::kSublinear);

  b.size = 4000;
  const XiChoice clamped = choose_xi_from_bound(b, 2000);
  CHECK(clamped.xi == 1.0);
  CHECK(clamped.regime == RegimeFlag::kFullData);

  b.size = 1000;
  CHECK(choose_xi_from_bound(b, 2000).xi == 0.5);
}
