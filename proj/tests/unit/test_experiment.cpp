#include <doctest.h>

#include <cmath>

#include "subclust/experiment.hpp"
#include "subclust/json_io.hpp"
#include "subclust/oracle.hpp"

using namespace subclust;

TEST_CASE("blob generator normalizes the diameter") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kGaussianBlobs;
  spec.blobs = 3;
  spec.spread = 0.02;
  spec.points = 60;
  spec.d = 2;
  Rng rng(8);
  const SyntheticInstance inst = generate_synthetic(spec, rng);
  CHECK(inst.space.size() == 60);
  CHECK(inst.space.diameter() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero spread collapses each blob to a point") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kGaussianBlobs;
  spec.blobs = 3;
  spec.spread = 0.0;
  spec.points = 12;
  spec.d = 2;
  Rng rng(4);
  const SyntheticInstance inst = generate_synthetic(spec, rng);
  const Dataset d = inst.dataset();
  CHECK(brute_force_opt_median(inst.space, d, 3).optimum_avg_cost ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("uniform metric generator builds a valid metric") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::kUniformMetric;
  spec.n = 24;
  Rng rng(15);
  // construction runs the full triangle validation internally
  const SyntheticInstance inst = generate_synthetic(spec, rng);
  CHECK(inst.space.size() == 24);
  CHECK(inst.space.diameter() > 0.0);
}

TEST_CASE("single oracle trial at xi=1 always succeeds") {
  ExperimentConfig cfg;
  cfg.generator.kind = GeneratorKind::kUniformMetric;
  cfg.generator.n = 10;
  cfg.algorithm = BlackBoxAlgorithm::kExhaustiveOracle;
  cfg.k = 2;
  cfg.trials = 1;
  cfg.xi = 1.0;
  cfg.base_seed = 5;
  const ExperimentReport r = run_experiment(cfg);
  CHECK(r.success_fraction == 1.0);
  CHECK(r.opt_proxy_source == "oracle");
  CHECK(r.regime == RegimeFlag::kFullData);
}

TEST_CASE("experiments are reproducible") {
  ExperimentConfig cfg;
  cfg.generator.kind = GeneratorKind::kGaussianBlobs;
  cfg.generator.blobs = 2;
  cfg.generator.spread = 0.02;
  cfg.generator.points = 40;
  cfg.k = 2;
  cfg.alpha = 5.0;
  cfg.trials = 5;
  cfg.xi = 0.6;
  cfg.base_seed = 11;
  const std::string a = render_report(run_experiment(cfg), ReportFormat::kJson);
  const std::string b = render_report(run_experiment(cfg), ReportFormat::kJson);
  CHECK(a == b);
}

TEST_CASE("threshold audit and trial seeds") {
  ExperimentConfig cfg;
  cfg.generator.kind = GeneratorKind::kUniformMetric;
  cfg.generator.n = 12;
  cfg.k = 2;
  cfg.alpha = 3.0;
  cfg.gamma = 0.4;
  cfg.eta = 0.25;
  cfg.trials = 4;
  cfg.xi = 0.9;
  cfg.base_seed = 100;
  const ExperimentReport r = run_experiment(cfg);
  const double gamma_avg = 0.4 / std::max(1.0, 0.9 * r.data_size);
  CHECK(r.guarantee_threshold ==
        doctest::Approx(3.0 * r.opt_proxy + gamma_avg + 0.25).epsilon(1e-14));
  for (size_t i = 0; i < r.trials.size(); ++i) {
    CHECK(r.trials[i].seed == 100 + i);
    CHECK(r.trials[i].success ==
          (r.trials[i].report.avg_cost_on_full <= r.guarantee_threshold));
  }
}

TEST_CASE("trial sample sizes track xi") {
  ExperimentConfig cfg;
  cfg.generator.kind = GeneratorKind::kGaussianBlobs;
  cfg.generator.blobs = 1;
  cfg.generator.spread = 0.1;
  cfg.generator.points = 400;
  cfg.k = 1;
  cfg.trials = 30;
  cfg.xi = 0.5;
  cfg.base_seed = 7;
  const ExperimentReport r = run_experiment(cfg);
  double mean = 0.0;
  for (const auto& t : r.trials) mean += t.report.sample_size;
  mean /= r.trials.size();
  CHECK(mean == doctest::Approx(200.0).epsilon(0.1));
}

TEST_CASE("report rendering") {
  ExperimentReport empty;
  empty.opt_proxy_source = "oracle";
  const std::string csv = render_report(empty, ReportFormat::kCsv);
  CHECK(csv ==
        "seed,sample_size,avg_cost_on_sample,avg_cost_on_full,eps_prime,delta_prime,success\n");

  ExperimentConfig cfg;
  cfg.generator.kind = GeneratorKind::kUniformMetric;
  cfg.generator.n = 8;
  cfg.k = 2;
  cfg.trials = 3;
  cfg.xi = 0.8;
  cfg.eps = 0.5;
  cfg.delta = 0.25;
  cfg.algorithm = BlackBoxAlgorithm::kDpLocalSearch;
  cfg.rounds = 6;
  cfg.base_seed = 2;
  const ExperimentReport r = run_experiment(cfg);

  SUBCASE("csv has one row per trial") {
    const std::string body = render_report(r, ReportFormat::kCsv);
    CHECK(std::count(body.begin(), body.end(), '\n') == 4);  // header + 3 trials
  }

  SUBCASE("json emit/parse round trip") {
    const std::string text = render_report(r, ReportFormat::kJson);
    const ExperimentReport parsed = parse_experiment_report(ordered_json::parse(text));
    CHECK(parsed.trials.size() == r.trials.size());
    CHECK(parsed.success_fraction == round_sig12(r.success_fraction));
    CHECK(parsed.guarantee_threshold == round_sig12(r.guarantee_threshold));
    for (size_t i = 0; i < r.trials.size(); ++i) {
      CHECK(parsed.trials[i].seed == r.trials[i].seed);
      CHECK(parsed.trials[i].report.avg_cost_on_full ==
            round_sig12(r.trials[i].report.avg_cost_on_full));
    }
    // a second emit of the parsed value is byte-identical
    CHECK(render_report(parsed, ReportFormat::kJson) == text);
  }

  SUBCASE("timing is opt-in") {
    CHECK(render_report(r, ReportFormat::kJson).find("wall_time_ms") == std::string::npos);
    CHECK(render_report(r, ReportFormat::kJson, true).find("wall_time_ms") != std::string::npos);
  }
}
