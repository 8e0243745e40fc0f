// subclust: sublinear differentially-private k-median / k-means clustering
// by subsampling. Subcommands cover the privacy calculators, sample-size
// calculators, clustering black boxes, the sampling pipeline and the
// multi-trial experiment harness. All randomness comes from explicit
// --seed flags; rerunning a command with identical flags reproduces its
// output byte for byte.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "subclust/dataset_io.hpp"
#include "subclust/errors.hpp"
#include "subclust/experiment.hpp"
#include "subclust/json_io.hpp"
#include "subclust/oracle.hpp"

namespace {

using namespace subclust;

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

struct DatasetArgs {
  std::string path;
  std::string format = "auto";
  bool no_triangle_check = false;

  MetricSpace load() const {
    DatasetFormat f = DatasetFormat::kAuto;
    if (format == "points") f = DatasetFormat::kPoints;
    else if (format == "matrix") f = DatasetFormat::kMatrix;
    else if (format != "auto")
      throw ValidationError("InvalidConfig: unknown --format '" + format + "'");
    return load_dataset_file(path, f,
                             no_triangle_check ? TriangleCheck::kOff : TriangleCheck::kAuto);
  }
};

void add_dataset_flags(CLI::App* cmd, DatasetArgs* args) {
  cmd->add_option("--data", args->path, "dataset CSV (points, or labeled distance matrix)")
      ->required();
  cmd->add_option("--format", args->format, "points|matrix|auto (default: sniff the first row)");
  cmd->add_flag("--no-triangle-check", args->no_triangle_check,
                "skip the O(n^3) triangle validation on matrix load");
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"sublinear differentially-private clustering by subsampling"};
  app.require_subcommand(1);

  // amplify
  double a_eps = 1.0, a_delta = 0.0, a_xi = 0.1;
  auto* amp = app.add_subcommand("amplify", "privacy amplification by subsampling");
  amp->add_option("--eps", a_eps, "eps of the black box")->required();
  amp->add_option("--delta", a_delta, "delta of the black box (default 0)");
  amp->add_option("--xi", a_xi, "sampling probability in (0, 1]")->required();
  amp->callback([&] {
    const AmplifiedPrivacy out = amplify({a_eps, a_delta}, a_xi);
    print_json({{"eps_prime", real12(out.eps_prime)}, {"delta_prime", real12(out.delta_prime)}});
  });

  // group-privacy
  double g_eps = 1.0, g_xi = 0.1;
  int g_g = 1, g_t = 0;
  auto* grp = app.add_subcommand("group-privacy", "group privacy of the sampling wrapper");
  grp->add_option("--eps", g_eps, "eps of the (pure-DP) black box")->required();
  grp->add_option("--xi", g_xi, "sampling probability in (0, 1]")->required();
  grp->add_option("--g", g_g, "group size")->required();
  grp->add_option("--T", g_t, "threshold in [0, g]")->required();
  grp->callback([&] {
    const AmplifiedPrivacy amp_out = amplify({g_eps, 0.0}, g_xi);
    const GroupPrivacyResult out = group_privacy_guarantee(amp_out, g_g, g_t);
    const auto naive = naive_group_privacy({g_eps, 0.0}, g_g);
    print_json({{"eps_group", real12(out.eps_group)},
                {"delta_group", real12(out.delta_group)},
                {"naive_eps", real12(naive.first)}});
  });

  // sample-size
  std::string s_variant;
  BoundInputs s_in;
  auto* ssz = app.add_subcommand("sample-size", "sample-complexity calculators");
  ssz->add_option("--variant", s_variant, "median-metric|median-euclid|means-metric|means-euclid")
      ->required();
  ssz->add_option("--M", s_in.M, "diameter");
  ssz->add_option("--alpha", s_in.alpha, "multiplicative approximation (>= 1)");
  ssz->add_option("--gamma", s_in.gamma, "additive approximation (recorded only)");
  ssz->add_option("--k", s_in.k, "cluster count");
  ssz->add_option("--n", s_in.n, "ground-set size (metric variants)");
  ssz->add_option("--d", s_in.d, "dimension (euclidean variants)");
  ssz->add_option("--eta", s_in.eta, "extra additive slack");
  ssz->add_option("--theta", s_in.theta, "failure probability");
  ssz->add_option("--c", s_in.c, "leading constant (default 3)");
  ssz->callback([&] {
    const SampleBound out = sample_bound(bound_variant_from_name(s_variant), s_in);
    ordered_json inputs{{"M", real12(s_in.M)},       {"alpha", real12(s_in.alpha)},
                        {"gamma", real12(s_in.gamma)}, {"k", s_in.k},
                        {"n", s_in.n},               {"d", s_in.d},
                        {"eta", real12(s_in.eta)},   {"theta", real12(s_in.theta)},
                        {"c", real12(s_in.c)}};
    print_json({{"s", out.size},
                {"dominant_term", dominant_term_name(out.dominant_term)},
                {"inputs", inputs}});
  });

  // cluster
  DatasetArgs c_data;
  std::string c_objective = "median", c_algorithm = "local-search";
  int c_k = 1, c_rounds = 0;
  double c_eps = 0.0;
  std::uint64_t c_seed = 0;
  auto* clu = app.add_subcommand("cluster", "run one clustering black box on a dataset");
  add_dataset_flags(clu, &c_data);
  clu->add_option("--objective", c_objective, "median|means");
  clu->add_option("--algorithm", c_algorithm, "dp-local-search|local-search|oracle");
  clu->add_option("--k", c_k, "number of centers")->required();
  auto* c_eps_opt = clu->add_option("--eps", c_eps, "privacy budget (omit for non-private)");
  clu->add_option("--rounds", c_rounds, "swap rounds (0 = default schedule)");
  clu->add_option("--seed", c_seed, "rng seed");
  clu->callback([&] {
    const MetricSpace space = c_data.load();
    const Dataset data(space);
    ClusteringBlackBox box;
    box.algorithm = algorithm_from_name(c_algorithm);
    box.rounds = c_rounds;
    box.meta.objective = objective_from_name(c_objective);
    box.meta.eps = c_eps_opt->count() > 0 ? c_eps : kNonPrivateEps;
    Rng rng(c_seed);
    BudgetLedger ledger;
    const CenterSet centers = box.run(space, data, c_k, rng, &ledger);
    const bool squared = box.meta.objective == Objective::kMeans;
    const double avg = squared ? avg_cost_means(data, centers) : avg_cost_median(data, centers);
    print_json({{"centers", center_set_json(centers, &space)},
                {"avg_cost", real12(avg)},
                {"total_cost", real12(avg * data.size())},
                {"budget_ledger", budget_ledger_json(ledger)}});
  });

  // oracle
  DatasetArgs o_data;
  std::string o_objective = "median";
  int o_k = 1;
  bool o_grid = false;
  double o_resolution = 0.0;
  auto* orc = app.add_subcommand("oracle", "brute-force optimum for small instances");
  add_dataset_flags(orc, &o_data);
  orc->add_option("--objective", o_objective, "median|means");
  orc->add_option("--k", o_k, "number of centers")->required();
  orc->add_flag("--grid", o_grid, "continuous euclidean grid search (d <= 2, k <= 2)");
  orc->add_option("--resolution", o_resolution, "grid step (default diameter/1000)");
  orc->callback([&] {
    const MetricSpace space = o_data.load();
    const Dataset data(space);
    const bool squared = objective_from_name(o_objective) == Objective::kMeans;
    OracleResult out;
    if (o_grid)
      out = squared ? grid_opt_means(space, data, o_k, o_resolution)
                    : grid_opt_median(space, data, o_k, o_resolution);
    else
      out = squared ? brute_force_opt_means(space, data, o_k)
                    : brute_force_opt_median(space, data, o_k);
    print_json({{"optimum_centers", center_set_json(out.optimum_centers, &space)},
                {"optimum_avg_cost", real12(out.optimum_avg_cost)},
                {"enumerated_count", out.enumerated_count}});
  });

  // pipeline
  DatasetArgs p_data;
  std::string p_objective = "median", p_algorithm = "local-search", p_policy = "error";
  std::string p_variant;
  int p_k = 1, p_rounds = 0;
  double p_xi = 0.0, p_eps = 0.0, p_delta = 0.0;
  double p_alpha = 1.0, p_gamma = 0.0, p_eta = 0.1, p_theta = 0.1, p_c = 3.0;
  bool p_auto_xi = false;
  std::uint64_t p_seed = 0;
  auto* pip = app.add_subcommand("pipeline", "subsample, cluster the sample, report");
  add_dataset_flags(pip, &p_data);
  pip->add_option("--objective", p_objective, "median|means");
  pip->add_option("--algorithm", p_algorithm, "dp-local-search|local-search|oracle");
  pip->add_option("--k", p_k, "number of centers")->required();
  auto* p_xi_opt = pip->add_option("--xi", p_xi, "sampling probability in (0, 1]");
  pip->add_flag("--auto-xi", p_auto_xi, "choose xi from the sample-size calculator");
  pip->add_option("--variant", p_variant, "bound variant for --auto-xi (default <objective>-metric)");
  pip->add_option("--alpha", p_alpha, "black-box alpha (for --auto-xi and the report)");
  pip->add_option("--gamma", p_gamma, "black-box gamma, total-cost units");
  pip->add_option("--eta", p_eta, "extra additive slack for --auto-xi");
  pip->add_option("--theta", p_theta, "failure probability for --auto-xi");
  pip->add_option("--c", p_c, "leading constant for --auto-xi");
  auto* p_eps_opt = pip->add_option("--eps", p_eps, "privacy budget (omit for non-private)");
  pip->add_option("--delta", p_delta, "privacy delta");
  pip->add_option("--rounds", p_rounds, "swap rounds (0 = default schedule)");
  pip->add_option("--seed", p_seed, "rng seed");
  pip->add_option("--empty-sample", p_policy, "error|retry-once");
  pip->callback([&] {
    const MetricSpace space = p_data.load();
    const Dataset data(space);
    PipelineConfig cfg;
    cfg.k = p_k;
    cfg.seed = p_seed;
    if (p_policy == "error") cfg.empty_sample_policy = EmptySamplePolicy::kError;
    else if (p_policy == "retry-once") cfg.empty_sample_policy = EmptySamplePolicy::kRetryOnce;
    else throw ValidationError("InvalidConfig: unknown --empty-sample '" + p_policy + "'");
    cfg.blackbox.algorithm = algorithm_from_name(p_algorithm);
    cfg.blackbox.rounds = p_rounds;
    cfg.blackbox.meta.objective = objective_from_name(p_objective);
    cfg.blackbox.meta.eps = p_eps_opt->count() > 0 ? p_eps : kNonPrivateEps;
    cfg.blackbox.meta.delta = p_delta;
    cfg.blackbox.meta.alpha = p_alpha;
    cfg.blackbox.meta.gamma = p_gamma;
    if (p_auto_xi == (p_xi_opt->count() > 0))
      throw ValidationError("InvalidConfig: give exactly one of --xi and --auto-xi");
    ordered_json choice_json;
    if (p_auto_xi) {
      BoundInputs in;
      in.M = space.diameter();
      in.alpha = p_alpha;
      in.gamma = p_gamma;
      in.k = p_k;
      in.n = space.size();
      in.d = space.kind() == SpaceKind::kEuclidean ? space.dimension() : 0;
      in.eta = p_eta;
      in.theta = p_theta;
      in.c = p_c;
      const BoundVariant variant =
          p_variant.empty()
              ? (cfg.blackbox.meta.objective == Objective::kMedian ? BoundVariant::kMedianMetric
                                                                   : BoundVariant::kMeansMetric)
              : bound_variant_from_name(p_variant);
      const SampleBound bound = sample_bound(variant, in);
      const XiChoice choice = choose_xi_from_bound(bound, data.size());
      cfg.xi = choice.xi;
      choice_json = ordered_json{{"s", bound.size},
                                 {"dominant_term", dominant_term_name(bound.dominant_term)}};
    } else {
      cfg.xi = p_xi;
    }
    const PipelineReport report = run_pipeline(space, data, cfg);
    ordered_json j = pipeline_report_json(report, &space);
    if (!choice_json.is_null()) j["sample_bound"] = choice_json;
    print_json(j);
  });

  // experiment
  std::string e_config, e_out, e_format = "json";
  bool e_timing = false;
  auto* exp = app.add_subcommand("experiment", "multi-trial pipeline experiment");
  exp->add_option("--config", e_config, "experiment config JSON file")->required();
  exp->add_option("--out", e_out, "write the report to a file instead of stdout");
  exp->add_option("--report-format", e_format, "json|csv");
  exp->add_flag("--timing", e_timing, "include wall_time_ms in the report");
  exp->callback([&] {
    const ExperimentConfig cfg = load_experiment_config(e_config);
    const ExperimentReport report = run_experiment(cfg);
    ReportFormat fmt;
    if (e_format == "json") fmt = ReportFormat::kJson;
    else if (e_format == "csv") fmt = ReportFormat::kCsv;
    else throw ValidationError("InvalidConfig: unknown --report-format '" + e_format + "'");
    if (e_out.empty())
      std::cout << render_report(report, fmt, e_timing);
    else
      emit_report(report, fmt, e_out, e_timing);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const RuntimeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
