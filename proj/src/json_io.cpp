#include "subclust/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>

#include "subclust/errors.hpp"

namespace subclust {

double round_sig12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string format_real12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ordered_json real12(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_sig12(v);
}

const char* regime_name(RegimeFlag r) {
  return r == RegimeFlag::kSublinear ? "sublinear" : "full-data";
}

ordered_json center_set_json(const CenterSet& centers, const MetricSpace* space) {
  ordered_json j;
  if (centers.domain == CenterDomain::kGroundSet) {
    j["domain"] = "ground-set";
    j["indices"] = centers.indices;
    if (space != nullptr && !space->labels().empty()) {
      std::vector<std::string> names;
      names.reserve(centers.indices.size());
      for (int i : centers.indices) names.push_back(space->labels()[i]);
      j["labels"] = names;
    }
    if (space != nullptr && space->kind() == SpaceKind::kEuclidean) {
      ordered_json pts = ordered_json::array();
      for (int i : centers.indices) {
        ordered_json p = ordered_json::array();
        for (int t = 0; t < space->dimension(); ++t) p.push_back(real12(space->point(i)[t]));
        pts.push_back(p);
      }
      j["points"] = pts;
    }
  } else {
    j["domain"] = "free";
    ordered_json pts = ordered_json::array();
    for (const auto& c : centers.points) {
      ordered_json p = ordered_json::array();
      for (double v : c) p.push_back(real12(v));
      pts.push_back(p);
    }
    j["points"] = pts;
  }
  return j;
}

ordered_json amplified_json(const AmplifiedPrivacy& a) {
  return ordered_json{{"eps_prime", real12(a.eps_prime)},
                      {"delta_prime", real12(a.delta_prime)},
                      {"xi", real12(a.xi)}};
}

ordered_json budget_ledger_json(const BudgetLedger& b) {
  return ordered_json{{"rounds", b.rounds},
                      {"per_round_eps", real12(b.per_round_eps)},
                      {"selection_eps", real12(b.selection_eps)},
                      {"total", real12(b.total)}};
}

ordered_json pipeline_report_json(const PipelineReport& report, const MetricSpace* space) {
  ordered_json j;
  j["centers"] = center_set_json(report.centers, space);
  j["sample_size"] = report.sample_size;
  j["avg_cost_on_sample"] = real12(report.avg_cost_on_sample);
  j["avg_cost_on_full"] = real12(report.avg_cost_on_full);
  j["amplified"] = amplified_json(report.amplified);
  j["regime"] = regime_name(report.regime);
  j["retried"] = report.retried;
  j["budget_ledger"] = budget_ledger_json(report.budget);
  return j;
}

ordered_json experiment_report_json(const ExperimentReport& report, bool include_timing) {
  ordered_json j;
  j["data_size"] = report.data_size;
  j["diameter"] = real12(report.diameter);
  j["xi"] = real12(report.xi);
  j["sample_bound_size"] = report.sample_bound_size;
  j["regime"] = regime_name(report.regime);
  j["opt_proxy"] = real12(report.opt_proxy);
  j["opt_proxy_source"] = report.opt_proxy_source;
  j["guarantee_threshold"] = real12(report.guarantee_threshold);
  j["success_fraction"] = real12(report.success_fraction);
  if (include_timing) j["wall_time_ms"] = real12(report.wall_time_ms);
  ordered_json trials = ordered_json::array();
  for (const auto& t : report.trials) {
    ordered_json tj;
    tj["seed"] = t.seed;
    tj["success"] = t.success;
    tj["report"] = pipeline_report_json(t.report, nullptr);
    trials.push_back(tj);
  }
  j["trials"] = trials;
  return j;
}

namespace {

double json_real(const ordered_json& j, const std::string& key, double fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  if (!j[key].is_number())
    throw ValidationError("InvalidConfig: field '" + key + "' must be a number");
  return j[key].get<double>();
}

std::int64_t json_int(const ordered_json& j, const std::string& key, std::int64_t fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  if (!j[key].is_number_integer())
    throw ValidationError("InvalidConfig: field '" + key + "' must be an integer");
  return j[key].get<std::int64_t>();
}

std::string json_string(const ordered_json& j, const std::string& key,
                        const std::string& fallback) {
  if (!j.contains(key) || j[key].is_null()) return fallback;
  if (!j[key].is_string())
    throw ValidationError("InvalidConfig: field '" + key + "' must be a string");
  return j[key].get<std::string>();
}

GeneratorSpec parse_generator(const ordered_json& j) {
  GeneratorSpec g;
  const std::string type = json_string(j, "type", "gaussian-blobs");
  if (type == "gaussian-blobs") {
    g.kind = GeneratorKind::kGaussianBlobs;
    g.blobs = static_cast<int>(json_int(j, "blobs", g.blobs));
    g.spread = json_real(j, "spread", g.spread);
    g.points = static_cast<int>(json_int(j, "points", g.points));
    g.d = static_cast<int>(json_int(j, "d", g.d));
  } else if (type == "uniform-metric") {
    g.kind = GeneratorKind::kUniformMetric;
    g.n = static_cast<int>(json_int(j, "n", g.n));
  } else if (type == "from-file") {
    g.kind = GeneratorKind::kFromFile;
    g.path = json_string(j, "path", "");
    if (g.path.empty()) throw ValidationError("InvalidConfig: from-file generator needs a path");
    const std::string fmt = json_string(j, "format", "auto");
    if (fmt == "auto") g.format = DatasetFormat::kAuto;
    else if (fmt == "points") g.format = DatasetFormat::kPoints;
    else if (fmt == "matrix") g.format = DatasetFormat::kMatrix;
    else throw ValidationError("InvalidConfig: unknown dataset format '" + fmt + "'");
  } else {
    throw ValidationError("InvalidConfig: unknown generator type '" + type + "'");
  }
  return g;
}

}  // namespace

ExperimentConfig parse_experiment_config(const ordered_json& j) {
  ExperimentConfig cfg;
  if (j.contains("generator")) cfg.generator = parse_generator(j["generator"]);
  cfg.objective = objective_from_name(json_string(j, "objective", "median"));
  cfg.algorithm = algorithm_from_name(json_string(j, "algorithm", "local-search"));
  cfg.k = static_cast<int>(json_int(j, "k", cfg.k));
  cfg.alpha = json_real(j, "alpha", cfg.alpha);
  cfg.gamma = json_real(j, "gamma", cfg.gamma);
  cfg.eps = json_real(j, "eps", kNonPrivateEps);
  cfg.delta = json_real(j, "delta", cfg.delta);
  cfg.rounds = static_cast<int>(json_int(j, "rounds", cfg.rounds));
  cfg.trials = static_cast<int>(json_int(j, "trials", cfg.trials));
  cfg.eta = json_real(j, "eta", cfg.eta);
  cfg.theta = json_real(j, "theta", cfg.theta);
  cfg.c = json_real(j, "c", cfg.c);
  if (j.contains("variant") && !j["variant"].is_null())
    cfg.variant = bound_variant_from_name(json_string(j, "variant", ""));
  if (j.contains("xi") && !j["xi"].is_null()) cfg.xi = json_real(j, "xi", 0.0);
  cfg.proxy_runs = static_cast<int>(json_int(j, "proxy_runs", cfg.proxy_runs));
  cfg.base_seed = static_cast<std::uint64_t>(json_int(j, "base_seed", 0));
  const std::string policy = json_string(j, "empty_sample_policy", "error");
  if (policy == "error") cfg.empty_sample_policy = EmptySamplePolicy::kError;
  else if (policy == "retry-once") cfg.empty_sample_policy = EmptySamplePolicy::kRetryOnce;
  else throw ValidationError("InvalidConfig: unknown empty_sample_policy '" + policy + "'");
  if (cfg.trials < 1) throw ValidationError("InvalidConfig: trials must be >= 1");
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RuntimeError("IoError: cannot open " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("InvalidConfig: " + path + " is not valid JSON (" + e.what() + ")");
  }
  return parse_experiment_config(j);
}

ExperimentReport parse_experiment_report(const ordered_json& j) {
  ExperimentReport r;
  r.data_size = static_cast<int>(json_int(j, "data_size", 0));
  r.diameter = json_real(j, "diameter", 0.0);
  r.xi = json_real(j, "xi", 0.0);
  r.sample_bound_size = json_int(j, "sample_bound_size", 0);
  r.regime = json_string(j, "regime", "sublinear") == "full-data" ? RegimeFlag::kFullData
                                                                  : RegimeFlag::kSublinear;
  r.opt_proxy = json_real(j, "opt_proxy", 0.0);
  r.opt_proxy_source = json_string(j, "opt_proxy_source", "");
  r.guarantee_threshold = json_real(j, "guarantee_threshold", 0.0);
  r.success_fraction = json_real(j, "success_fraction", 0.0);
  r.wall_time_ms = json_real(j, "wall_time_ms", 0.0);
  if (j.contains("trials")) {
    for (const auto& tj : j["trials"]) {
      TrialRecord t;
      t.seed = static_cast<std::uint64_t>(json_int(tj, "seed", 0));
      t.success = tj.value("success", false);
      const auto& rj = tj.at("report");
      t.report.sample_size = static_cast<int>(json_int(rj, "sample_size", 0));
      t.report.avg_cost_on_sample = json_real(rj, "avg_cost_on_sample", 0.0);
      t.report.avg_cost_on_full = json_real(rj, "avg_cost_on_full", 0.0);
      t.report.retried = rj.value("retried", false);
      t.report.regime = json_string(rj, "regime", "sublinear") == "full-data"
                            ? RegimeFlag::kFullData
                            : RegimeFlag::kSublinear;
      if (rj.contains("amplified")) {
        const auto& aj = rj["amplified"];
        t.report.amplified.eps_prime =
            json_real(aj, "eps_prime", std::numeric_limits<double>::infinity());
        t.report.amplified.delta_prime = json_real(aj, "delta_prime", 0.0);
        t.report.amplified.xi = json_real(aj, "xi", 0.0);
      }
      if (rj.contains("centers") && rj["centers"].contains("indices")) {
        t.report.centers.domain = CenterDomain::kGroundSet;
        t.report.centers.indices = rj["centers"]["indices"].get<std::vector<int>>();
      }
      if (rj.contains("budget_ledger")) {
        const auto& bj = rj["budget_ledger"];
        t.report.budget.rounds = static_cast<int>(json_int(bj, "rounds", 0));
        t.report.budget.per_round_eps = json_real(bj, "per_round_eps", 0.0);
        t.report.budget.selection_eps = json_real(bj, "selection_eps", 0.0);
        t.report.budget.total = json_real(bj, "total", 0.0);
      }
      r.trials.push_back(std::move(t));
    }
  }
  return r;
}

}  // namespace subclust
