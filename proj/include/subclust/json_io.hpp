#ifndef SUBCLUST_JSON_IO_HPP
#define SUBCLUST_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "subclust/experiment.hpp"
#include "subclust/pipeline.hpp"

namespace subclust {

using ordered_json = nlohmann::ordered_json;

// Reports serialize every real with 12 significant digits: the value is
// rounded through "%.12g" before it enters the JSON tree, so rendering and
// re-parsing are stable. Non-finite values become JSON null.
double round_sig12(double v);
std::string format_real12(double v);

ordered_json real12(double v);

ordered_json center_set_json(const CenterSet& centers, const MetricSpace* space);
ordered_json amplified_json(const AmplifiedPrivacy& a);
ordered_json budget_ledger_json(const BudgetLedger& b);
ordered_json pipeline_report_json(const PipelineReport& report, const MetricSpace* space);
ordered_json experiment_report_json(const ExperimentReport& report, bool include_timing);

const char* regime_name(RegimeFlag r);

ExperimentConfig parse_experiment_config(const ordered_json& j);
ExperimentConfig load_experiment_config(const std::string& path);

ExperimentReport parse_experiment_report(const ordered_json& j);

}  // namespace subclust

#endif  // SUBCLUST_JSON_IO_HPP
