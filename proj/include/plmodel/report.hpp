#pragma once

#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "plmodel/metrics.hpp"
#include "plmodel/pathloss.hpp"
#include "plmodel/regression.hpp"
#include "plmodel/transfer.hpp"

namespace plmodel {

// Versioned, human-readable run report: nested key/value with two-space
// indentation, numeric fields at 12 significant digits, vectors as
// comma-joined scalars. The schema tag enables golden-file tests.
inline constexpr const char* kReportSchema = "plm-report/1";

std::string format_number(double v);
std::string join_numbers(const std::vector<double>& values);

using ModelVariant = std::variant<CiModel, CifModel, FiModel, AbgModel>;

struct ModelFitPayload {
    ModelVariant model;
    EvalReport train_eval;
    EvalReport test_eval;
    // scatter for PL-vs-distance plots
    std::vector<double> scatter_distance_m;
    std::vector<double> scatter_path_loss_db;
    double distance_min_m = 0.0;
    double distance_max_m = 0.0;
};

struct RegressionFitPayload {
    RegressionFit fit;
    EvalReport train_eval;
    EvalReport test_eval;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;  // flag echo
    double duration_ms = 0.0;
    std::variant<ModelFitPayload, RegressionFitPayload, TransferReport, AblationReport> payload;
};

void write_report(std::ostream& out, const RunReport& report);

// Flat view of a report file: nested keys joined with '.', e.g.
// "payload.test_eval.rmse". Used by plot-data extraction and tests.
std::map<std::string, std::string> parse_report(const std::string& path);

std::vector<double> parse_number_list(const std::string& csv);

}  // namespace plmodel
