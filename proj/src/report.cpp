#include "plmodel/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace plmodel {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string join_numbers(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_number(values[i]);
    }
    return out;
}

std::vector<double> parse_number_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (cell.empty()) continue;
        out.push_back(std::stod(cell));
    }
    return out;
}

namespace {

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    void kv(int depth, const std::string& key, const std::string& value) {
        indent(depth);
        out_ << key << ": " << value << '\n';
    }
    void kv(int depth, const std::string& key, double value) {
        kv(depth, key, format_number(value));
    }
    void section(int depth, const std::string& key) {
        indent(depth);
        out_ << key << ":\n";
    }

private:
    void indent(int depth) {
        for (int i = 0; i < depth; ++i) out_ << "  ";
    }
    std::ostream& out_;
};

void write_eval(Writer& w, int depth, const std::string& key, const EvalReport& e) {
    w.section(depth, key);
    w.kv(depth + 1, "n", static_cast<double>(e.n));
    w.kv(depth + 1, "mae_db", e.mae);
    w.kv(depth + 1, "mse_db2", e.mse);
    w.kv(depth + 1, "rmse_db", e.rmse);
    w.kv(depth + 1, "r_square", e.r_square);
    w.kv(depth + 1, "fitted_db", join_numbers(e.fitted));
    w.kv(depth + 1, "residuals_db", join_numbers(e.residuals));
}

void write_regression_fit(Writer& w, int depth, const std::string& key, const RegressionFit& f) {
    w.section(depth, key);
    w.kv(depth + 1, "intercept_db", f.intercept);
    std::string features, coeffs, dropped;
    for (std::size_t i = 0; i < f.features.size(); ++i) {
        if (i) { features += ','; coeffs += ','; }
        features += f.features[i];
        coeffs += format_number(f.coefficients[i]);
    }
    for (std::size_t i = 0; i < f.dropped_features.size(); ++i) {
        if (i) dropped += ',';
        dropped += f.dropped_features[i];
    }
    w.kv(depth + 1, "features", features);
    w.kv(depth + 1, "coefficients", coeffs);
    w.kv(depth + 1, "dropped_features", dropped);
    w.kv(depth + 1, "residual_variance_db2", f.residual_variance);
    w.kv(depth + 1, "n_train", static_cast<double>(f.n_train));
    w.kv(depth + 1, "condition", f.condition_diagnostic);
}

void write_model(Writer& w, int depth, const ModelVariant& model) {
    w.section(depth, "model");
    if (const auto* ci = std::get_if<CiModel>(&model)) {
        w.kv(depth + 1, "type", "ci");
        w.kv(depth + 1, "ple", ci->ple);
        w.kv(depth + 1, "reference_distance_m", ci->reference_distance_m);
        w.kv(depth + 1, "carrier_frequency_ghz", ci->carrier_frequency_ghz);
        w.kv(depth + 1, "shadow_sigma_db", ci->shadow_sigma_db);
    } else if (const auto* cif = std::get_if<CifModel>(&model)) {
        w.kv(depth + 1, "type", "cif");
        w.kv(depth + 1, "ple", cif->ple);
        w.kv(depth + 1, "slope_factor", cif->slope_factor);
        w.kv(depth + 1, "reference_frequency_ghz", cif->reference_frequency_ghz);
        w.kv(depth + 1, "shadow_sigma_db", cif->shadow_sigma_db);
    } else if (const auto* fi = std::get_if<FiModel>(&model)) {
        w.kv(depth + 1, "type", "fi");
        w.kv(depth + 1, "alpha_db", fi->alpha_db);
        w.kv(depth + 1, "beta", fi->beta);
        w.kv(depth + 1, "shadow_sigma_db", fi->shadow_sigma_db);
    } else if (const auto* abg = std::get_if<AbgModel>(&model)) {
        w.kv(depth + 1, "type", "abg");
        w.kv(depth + 1, "alpha", abg->alpha);
        w.kv(depth + 1, "beta_db", abg->beta_db);
        w.kv(depth + 1, "gamma", abg->gamma);
        w.kv(depth + 1, "shadow_sigma_db", abg->shadow_sigma_db);
    }
}

}  // namespace

void write_report(std::ostream& out, const RunReport& report) {
    Writer w(out);
    w.kv(0, "schema", kReportSchema);
    w.kv(0, "command", report.command);
    w.section(0, "config");
    for (const auto& [key, value] : report.config) w.kv(1, key, value);
    w.kv(0, "duration_ms", report.duration_ms);
    w.section(0, "payload");

    if (const auto* p = std::get_if<ModelFitPayload>(&report.payload)) {
        w.kv(1, "kind", "model_fit");
        write_model(w, 1, p->model);
        write_eval(w, 1, "train_eval", p->train_eval);
        write_eval(w, 1, "test_eval", p->test_eval);
        w.section(1, "scatter");
        w.kv(2, "distance_m", join_numbers(p->scatter_distance_m));
        w.kv(2, "path_loss_db", join_numbers(p->scatter_path_loss_db));
        w.kv(1, "distance_range_m",
             format_number(p->distance_min_m) + "," + format_number(p->distance_max_m));
    } else if (const auto* p = std::get_if<RegressionFitPayload>(&report.payload)) {
        w.kv(1, "kind", "regression_fit");
        write_regression_fit(w, 1, "fit", p->fit);
        write_eval(w, 1, "train_eval", p->train_eval);
        write_eval(w, 1, "test_eval", p->test_eval);
    } else if (const auto* p = std::get_if<TransferReport>(&report.payload)) {
        w.kv(1, "kind", "transfer");
        w.kv(1, "source_env", p->source_env);
        w.kv(1, "target_env", p->target_env);
        w.kv(1, "split_fraction", p->split.train_fraction);
        w.kv(1, "split_seed", static_cast<double>(p->split.seed));
        write_regression_fit(w, 1, "fit", p->fit);
        write_eval(w, 1, "in_domain", p->in_domain);
        write_eval(w, 1, "cross_domain", p->cross_domain);
    } else if (const auto* p = std::get_if<AblationReport>(&report.payload)) {
        w.kv(1, "kind", "ablation");
        w.kv(1, "split_fraction", p->split.train_fraction);
        w.kv(1, "split_seed", static_cast<double>(p->split.seed));
        w.kv(1, "rung_count", static_cast<double>(p->rungs.size()));
        for (std::size_t i = 0; i < p->rungs.size(); ++i) {
            const auto& rung = p->rungs[i];
            w.section(1, "rung_" + std::to_string(i + 1));
            std::string features;
            for (std::size_t j = 0; j < rung.features.size(); ++j) {
                if (j) features += ',';
                features += rung.features[j];
            }
            w.kv(2, "requested_features", features);
            write_regression_fit(w, 2, "fit", rung.fit);
            write_eval(w, 2, "train_eval", rung.train_eval);
            write_eval(w, 2, "test_eval", rung.test_eval);
        }
    }
}

std::map<std::string, std::string> parse_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open report: " + path);

    std::map<std::string, std::string> flat;
    std::vector<std::string> stack;  // key path by depth
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::size_t spaces = 0;
        while (spaces < line.size() && line[spaces] == ' ') ++spaces;
        const std::size_t depth = spaces / 2;
        const auto colon = line.find(':', spaces);
        if (colon == std::string::npos) continue;
        const std::string key = line.substr(spaces, colon - spaces);
        std::string value = colon + 1 < line.size() ? line.substr(colon + 2) : "";

        stack.resize(depth);
        stack.push_back(key);
        if (!value.empty()) {
            std::string full;
            for (std::size_t i = 0; i < stack.size(); ++i) {
                if (i) full += '.';
                full += stack[i];
            }
            flat[full] = value;
        }
    }
    if (!flat.count("schema")) throw ValidationError(path + ": not a plm report (missing schema tag)");
    return flat;
}

}  // namespace plmodel
