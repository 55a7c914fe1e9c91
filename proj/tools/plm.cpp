// plm: generate, fit, transfer, ablate and plot-data commands for mmWave
// path-loss modeling over measurement CSVs.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "plmodel/dataset_io.hpp"
#include "plmodel/metrics.hpp"
#include "plmodel/pathloss.hpp"
#include "plmodel/regression.hpp"
#include "plmodel/report.hpp"
#include "plmodel/simulator.hpp"
#include "plmodel/transfer.hpp"

namespace {

using namespace plmodel;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;  // bad flags, config errors, degenerate data
constexpr int kExitIo = 3;

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

std::string sidecar_path(const std::string& data_path) { return data_path + ".env"; }

Environment environment_for(const std::string& data_path) {
    const std::string env_path = sidecar_path(data_path);
    if (std::filesystem::exists(env_path)) return load_environment(env_path);
    return Environment{};
}

std::vector<double> observed(const Dataset& ds) {
    std::vector<double> y;
    y.reserve(ds.size());
    for (const auto& s : ds.samples) y.push_back(s.path_loss_db);
    return y;
}

void emit_report(const RunReport& report, const std::string& path) {
    if (path.empty() || path == "-") {
        write_report(std::cout, report);
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open report for writing: " + path);
    write_report(out, report);
    if (!out) throw IoError("report write failed: " + path);
}

FeatureSelection parse_feature_list(const std::string& csv) {
    FeatureSelection features;
    std::stringstream ss(csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (!name.empty()) features.push_back(name);
    }
    return features;
}

int cmd_gen(const std::string& config_path, const std::string& out_path) {
    const SimConfig config = load_sim_config(config_path);
    const Dataset dataset = generate_dataset(config);
    save_dataset(dataset, out_path);
    save_environment(dataset.environment, sidecar_path(out_path));
    std::cerr << "wrote " << dataset.size() << " samples to " << out_path << "\n";
    return kExitOk;
}

struct FitArgs {
    std::string data_path;
    std::string model = "fi";
    std::string features_csv;
    std::string f0 = "auto";
    double split_fraction = 0.7;
    std::uint64_t seed = 0;
    std::string report_path;
};

int cmd_fit(const FitArgs& args) {
    Timer timer;
    const Dataset dataset = load_dataset(args.data_path, environment_for(args.data_path));
    const SplitSpec split{args.split_fraction, args.seed};
    auto [train, test] = split_train_test(dataset, split);

    RunReport report;
    report.command = "fit";
    report.config = {{"data", args.data_path},
                     {"model", args.model},
                     {"split_fraction", format_number(split.train_fraction)},
                     {"seed", std::to_string(split.seed)}};

    const bool is_lr = args.model == "lr" || args.model == "mlr";
    report.config.emplace_back("regressor_transform", is_lr ? "raw" : "log10-distance");

    if (is_lr) {
        FeatureSelection features;
        if (args.model == "lr") {
            features = {"distance"};
        } else {
            features = args.features_csv.empty() ? default_feature_ladder().back()
                                                 : parse_feature_list(args.features_csv);
        }
        std::string joined;
        for (std::size_t i = 0; i < features.size(); ++i)
            joined += (i ? "," : "") + features[i];
        report.config.emplace_back("features", joined);

        RegressionFitPayload payload;
        payload.fit = fit_regression(train, features);
        payload.train_eval = evaluate(observed(train), predict(payload.fit, train));
        payload.test_eval = evaluate(observed(test), predict(payload.fit, test));
        report.payload = std::move(payload);
    } else {
        ModelFitPayload payload;
        auto eval_with = [&](auto&& model_eval) {
            std::vector<double> train_pred, test_pred;
            for (const auto& s : train.samples) train_pred.push_back(model_eval(s));
            for (const auto& s : test.samples) test_pred.push_back(model_eval(s));
            payload.train_eval = evaluate(observed(train), train_pred);
            payload.test_eval = evaluate(observed(test), test_pred);
        };
        if (args.model == "ci") {
            const CiModel model = fit_ci(train);
            eval_with([&](const ChannelSample& s) { return eval_ci(model, s.distance_m); });
            payload.model = model;
        } else if (args.model == "cif") {
            std::optional<double> f0;
            if (args.f0 != "auto") f0 = std::stod(args.f0);
            const CifModel model = fit_cif(train, f0);
            eval_with([&](const ChannelSample& s) {
                return eval_cif(model, s.distance_m, s.frequency_ghz);
            });
            payload.model = model;
        } else if (args.model == "fi") {
            const FiModel model = fit_fi(train);
            eval_with([&](const ChannelSample& s) { return eval_fi(model, s.distance_m); });
            payload.model = model;
        } else if (args.model == "abg") {
            const AbgModel model = fit_abg(train);
            eval_with([&](const ChannelSample& s) {
                return eval_abg(model, s.distance_m, s.frequency_ghz);
            });
            payload.model = model;
        } else {
            throw ConfigError("unknown model '" + args.model + "' (ci|cif|fi|abg|lr|mlr)");
        }
        double dmin = dataset.samples.front().distance_m, dmax = dmin;
        for (const auto& s : dataset.samples) {
            payload.scatter_distance_m.push_back(s.distance_m);
            payload.scatter_path_loss_db.push_back(s.path_loss_db);
            dmin = std::min(dmin, s.distance_m);
            dmax = std::max(dmax, s.distance_m);
        }
        payload.distance_min_m = dmin;
        payload.distance_max_m = dmax;
        report.payload = std::move(payload);
    }

    report.duration_ms = timer.elapsed_ms();
    emit_report(report, args.report_path);
    return kExitOk;
}

struct TransferArgs {
    std::string source_path;
    std::string target_path;
    std::string features_csv = "distance";
    double split_fraction = 0.7;
    std::uint64_t seed = 0;
    std::string report_path;
};

int cmd_transfer(const TransferArgs& args) {
    Timer timer;
    const Dataset source = load_dataset(args.source_path, environment_for(args.source_path));
    const Dataset target = load_dataset(args.target_path, environment_for(args.target_path));
    const SplitSpec split{args.split_fraction, args.seed};

    RunReport report;
    report.command = "transfer";
    report.config = {{"source", args.source_path},
                     {"target", args.target_path},
                     {"features", args.features_csv},
                     {"split_fraction", format_number(split.train_fraction)},
                     {"seed", std::to_string(split.seed)}};
    report.payload = run_transfer(source, target, parse_feature_list(args.features_csv), split);
    report.duration_ms = timer.elapsed_ms();
    emit_report(report, args.report_path);
    return kExitOk;
}

struct AblateArgs {
    std::string data_path;
    std::vector<std::string> rungs;  // each a comma-joined feature list
    double split_fraction = 0.7;
    std::uint64_t seed = 0;
    std::string report_path;
};

int cmd_ablate(const AblateArgs& args) {
    Timer timer;
    const Dataset dataset = load_dataset(args.data_path, environment_for(args.data_path));
    const SplitSpec split{args.split_fraction, args.seed};

    std::vector<FeatureSelection> ladder;
    for (const auto& rung : args.rungs) ladder.push_back(parse_feature_list(rung));
    if (ladder.empty()) ladder = default_feature_ladder();

    RunReport report;
    report.command = "ablate";
    report.config = {{"data", args.data_path},
                     {"split_fraction", format_number(split.train_fraction)},
                     {"seed", std::to_string(split.seed)}};
    report.payload = run_ablation(dataset, ladder, split);
    report.duration_ms = timer.elapsed_ms();
    emit_report(report, args.report_path);
    return kExitOk;
}

void write_pairs(const std::vector<std::pair<double, double>>& pairs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open plot data for writing: " + path);
    for (const auto& [x, y] : pairs) out << format_number(x) << '\t' << format_number(y) << '\n';
    if (!out) throw IoError("plot data write failed: " + path);
}

int cmd_plotdata(const std::string& report_path, const std::string& kind,
                 const std::string& out_path) {
    const auto flat = parse_report(report_path);
    auto get = [&](const std::string& key) -> const std::string& {
        auto it = flat.find(key);
        if (it == flat.end())
            throw ConfigError("report " + report_path + " has no field '" + key + "'");
        return it->second;
    };

    if (kind == "residuals") {
        std::string prefix;
        for (const char* candidate : {"payload.test_eval", "payload.in_domain"}) {
            if (flat.count(std::string(candidate) + ".fitted_db")) {
                prefix = candidate;
                break;
            }
        }
        if (prefix.empty())
            throw ConfigError("report carries no evaluation block with a residual series");
        const auto fitted = parse_number_list(get(prefix + ".fitted_db"));
        const auto residuals = parse_number_list(get(prefix + ".residuals_db"));
        std::vector<std::pair<double, double>> pairs;
        for (std::size_t i = 0; i < fitted.size(); ++i) pairs.emplace_back(fitted[i], residuals[i]);
        std::stable_sort(pairs.begin(), pairs.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        write_pairs(pairs, out_path);
        return kExitOk;
    }

    if (kind == "pl-vs-distance") {
        if (get("payload.kind") != "model_fit")
            throw ConfigError("pl-vs-distance needs a ci/fi model-fit report");
        const std::string& type = get("payload.model.type");

        std::vector<std::pair<double, double>> pairs;
        const auto xs = parse_number_list(get("payload.scatter.distance_m"));
        const auto ys = parse_number_list(get("payload.scatter.path_loss_db"));
        for (std::size_t i = 0; i < xs.size(); ++i) pairs.emplace_back(xs[i], ys[i]);

        double dmin = 1.0, dmax = 40.0;
        if (flat.count("payload.distance_range_m")) {
            const auto range = parse_number_list(get("payload.distance_range_m"));
            dmin = range.at(0);
            dmax = range.at(1);
        }
        constexpr int kLineSamples = 50;
        for (int i = 0; i < kLineSamples; ++i) {
            const double d = dmin + (dmax - dmin) * static_cast<double>(i) / (kLineSamples - 1);
            double pl;
            if (type == "ci") {
                CiModel model;
                model.ple = std::stod(get("payload.model.ple"));
                model.carrier_frequency_ghz = std::stod(get("payload.model.carrier_frequency_ghz"));
                pl = eval_ci(model, d);
            } else if (type == "fi") {
                FiModel model;
                model.alpha_db = std::stod(get("payload.model.alpha_db"));
                model.beta = std::stod(get("payload.model.beta"));
                pl = eval_fi(model, d);
            } else {
                throw ConfigError("pl-vs-distance supports ci and fi model reports, got '" + type + "'");
            }
            pairs.emplace_back(d, pl);
        }
        write_pairs(pairs, out_path);
        return kExitOk;
    }

    throw ConfigError("unknown plot kind '" + kind + "' (residuals|pl-vs-distance)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mmWave path-loss modeling toolkit"};
    app.require_subcommand(1);

    std::string gen_config, gen_out;
    auto* gen = app.add_subcommand("gen", "generate a synthetic measurement dataset");
    gen->add_option("config", gen_config, "simulator config (key=value)")->required();
    gen->add_option("out", gen_out, "output CSV path")->required();

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "fit a path-loss model on the train split");
    fit->add_option("data", fit_args.data_path, "measurement CSV")->required();
    fit->add_option("--model", fit_args.model, "ci|cif|fi|abg|lr|mlr (default fi)");
    fit->add_option("--features", fit_args.features_csv, "comma list of mlr features");
    fit->add_option("--f0", fit_args.f0, "CIF reference frequency in GHz, or 'auto'");
    fit->add_option("--split", fit_args.split_fraction, "train fraction (default 0.7)");
    fit->add_option("--seed", fit_args.seed, "split seed");
    fit->add_option("--report", fit_args.report_path, "report output path ('-' = stdout)");

    TransferArgs transfer_args;
    auto* transfer = app.add_subcommand("transfer", "fit on source, evaluate on target");
    transfer->add_option("source", transfer_args.source_path)->required();
    transfer->add_option("target", transfer_args.target_path)->required();
    transfer->add_option("--features", transfer_args.features_csv, "comma list (default distance)");
    transfer->add_option("--split", transfer_args.split_fraction);
    transfer->add_option("--seed", transfer_args.seed);
    transfer->add_option("--report", transfer_args.report_path);

    AblateArgs ablate_args;
    auto* ablate = app.add_subcommand("ablate", "nested feature-ladder comparison");
    ablate->add_option("data", ablate_args.data_path)->required();
    ablate->add_option("--rung", ablate_args.rungs, "feature list per rung, repeatable")
        ->take_all();
    ablate->add_option("--split", ablate_args.split_fraction);
    ablate->add_option("--seed", ablate_args.seed);
    ablate->add_option("--report", ablate_args.report_path);

    std::string plot_report, plot_kind = "residuals", plot_out;
    auto* plot = app.add_subcommand("plotdata", "emit two-column plot data from a report");
    plot->add_option("report", plot_report)->required();
    plot->add_option("--kind", plot_kind, "residuals|pl-vs-distance");
    plot->add_option("out", plot_out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_config, gen_out);
        if (fit->parsed()) return cmd_fit(fit_args);
        if (transfer->parsed()) return cmd_transfer(transfer_args);
        if (ablate->parsed()) return cmd_ablate(ablate_args);
        if (plot->parsed()) return cmd_plotdata(plot_report, plot_kind, plot_out);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
