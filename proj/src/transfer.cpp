#include "plmodel/transfer.hpp"

#include <algorithm>

#include "plmodel/dataset_io.hpp"

namespace plmodel {

namespace {

std::vector<double> observed_path_loss(const Dataset& ds) {
    std::vector<double> y;
    y.reserve(ds.size());
    for (const auto& s : ds.samples) y.push_back(s.path_loss_db);
    return y;
}

}  // namespace

TransferReport run_transfer(const Dataset& source, const Dataset& target,
                            const FeatureSelection& features, const SplitSpec& split) {
    validate_features(features);
    if (target.empty()) throw ValidationError("run_transfer: empty target dataset");
    // feature availability in the target is checked before any fitting
    for (const auto& f : features) feature_value(target.samples.front(), f);

    auto [train, test] = split_train_test(source, split);

    TransferReport report;
    report.source_env = source.environment.label();
    report.target_env = target.environment.label();
    report.split = split;
    report.fit = fit_regression(train, features);
    report.in_domain = evaluate(observed_path_loss(test), predict(report.fit, test));
    report.cross_domain = evaluate(observed_path_loss(target), predict(report.fit, target));
    return report;
}

std::vector<FeatureSelection> default_feature_ladder() {
    return {
        {"distance"},
        {"distance", "time_delay", "received_power"},
        {"distance", "time_delay", "received_power", "rms_delay_spread", "elevation_aod",
         "azimuth_aod", "azimuth_aoa", "elevation_aoa"},
    };
}

AblationReport run_ablation(const Dataset& dataset, const std::vector<FeatureSelection>& ladder,
                            const SplitSpec& split) {
    if (ladder.empty()) throw ValidationError("run_ablation: empty feature ladder");
    for (std::size_t i = 1; i < ladder.size(); ++i) {
        for (const auto& f : ladder[i - 1]) {
            if (std::find(ladder[i].begin(), ladder[i].end(), f) == ladder[i].end())
                throw ValidationError("run_ablation: ladder not nested ('" + f +
                                      "' missing from rung " + std::to_string(i + 1) + ")");
        }
    }

    auto [train, test] = split_train_test(dataset, split);
    const auto y_train = observed_path_loss(train);
    const auto y_test = observed_path_loss(test);

    AblationReport report;
    report.split = split;
    for (const auto& features : ladder) {
        AblationRung rung;
        rung.features = features;
        rung.fit = fit_regression(train, features);
        rung.train_eval = evaluate(y_train, predict(rung.fit, train));
        rung.test_eval = evaluate(y_test, predict(rung.fit, test));
        report.rungs.push_back(std::move(rung));
    }
    return report;
}

}  // namespace plmodel
