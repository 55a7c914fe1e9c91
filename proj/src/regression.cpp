#include "plmodel/regression.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace plmodel {

const std::vector<std::string>& feature_names() {
    static const std::vector<std::string> names = {
        "distance",        "frequency",     "time_delay",  "received_power", "rms_delay_spread",
        "azimuth_aod",     "elevation_aod", "azimuth_aoa", "elevation_aoa"};
    return names;
}

double feature_value(const ChannelSample& s, const std::string& name) {
    if (name == "distance") return s.distance_m;
    if (name == "frequency") return s.frequency_ghz;
    if (name == "time_delay") return s.time_delay_ns;
    if (name == "received_power") return s.received_power_dbm;
    if (name == "rms_delay_spread") return s.rms_delay_spread_ns;
    if (name == "azimuth_aod") return s.azimuth_aod_deg;
    if (name == "elevation_aod") return s.elevation_aod_deg;
    if (name == "azimuth_aoa") return s.azimuth_aoa_deg;
    if (name == "elevation_aoa") return s.elevation_aoa_deg;
    std::string valid;
    for (const auto& n : feature_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw ValidationError("unknown feature '" + name + "' (valid: " + valid + ")");
}

void validate_features(const FeatureSelection& features) {
    if (features.empty()) throw ValidationError("feature selection must be non-empty");
    for (std::size_t i = 0; i < features.size(); ++i) {
        feature_value(ChannelSample{}, features[i]);  // name check
        for (std::size_t j = i + 1; j < features.size(); ++j)
            if (features[i] == features[j])
                throw ValidationError("duplicate feature '" + features[i] + "'");
    }
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> build_design_matrix(const Dataset& dataset,
                                                                const FeatureSelection& features,
                                                                bool intercept) {
    if (dataset.empty()) throw ValidationError("cannot build design matrix from empty dataset");
    validate_features(features);
    const auto n = static_cast<Eigen::Index>(dataset.size());
    const auto p = static_cast<Eigen::Index>(features.size());
    Eigen::MatrixXd design(n, p + (intercept ? 1 : 0));
    Eigen::VectorXd response(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = dataset.samples[static_cast<std::size_t>(i)];
        Eigen::Index col = 0;
        if (intercept) design(i, col++) = 1.0;
        for (const auto& f : features) design(i, col++) = feature_value(s, f);
        response(i) = s.path_loss_db;
    }
    return {std::move(design), std::move(response)};
}

OlsCore ols_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& response) {
    const Eigen::Index n = design.rows();
    const Eigen::Index k = design.cols();
    if (n != response.size()) throw ValidationError("design/response row count mismatch");
    if (k == 0) throw ValidationError("no usable regressors");
    if (n < k)
        throw ValidationError("underdetermined system: " + std::to_string(n) + " rows for " +
                              std::to_string(k) + " regressors");

    // Rank screen in column order (modified Gram-Schmidt): keeps the leading
    // intercept column and drops whichever later column repeats the span.
    const double max_norm = design.colwise().norm().maxCoeff();
    const double tol = 1e-10 * (max_norm > 0.0 ? max_norm : 1.0);

    OlsCore core;
    std::vector<Eigen::VectorXd> basis;
    for (Eigen::Index j = 0; j < k; ++j) {
        Eigen::VectorXd v = design.col(j);
        for (const auto& q : basis) v -= q.dot(v) * q;
        for (const auto& q : basis) v -= q.dot(v) * q;  // reorthogonalize
        if (v.norm() <= tol) {
            core.dropped_columns.push_back(static_cast<int>(j));
        } else {
            basis.push_back(v.normalized());
            core.retained_columns.push_back(static_cast<int>(j));
        }
    }
    if (core.retained_columns.empty()) throw ValidationError("no usable regressors");
    const auto r = static_cast<Eigen::Index>(core.retained_columns.size());
    if (n < r)
        throw ValidationError("underdetermined system: " + std::to_string(n) + " rows for " +
                              std::to_string(r) + " regressors");

    Eigen::MatrixXd reduced(n, r);
    for (Eigen::Index j = 0; j < r; ++j) reduced.col(j) = design.col(core.retained_columns[static_cast<std::size_t>(j)]);

    core.beta = reduced.householderQr().solve(response);

    Eigen::BDCSVD<Eigen::MatrixXd> svd(reduced);
    const auto& sv = svd.singularValues();
    core.condition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                             : std::numeric_limits<double>::infinity();
    return core;
}

double residual_variance(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                         const Eigen::VectorXd& beta) {
    const Eigen::Index n = design.rows();
    if (n < 2) throw ValidationError("residual variance needs at least 2 samples");
    const Eigen::VectorXd residuals = response - design * beta;
    return residuals.squaredNorm() / static_cast<double>(n - 1);
}

RegressionFit fit_regression(const Dataset& dataset, const FeatureSelection& features) {
    auto [design, response] = build_design_matrix(dataset, features, /*intercept=*/true);
    const OlsCore core = ols_fit(design, response);

    RegressionFit fit;
    fit.has_intercept = false;
    Eigen::MatrixXd reduced(design.rows(), static_cast<Eigen::Index>(core.retained_columns.size()));
    for (std::size_t j = 0; j < core.retained_columns.size(); ++j) {
        const int col = core.retained_columns[j];
        reduced.col(static_cast<Eigen::Index>(j)) = design.col(col);
        if (col == 0) {
            fit.has_intercept = true;
            fit.intercept = core.beta(static_cast<Eigen::Index>(j));
        } else {
            fit.features.push_back(features[static_cast<std::size_t>(col - 1)]);
            fit.coefficients.push_back(core.beta(static_cast<Eigen::Index>(j)));
        }
    }
    for (int col : core.dropped_columns)
        fit.dropped_features.push_back(col == 0 ? std::string("(intercept)")
                                                : features[static_cast<std::size_t>(col - 1)]);
    fit.residual_variance = residual_variance(reduced, response, core.beta);
    fit.n_train = dataset.size();
    fit.condition_diagnostic = core.condition;
    return fit;
}

std::vector<double> predict(const RegressionFit& fit, const Dataset& samples) {
    if (!fit.features.empty()) validate_features(fit.features);
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples.samples) {
        double y = fit.has_intercept ? fit.intercept : 0.0;
        for (std::size_t j = 0; j < fit.features.size(); ++j)
            y += fit.coefficients[j] * feature_value(s, fit.features[j]);
        out.push_back(y);
    }
    return out;
}

}  // namespace plmodel
