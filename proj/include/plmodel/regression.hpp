#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "plmodel/types.hpp"

namespace plmodel {

// Ordered list of ChannelSample numeric fields usable as regressors.
using FeatureSelection = std::vector<std::string>;

// All legal feature names, in canonical order.
const std::vector<std::string>& feature_names();

// Accessor for one named feature; throws ValidationError listing the valid
// names when `name` is unknown.
double feature_value(const ChannelSample& sample, const std::string& name);

void validate_features(const FeatureSelection& features);

struct OlsCore {
    Eigen::VectorXd beta;              // one entry per retained column
    std::vector<int> retained_columns; // indices into the input design matrix
    std::vector<int> dropped_columns;  // constant / collinear columns
    double condition = 0.0;            // sigma_max / sigma_min of retained design
};

struct RegressionFit {
    double intercept = 0.0;
    std::vector<double> coefficients;  // aligned with `features`
    FeatureSelection features;         // retained regressors
    std::vector<std::string> dropped_features;
    double residual_variance = 0.0;    // SSE / (N - 1)
    std::size_t n_train = 0;
    double condition_diagnostic = 0.0;
    bool has_intercept = true;
};

// Design-matrix assembly: [ones column if intercept] ++ features in the given
// order; response is path_loss per sample, dataset row order preserved.
std::pair<Eigen::MatrixXd, Eigen::VectorXd> build_design_matrix(const Dataset& dataset,
                                                                const FeatureSelection& features,
                                                                bool intercept);

// Least-squares solve by orthogonal decomposition. Columns that are constant
// (zero after projection on the columns retained so far, tolerance 1e-10
// relative to the largest column norm) are dropped and reported instead of
// poisoning the solve.
OlsCore ols_fit(const Eigen::MatrixXd& design, const Eigen::VectorXd& response);

// SSE / (N - 1)
double residual_variance(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                         const Eigen::VectorXd& beta);

// Convenience: build + solve + variance over named features with intercept.
RegressionFit fit_regression(const Dataset& dataset, const FeatureSelection& features);

std::vector<double> predict(const RegressionFit& fit, const Dataset& samples);

}  // namespace plmodel
