#pragma once

#include <vector>

#include "plmodel/types.hpp"

namespace plmodel {

// Model-quality bundle. r_square is NaN when the observed vector has zero
// variance (the undefined marker); it is never clamped and may be negative
// out-of-sample.
struct EvalReport {
    double mae = 0.0;
    double mse = 0.0;
    double rmse = 0.0;
    double r_square = 0.0;
    std::size_t n = 0;
    std::vector<double> residuals;  // observed - predicted
    std::vector<double> fitted;     // predicted
};

EvalReport evaluate(const std::vector<double>& observed, const std::vector<double>& predicted);

struct ResidualDiagnostics {
    std::vector<std::pair<double, double>> pairs;  // (fitted, residual), fitted order
    double mean = 0.0;
    double lag1_autocorrelation = 0.0;  // NaN when degenerate
};

// Randomness summary for a residual plot: pairs sorted by fitted value, the
// residual mean, and the Pearson correlation of consecutive residuals in
// fitted order.
ResidualDiagnostics residual_diagnostics(const EvalReport& report);

}  // namespace plmodel
