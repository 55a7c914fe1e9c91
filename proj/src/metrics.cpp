#include "plmodel/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace plmodel {

EvalReport evaluate(const std::vector<double>& observed, const std::vector<double>& predicted) {
    if (observed.size() != predicted.size())
        throw ValidationError("evaluate: observed/predicted length mismatch");
    if (observed.empty()) throw ValidationError("evaluate: empty input");

    EvalReport rep;
    rep.n = observed.size();
    rep.fitted = predicted;
    rep.residuals.resize(rep.n);

    const double n = static_cast<double>(rep.n);
    double abs_sum = 0.0, sq_sum = 0.0;
    for (std::size_t i = 0; i < rep.n; ++i) {
        const double e = observed[i] - predicted[i];
        rep.residuals[i] = e;
        abs_sum += std::abs(e);
        sq_sum += e * e;
    }
    rep.mae = abs_sum / n;
    rep.mse = sq_sum / n;
    rep.rmse = std::sqrt(rep.mse);

    const double mean = std::accumulate(observed.begin(), observed.end(), 0.0) / n;
    double ss_tot = 0.0;
    for (double y : observed) ss_tot += (y - mean) * (y - mean);
    rep.r_square = ss_tot > 0.0 ? 1.0 - sq_sum / ss_tot
                                : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

ResidualDiagnostics residual_diagnostics(const EvalReport& report) {
    if (report.n < 3) throw ValidationError("residual diagnostics need at least 3 points");

    ResidualDiagnostics diag;
    diag.pairs.reserve(report.n);
    for (std::size_t i = 0; i < report.n; ++i)
        diag.pairs.emplace_back(report.fitted[i], report.residuals[i]);
    std::stable_sort(diag.pairs.begin(), diag.pairs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    const double n = static_cast<double>(report.n);
    double sum = 0.0;
    for (const auto& [f, e] : diag.pairs) sum += e;
    diag.mean = sum / n;

    // Pearson correlation between (e_1..e_{m-1}) and (e_2..e_m)
    const std::size_t m = diag.pairs.size() - 1;
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += diag.pairs[i].second;
        my += diag.pairs[i + 1].second;
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double dx = diag.pairs[i].second - mx;
        const double dy = diag.pairs[i + 1].second - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    diag.lag1_autocorrelation = (sxx > 0.0 && syy > 0.0)
                                    ? sxy / std::sqrt(sxx * syy)
                                    : std::numeric_limits<double>::quiet_NaN();
    return diag;
}

}  // namespace plmodel
