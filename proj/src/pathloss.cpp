#include "plmodel/pathloss.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <set>

#include "plmodel/regression.hpp"

namespace plmodel {

double fspl(double frequency_ghz, double distance_m) {
    if (!(frequency_ghz > 0.0)) throw ValidationError("fspl: frequency must be > 0");
    if (!(distance_m > 0.0)) throw ValidationError("fspl: distance must be > 0");
    const double f_hz = frequency_ghz * 1e9;
    return 20.0 * std::log10(4.0 * M_PI * distance_m * f_hz / kSpeedOfLight);
}

double eval_ci(const CiModel& model, double distance_m) {
    if (distance_m < model.reference_distance_m)
        throw ValidationError("eval_ci: distance below the 1 m reference");
    return fspl(model.carrier_frequency_ghz, 1.0) +
           10.0 * model.ple * std::log10(distance_m / model.reference_distance_m);
}

double eval_cif(const CifModel& model, double distance_m, double frequency_ghz) {
    if (distance_m < 1.0) throw ValidationError("eval_cif: distance below the 1 m reference");
    if (!(frequency_ghz > 0.0)) throw ValidationError("eval_cif: frequency must be > 0");
    const double f0 = model.reference_frequency_ghz;
    return fspl(frequency_ghz, 1.0) +
           10.0 * model.ple * (1.0 + model.slope_factor * (frequency_ghz - f0) / f0) *
               std::log10(distance_m);
}

double eval_fi(const FiModel& model, double distance_m) {
    if (!(distance_m > 0.0)) throw ValidationError("eval_fi: distance must be > 0");
    return model.alpha_db + 10.0 * model.beta * std::log10(distance_m);
}

double eval_abg(const AbgModel& model, double distance_m, double frequency_ghz) {
    if (!(distance_m > 0.0)) throw ValidationError("eval_abg: distance must be > 0");
    if (!(frequency_ghz > 0.0)) throw ValidationError("eval_abg: frequency must be > 0");
    return 10.0 * model.alpha * std::log10(distance_m) + model.beta_db +
           10.0 * model.gamma * std::log10(frequency_ghz);
}

namespace {

double shadow_sigma_from_residuals(const Eigen::VectorXd& residuals) {
    const Eigen::Index n = residuals.size();
    if (n < 2) return 0.0;
    return std::sqrt(residuals.squaredNorm() / static_cast<double>(n - 1));
}

void require_fittable(const Dataset& dataset) {
    if (dataset.empty()) throw ValidationError("cannot fit an empty dataset");
}

}  // namespace

CiModel fit_ci(const Dataset& dataset) {
    require_fittable(dataset);
    const auto n = static_cast<Eigen::Index>(dataset.size());
    Eigen::VectorXd a(n), b(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = dataset.samples[static_cast<std::size_t>(i)];
        if (s.distance_m < 1.0)
            throw ValidationError("fit_ci: all distances must be >= the 1 m reference");
        a(i) = s.path_loss_db - fspl(s.frequency_ghz, 1.0);
        b(i) = 10.0 * std::log10(s.distance_m);
    }
    const double energy = b.squaredNorm();
    if (energy <= 0.0)
        throw ValidationError("fit_ci: all samples at the reference distance, slope unfittable");

    CiModel model;
    model.ple = a.dot(b) / energy;  // closed-form single-regressor LSE
    double f_sum = 0.0;
    for (const auto& s : dataset.samples) f_sum += s.frequency_ghz;
    model.carrier_frequency_ghz = f_sum / static_cast<double>(dataset.size());
    model.shadow_sigma_db = shadow_sigma_from_residuals(a - model.ple * b);
    return model;
}

FiModel fit_fi(const Dataset& dataset) {
    require_fittable(dataset);
    const auto n = static_cast<Eigen::Index>(dataset.size());
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd response(n);
    std::set<double> distances;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = dataset.samples[static_cast<std::size_t>(i)];
        design(i, 0) = 1.0;
        design(i, 1) = std::log10(s.distance_m);
        response(i) = s.path_loss_db;
        distances.insert(s.distance_m);
    }
    if (distances.size() < 2)
        throw ValidationError("fit_fi: need at least 2 distinct distances");

    const OlsCore core = ols_fit(design, response);
    FiModel model;
    model.alpha_db = core.beta(0);
    model.beta = core.beta(1) / 10.0;
    model.shadow_sigma_db = shadow_sigma_from_residuals(response - design * core.beta);
    return model;
}

CifModel fit_cif(const Dataset& dataset, std::optional<double> f0_ghz) {
    require_fittable(dataset);
    std::set<double> freqs;
    for (const auto& s : dataset.samples) freqs.insert(s.frequency_ghz);
    if (freqs.size() < 2)
        throw ValidationError("fit_cif: b unidentifiable on a single-frequency dataset; fit CI instead");

    double f0;
    if (f0_ghz) {
        f0 = *f0_ghz;
        if (!(f0 > 0.0)) throw ValidationError("fit_cif: f0 must be > 0");
    } else {
        // sample-count weighted average of the dataset frequencies
        double sum = 0.0;
        for (const auto& s : dataset.samples) sum += s.frequency_ghz;
        f0 = sum / static_cast<double>(dataset.size());
    }

    const auto n = static_cast<Eigen::Index>(dataset.size());
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd response(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = dataset.samples[static_cast<std::size_t>(i)];
        if (s.distance_m < 1.0)
            throw ValidationError("fit_cif: all distances must be >= the 1 m reference");
        const double logd = std::log10(s.distance_m);
        design(i, 0) = 10.0 * logd;
        design(i, 1) = 10.0 * ((s.frequency_ghz - f0) / f0) * logd;
        response(i) = s.path_loss_db - fspl(s.frequency_ghz, 1.0);
    }

    const OlsCore core = ols_fit(design, response);
    if (core.retained_columns.size() < 2)
        throw ValidationError("fit_cif: degenerate design (need distance and frequency spread)");

    CifModel model;
    model.ple = core.beta(0);
    model.slope_factor = model.ple != 0.0 ? core.beta(1) / model.ple : 0.0;
    model.reference_frequency_ghz = f0;
    model.shadow_sigma_db = shadow_sigma_from_residuals(response - design * core.beta);
    return model;
}

AbgModel fit_abg(const Dataset& dataset) {
    require_fittable(dataset);
    std::set<double> freqs, dists;
    for (const auto& s : dataset.samples) {
        freqs.insert(s.frequency_ghz);
        dists.insert(s.distance_m);
    }
    if (freqs.size() < 2)
        throw ValidationError("fit_abg: frequency column degenerate on a single-frequency dataset; fit FI instead");
    if (dists.size() < 2) throw ValidationError("fit_abg: need at least 2 distinct distances");

    const auto n = static_cast<Eigen::Index>(dataset.size());
    Eigen::MatrixXd design(n, 3);
    Eigen::VectorXd response(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = dataset.samples[static_cast<std::size_t>(i)];
        if (!(s.distance_m > 0.0)) throw ValidationError("fit_abg: distances must be > 0");
        design(i, 0) = 10.0 * std::log10(s.distance_m);
        design(i, 1) = 1.0;
        design(i, 2) = 10.0 * std::log10(s.frequency_ghz);
        response(i) = s.path_loss_db;
    }

    const OlsCore core = ols_fit(design, response);
    if (core.retained_columns.size() < 3)
        throw ValidationError("fit_abg: degenerate design matrix");

    AbgModel model;
    model.alpha = core.beta(0);
    model.beta_db = core.beta(1);
    model.gamma = core.beta(2);
    model.shadow_sigma_db = shadow_sigma_from_residuals(response - design * core.beta);
    return model;
}

}  // namespace plmodel
