#pragma once

#include <optional>

#include "plmodel/types.hpp"

namespace plmodel {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Close-in reference distance model. reference_distance is fixed at 1 m.
struct CiModel {
    double ple = 2.0;                  // n
    double reference_distance_m = 1.0; // d0
    double shadow_sigma_db = 0.0;
    double carrier_frequency_ghz = 28.0;
};

// Close-in with frequency-dependent exponent.
struct CifModel {
    double ple = 2.0;                  // n
    double slope_factor = 0.0;         // b
    double reference_frequency_ghz = 28.0;  // f0
    double shadow_sigma_db = 0.0;
};

// Floating-intercept / alpha-beta model.
struct FiModel {
    double alpha_db = 0.0;             // intercept
    double beta = 2.0;                 // slope on 10 log10(d)
    double shadow_sigma_db = 0.0;
};

// Alpha-beta-gamma model.
struct AbgModel {
    double alpha = 2.0;                // distance slope
    double beta_db = 0.0;              // floating offset
    double gamma = 2.0;                // frequency slope
    double shadow_sigma_db = 0.0;
};

// Free-space path loss: 20 log10(4 pi d f / c).
double fspl(double frequency_ghz, double distance_m);

// Median (deterministic) path loss; the shadowing term is added separately by
// the simulator.
double eval_ci(const CiModel& model, double distance_m);
double eval_cif(const CifModel& model, double distance_m, double frequency_ghz);
double eval_fi(const FiModel& model, double distance_m);
double eval_abg(const AbgModel& model, double distance_m, double frequency_ghz);

// Least-squares fitters. Shadow sigma uses the N-1 denominator throughout.
CiModel fit_ci(const Dataset& dataset);
FiModel fit_fi(const Dataset& dataset);
// f0 == nullopt selects the dataset's sample-weighted mean frequency.
CifModel fit_cif(const Dataset& dataset, std::optional<double> f0_ghz = std::nullopt);
AbgModel fit_abg(const Dataset& dataset);

}  // namespace plmodel
