#include "plmodel/types.hpp"

#include <cmath>

namespace plmodel {

std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::UMi: return "UMi";
        case Scenario::UMa: return "UMa";
        case Scenario::InH: return "InH";
        case Scenario::Custom: return "Custom";
    }
    return "Custom";
}

Scenario scenario_from_string(const std::string& name) {
    if (name == "UMi") return Scenario::UMi;
    if (name == "UMa") return Scenario::UMa;
    if (name == "InH") return Scenario::InH;
    if (name == "Custom") return Scenario::Custom;
    throw ValidationError("unknown scenario '" + name + "' (expected UMi, UMa, InH or Custom)");
}

void Environment::validate() const {
    if (!(carrier_frequency_ghz > 0.0))
        throw ValidationError("environment: carrier_frequency must be > 0");
    if (!(bandwidth_mhz > 0.0))
        throw ValidationError("environment: bandwidth must be > 0");
    if (scenario == Scenario::Custom && custom_name.empty())
        throw ValidationError("environment: Custom scenario requires a non-empty name");
}

std::string Environment::label() const {
    return scenario == Scenario::Custom ? custom_name : to_string(scenario);
}

void ChannelSample::validate() const {
    if (!(distance_m > 0.0))
        throw ValidationError("sample: distance must be > 0");
    if (!(time_delay_ns > 0.0))
        throw ValidationError("sample: time_delay must be > 0");
    if (!(rms_delay_spread_ns >= 0.0))
        throw ValidationError("sample: rms_delay_spread must be >= 0");
    if (!(azimuth_aod_deg >= 0.0 && azimuth_aod_deg < 360.0))
        throw ValidationError("sample: azimuth_aod must lie in [0, 360)");
    if (!(azimuth_aoa_deg >= 0.0 && azimuth_aoa_deg < 360.0))
        throw ValidationError("sample: azimuth_aoa must lie in [0, 360)");
    if (!(elevation_aod_deg >= -90.0 && elevation_aod_deg <= 90.0))
        throw ValidationError("sample: elevation_aod must lie in [-90, 90]");
    if (!(elevation_aoa_deg >= -90.0 && elevation_aoa_deg <= 90.0))
        throw ValidationError("sample: elevation_aoa must lie in [-90, 90]");
    if (!(path_loss_db >= 0.0))
        throw ValidationError("sample: path_loss must be >= 0 dB");
}

namespace {
double wrap360(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w < 0.0) w += 360.0;
    return w;
}
}  // namespace

void ChannelSample::normalize_angles() {
    azimuth_aod_deg = wrap360(azimuth_aod_deg);
    azimuth_aoa_deg = wrap360(azimuth_aoa_deg);
}

void SplitSpec::validate() const {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw ValidationError("split: train_fraction must lie in (0, 1)");
}

}  // namespace plmodel
