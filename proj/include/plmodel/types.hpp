#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace plmodel {

// Error taxonomy. The CLI maps ValidationError/ConfigError to exit 2 and
// IoError to exit 3.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Scenario { UMi, UMa, InH, Custom };

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

struct Environment {
    Scenario scenario = Scenario::UMi;
    std::string custom_name;          // required when scenario == Custom
    double carrier_frequency_ghz = 28.0;
    double bandwidth_mhz = 800.0;
    double tx_power_dbm = 30.0;
    std::string antenna_config = "SISO/ULA/Co-Pol";

    void validate() const;
    std::string label() const;        // "UMi", "UMa", ... or the custom name
};

// One measurement row. path_loss is the regression target.
struct ChannelSample {
    double distance_m = 0.0;          // T-R separation
    double frequency_ghz = 0.0;
    double time_delay_ns = 0.0;       // first-arrival propagation delay
    double received_power_dbm = 0.0;
    double rms_delay_spread_ns = 0.0;
    double azimuth_aod_deg = 0.0;     // stored modulo 360
    double elevation_aod_deg = 0.0;
    double azimuth_aoa_deg = 0.0;
    double elevation_aoa_deg = 0.0;
    double path_loss_db = 0.0;

    // Throws ValidationError naming the violated invariant; azimuths are
    // expected to already be normalized to [0, 360).
    void validate() const;
    void normalize_angles();
};

struct Dataset {
    Environment environment;
    std::vector<ChannelSample> samples;

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
};

struct SplitSpec {
    double train_fraction = 0.7;
    std::uint64_t seed = 0;

    void validate() const;
};

}  // namespace plmodel
