#pragma once

#include <string>
#include <vector>

#include "plmodel/rng.hpp"
#include "plmodel/types.hpp"

namespace plmodel {

enum class GroundTruthKind { CI, ABG };

// Deterministic synthetic measurement generator. Ground truth is a known
// path-loss law plus zero-mean Gaussian dB-domain shadowing, so fitters can
// be tested for parameter recovery.
struct SimConfig {
    Environment environment;
    std::size_t n_samples = 1000;
    double distance_min_m = 1.0;
    double distance_max_m = 40.0;

    GroundTruthKind ground_truth = GroundTruthKind::CI;
    double ci_n = 2.0;
    double abg_alpha = 3.4;
    double abg_beta = 19.2;
    double abg_gamma = 2.3;
    double shadow_sigma_db = 4.0;

    // multipath tap synthesis
    int tap_count_min = 2;
    int tap_count_max = 10;
    double tap_decay_ns = 25.0;          // exponential PDP decay constant
    double excess_delay_scale_ns = 100.0;
    double tap_jitter_sigma_db = 3.0;    // 0 disables per-tap power jitter
    double elevation_range_deg = 30.0;   // elevation angles uniform in +-range

    // Per-sample lognormal variation of the excess-delay scale. 0 keeps the
    // scale fixed.
    double spread_variation = 0.0;
    // Received-power measurement imperfections. Both default to 0, in which
    // case received_power == tx_power - path_loss holds exactly.
    // rp_spread_bias_db couples the error to the sample's delay-spread
    // factor (rich multipath biases the power estimate); rp_noise_sigma_db
    // is independent Gaussian noise.
    double rp_spread_bias_db = 0.0;
    double rp_noise_sigma_db = 0.0;

    std::uint64_t seed = 0;

    void validate() const;
};

struct PowerDelayProfile {
    struct Tap {
        double delay_ns;
        double amplitude;  // linear; power = amplitude^2
    };
    std::vector<Tap> taps;  // delays strictly increasing
};

// Scenario presets. UMa differs from UMi by +0.5 PLE and +2 dB shadowing.
SimConfig umi_preset();
SimConfig uma_preset();

// key=value config file (same dialect as the environment sidecar); keys match
// the SimConfig field names plus an optional leading `preset=umi|uma`.
SimConfig load_sim_config(const std::string& path);

Dataset generate_dataset(const SimConfig& config);

// Tap-level synthesis for one sample: tap count uniform in the configured
// range, tap 0 at the first-arrival delay, later taps at sorted exponential
// excess delays, exponentially decaying powers with optional dB jitter,
// total power normalized to rx_power_dbm.
PowerDelayProfile synthesize_pdp(const SimConfig& config, double distance_m, double rx_power_dbm,
                                 double excess_scale_multiplier, rng::Stream& stream);

// Second central moment of the PDP, in ns.
double rms_delay_spread(const PowerDelayProfile& pdp);

struct Apdp {
    double bin_width_ns = 0.0;
    std::vector<double> power;  // per-bin mean linear power across profiles
};

Apdp apdp(const std::vector<PowerDelayProfile>& pdps, double bin_width_ns);

}  // namespace plmodel
