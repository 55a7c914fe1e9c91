#include "plmodel/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "plmodel/dataset_io.hpp"
#include "plmodel/pathloss.hpp"

namespace plmodel {

namespace {
constexpr double kSpeedOfLightMPerNs = kSpeedOfLight * 1e-9;
}

void SimConfig::validate() const {
    environment.validate();
    if (n_samples < 1) throw ConfigError("sim: n_samples must be >= 1");
    if (!(distance_min_m >= 1.0)) throw ConfigError("sim: distance_min must be >= 1 m");
    if (!(distance_max_m >= distance_min_m)) throw ConfigError("sim: distance range inverted");
    if (!(shadow_sigma_db >= 0.0)) throw ConfigError("sim: shadow_sigma must be >= 0");
    if (tap_count_min < 1) throw ConfigError("sim: tap_count_min must be >= 1");
    if (tap_count_max < tap_count_min) throw ConfigError("sim: tap count range inverted");
    if (!(tap_decay_ns > 0.0)) throw ConfigError("sim: tap_decay must be > 0");
    if (!(excess_delay_scale_ns >= 0.0)) throw ConfigError("sim: excess_delay_scale must be >= 0");
    if (!(tap_jitter_sigma_db >= 0.0)) throw ConfigError("sim: tap_jitter_sigma must be >= 0");
    if (!(elevation_range_deg >= 0.0 && elevation_range_deg <= 90.0))
        throw ConfigError("sim: elevation_range must lie in [0, 90]");
    if (!(spread_variation >= 0.0)) throw ConfigError("sim: spread_variation must be >= 0");
    if (!(rp_noise_sigma_db >= 0.0)) throw ConfigError("sim: rp_noise_sigma must be >= 0");
}

SimConfig umi_preset() {
    SimConfig cfg;
    cfg.environment.scenario = Scenario::UMi;
    cfg.environment.carrier_frequency_ghz = 28.0;
    cfg.environment.bandwidth_mhz = 800.0;
    cfg.environment.tx_power_dbm = 30.0;
    cfg.environment.antenna_config = "SISO/ULA/Co-Pol";
    cfg.ground_truth = GroundTruthKind::CI;
    cfg.ci_n = 3.2;
    cfg.shadow_sigma_db = 4.0;
    return cfg;
}

SimConfig uma_preset() {
    SimConfig cfg = umi_preset();
    cfg.environment.scenario = Scenario::UMa;
    cfg.ci_n += 0.5;
    cfg.shadow_sigma_db += 2.0;
    return cfg;
}

SimConfig load_sim_config(const std::string& path) {
    const auto kv = load_keyvalue_file(path);
    SimConfig cfg;
    if (auto it = kv.find("preset"); it != kv.end()) {
        if (it->second == "umi") cfg = umi_preset();
        else if (it->second == "uma") cfg = uma_preset();
        else throw ConfigError("sim config: unknown preset '" + it->second + "'");
    }
    for (const auto& [key, value] : kv) {
        try {
            if (key == "preset") continue;
            else if (key == "scenario") {
                try {
                    cfg.environment.scenario = scenario_from_string(value);
                } catch (const ValidationError&) {
                    cfg.environment.scenario = Scenario::Custom;
                    cfg.environment.custom_name = value;
                }
            } else if (key == "frequency_ghz") cfg.environment.carrier_frequency_ghz = std::stod(value);
            else if (key == "bandwidth_mhz") cfg.environment.bandwidth_mhz = std::stod(value);
            else if (key == "tx_power_dbm") cfg.environment.tx_power_dbm = std::stod(value);
            else if (key == "antenna") cfg.environment.antenna_config = value;
            else if (key == "n_samples") cfg.n_samples = std::stoull(value);
            else if (key == "distance_min_m") cfg.distance_min_m = std::stod(value);
            else if (key == "distance_max_m") cfg.distance_max_m = std::stod(value);
            else if (key == "ground_truth") {
                if (value == "ci") cfg.ground_truth = GroundTruthKind::CI;
                else if (value == "abg") cfg.ground_truth = GroundTruthKind::ABG;
                else throw ConfigError("sim config: ground_truth must be ci or abg");
            } else if (key == "ci_n") cfg.ci_n = std::stod(value);
            else if (key == "abg_alpha") cfg.abg_alpha = std::stod(value);
            else if (key == "abg_beta") cfg.abg_beta = std::stod(value);
            else if (key == "abg_gamma") cfg.abg_gamma = std::stod(value);
            else if (key == "shadow_sigma_db") cfg.shadow_sigma_db = std::stod(value);
            else if (key == "tap_count_min") cfg.tap_count_min = std::stoi(value);
            else if (key == "tap_count_max") cfg.tap_count_max = std::stoi(value);
            else if (key == "tap_decay_ns") cfg.tap_decay_ns = std::stod(value);
            else if (key == "excess_delay_scale_ns") cfg.excess_delay_scale_ns = std::stod(value);
            else if (key == "tap_jitter_sigma_db") cfg.tap_jitter_sigma_db = std::stod(value);
            else if (key == "elevation_range_deg") cfg.elevation_range_deg = std::stod(value);
            else if (key == "spread_variation") cfg.spread_variation = std::stod(value);
            else if (key == "rp_spread_bias_db") cfg.rp_spread_bias_db = std::stod(value);
            else if (key == "rp_noise_sigma_db") cfg.rp_noise_sigma_db = std::stod(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else throw ConfigError("sim config: unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw ConfigError("sim config: cannot parse value '" + value + "' for key " + key);
        } catch (const std::out_of_range&) {
            throw ConfigError("sim config: value out of range for key " + key);
        }
    }
    cfg.validate();
    return cfg;
}

PowerDelayProfile synthesize_pdp(const SimConfig& config, double distance_m, double rx_power_dbm,
                                 double excess_scale_multiplier, rng::Stream& stream) {
    if (!(distance_m > 0.0)) throw ValidationError("synthesize_pdp: distance must be > 0");

    const double first_arrival_ns = distance_m / kSpeedOfLightMPerNs;
    const auto tap_count = static_cast<int>(stream.uniform_int(
        static_cast<std::uint64_t>(config.tap_count_min),
        static_cast<std::uint64_t>(config.tap_count_max)));

    std::vector<double> excess(static_cast<std::size_t>(tap_count), 0.0);
    const double scale = config.excess_delay_scale_ns * excess_scale_multiplier;
    for (int i = 1; i < tap_count; ++i)
        excess[static_cast<std::size_t>(i)] = stream.exponential(scale);
    std::sort(excess.begin() + 1, excess.end());
    // strictly increasing delays even under (measure-zero) ties
    for (std::size_t i = 1; i < excess.size(); ++i)
        if (excess[i] <= excess[i - 1]) excess[i] = std::nextafter(excess[i - 1], 1e300);

    std::vector<double> power(excess.size());
    for (std::size_t i = 0; i < excess.size(); ++i) {
        double p = std::exp(-excess[i] / config.tap_decay_ns);
        if (config.tap_jitter_sigma_db > 0.0)
            p *= std::pow(10.0, config.tap_jitter_sigma_db * stream.normal() / 10.0);
        power[i] = p;
    }

    double total = 0.0;
    for (double p : power) total += p;
    const double target = std::pow(10.0, rx_power_dbm / 10.0);  // linear mW
    const double norm = target / total;

    PowerDelayProfile pdp;
    pdp.taps.reserve(excess.size());
    for (std::size_t i = 0; i < excess.size(); ++i)
        pdp.taps.push_back({first_arrival_ns + excess[i], std::sqrt(power[i] * norm)});
    return pdp;
}

double rms_delay_spread(const PowerDelayProfile& pdp) {
    if (pdp.taps.empty()) throw ValidationError("rms_delay_spread: empty PDP");
    double p_sum = 0.0, pt_sum = 0.0, pt2_sum = 0.0;
    for (const auto& tap : pdp.taps) {
        const double p = tap.amplitude * tap.amplitude;
        p_sum += p;
        pt_sum += p * tap.delay_ns;
        pt2_sum += p * tap.delay_ns * tap.delay_ns;
    }
    const double mean = pt_sum / p_sum;
    const double second = pt2_sum / p_sum - mean * mean;
    return std::sqrt(std::max(second, 0.0));
}

Apdp apdp(const std::vector<PowerDelayProfile>& pdps, double bin_width_ns) {
    if (pdps.empty()) throw ValidationError("apdp: no profiles");
    if (!(bin_width_ns > 0.0)) throw ValidationError("apdp: bin width must be > 0");

    double max_delay = 0.0;
    for (const auto& pdp : pdps)
        for (const auto& tap : pdp.taps) max_delay = std::max(max_delay, tap.delay_ns);

    Apdp result;
    result.bin_width_ns = bin_width_ns;
    result.power.assign(static_cast<std::size_t>(max_delay / bin_width_ns) + 1, 0.0);
    for (const auto& pdp : pdps) {
        for (const auto& tap : pdp.taps) {
            const auto bin = static_cast<std::size_t>(tap.delay_ns / bin_width_ns);
            result.power[std::min(bin, result.power.size() - 1)] +=
                tap.amplitude * tap.amplitude;
        }
    }
    for (double& p : result.power) p /= static_cast<double>(pdps.size());
    return result;
}

Dataset generate_dataset(const SimConfig& config) {
    config.validate();

    Dataset ds;
    ds.environment = config.environment;
    ds.samples.resize(config.n_samples);

    const double f = config.environment.carrier_frequency_ghz;
    const double tx = config.environment.tx_power_dbm;

    // Per-sample substreams: generation is order-independent and could fan
    // out across threads without changing the output.
    for (std::size_t i = 0; i < config.n_samples; ++i) {
        auto stream = rng::Stream::substream(config.seed, i);

        const double d = stream.uniform(config.distance_min_m, config.distance_max_m);
        const double shadow_z = stream.normal();
        const double spread_w = stream.normal();
        const double az_aod = stream.uniform(0.0, 360.0);
        const double el_aod = stream.uniform(-config.elevation_range_deg, config.elevation_range_deg);
        const double az_aoa = stream.uniform(0.0, 360.0);
        const double el_aoa = stream.uniform(-config.elevation_range_deg, config.elevation_range_deg);
        const double rp_noise_z = stream.normal();

        double median_pl;
        if (config.ground_truth == GroundTruthKind::CI) {
            CiModel ci;
            ci.ple = config.ci_n;
            ci.carrier_frequency_ghz = f;
            median_pl = eval_ci(ci, d);
        } else {
            AbgModel abg;
            abg.alpha = config.abg_alpha;
            abg.beta_db = config.abg_beta;
            abg.gamma = config.abg_gamma;
            median_pl = eval_abg(abg, d, f);
        }
        const double path_loss = std::max(0.0, median_pl + config.shadow_sigma_db * shadow_z);
        const double received_power = tx - path_loss + config.rp_spread_bias_db * spread_w +
                                      config.rp_noise_sigma_db * rp_noise_z;
        const double scale_mult = std::exp(config.spread_variation * spread_w);
        const PowerDelayProfile pdp = synthesize_pdp(config, d, received_power, scale_mult, stream);

        ChannelSample& s = ds.samples[i];
        s.distance_m = d;
        s.frequency_ghz = f;
        s.time_delay_ns = pdp.taps.front().delay_ns;  // first arrival
        s.received_power_dbm = received_power;
        s.rms_delay_spread_ns = rms_delay_spread(pdp);
        s.azimuth_aod_deg = az_aod;
        s.elevation_aod_deg = el_aod;
        s.azimuth_aoa_deg = az_aoa;
        s.elevation_aoa_deg = el_aoa;
        s.path_loss_db = path_loss;
        s.normalize_angles();
        s.validate();
    }
    return ds;
}

}  // namespace plmodel
