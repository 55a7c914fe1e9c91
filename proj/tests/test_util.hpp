#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "plmodel/types.hpp"

namespace testutil {

inline std::filesystem::path tmp_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("plm-tests-" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

inline std::string write_file(const std::string& name, const std::string& content) {
    const auto path = tmp_dir() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

// Minimal valid sample; callers override what they test.
inline plmodel::ChannelSample sample(double distance_m, double path_loss_db,
                                     double frequency_ghz = 28.0) {
    plmodel::ChannelSample s;
    s.distance_m = distance_m;
    s.frequency_ghz = frequency_ghz;
    s.time_delay_ns = distance_m / 0.299792458;
    s.received_power_dbm = 30.0 - path_loss_db;
    s.rms_delay_spread_ns = 10.0;
    s.azimuth_aod_deg = 10.0;
    s.elevation_aod_deg = 5.0;
    s.azimuth_aoa_deg = 20.0;
    s.elevation_aoa_deg = -5.0;
    s.path_loss_db = path_loss_db;
    return s;
}

inline plmodel::Dataset dataset_of(std::initializer_list<plmodel::ChannelSample> samples) {
    plmodel::Dataset ds;
    for (const auto& s : samples) ds.samples.push_back(s);
    return ds;
}

}  // namespace testutil
