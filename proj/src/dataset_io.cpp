#include "plmodel/dataset_io.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "plmodel/rng.hpp"

namespace plmodel {

const char* const kCsvHeader =
    "distance_m,frequency_ghz,time_delay_ns,received_power_dbm,rms_delay_spread_ns,"
    "azimuth_aod_deg,elevation_aod_deg,azimuth_aoa_deg,elevation_aoa_deg,path_loss_db";

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& column) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    while (begin != end && (*begin == ' ' || *begin == '\t')) ++begin;
    while (end != begin && (*(end - 1) == ' ' || *(end - 1) == '\t' || *(end - 1) == '\r')) --end;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ValidationError("row " + std::to_string(row) + ": cannot parse '" + cell +
                              "' in column " + column);
    return value;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Round-trip exact formatting: shortest representation that parses back.
std::string format_double(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace

Dataset load_dataset(const std::string& path, const Environment& environment) {
    environment.validate();
    std::ifstream in(path);
    if (!in) throw IoError("cannot open dataset file: " + path);

    std::string header;
    if (!std::getline(in, header)) throw ValidationError(path + ": empty file");
    header = trim(header);

    const auto expected = split_csv_line(kCsvHeader);
    const auto actual = split_csv_line(header);
    for (const auto& col : expected) {
        if (std::find(actual.begin(), actual.end(), col) == actual.end())
            throw ValidationError(path + ": missing column '" + col + "'");
    }
    if (actual != expected)
        throw ValidationError(path + ": header does not match the measurement CSV schema");

    Dataset ds;
    ds.environment = environment;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        ++row;
        const auto cells = split_csv_line(line);
        if (cells.size() != expected.size())
            throw ValidationError("row " + std::to_string(row) + ": expected " +
                                  std::to_string(expected.size()) + " cells, got " +
                                  std::to_string(cells.size()));
        ChannelSample s;
        s.distance_m = parse_cell(cells[0], row, "distance_m");
        s.frequency_ghz = parse_cell(cells[1], row, "frequency_ghz");
        s.time_delay_ns = parse_cell(cells[2], row, "time_delay_ns");
        s.received_power_dbm = parse_cell(cells[3], row, "received_power_dbm");
        s.rms_delay_spread_ns = parse_cell(cells[4], row, "rms_delay_spread_ns");
        s.azimuth_aod_deg = parse_cell(cells[5], row, "azimuth_aod_deg");
        s.elevation_aod_deg = parse_cell(cells[6], row, "elevation_aod_deg");
        s.azimuth_aoa_deg = parse_cell(cells[7], row, "azimuth_aoa_deg");
        s.elevation_aoa_deg = parse_cell(cells[8], row, "elevation_aoa_deg");
        s.path_loss_db = parse_cell(cells[9], row, "path_loss_db");
        s.normalize_angles();
        try {
            s.validate();
        } catch (const ValidationError& e) {
            throw ValidationError("row " + std::to_string(row) + ": " + e.what());
        }
        ds.samples.push_back(s);
    }
    if (ds.samples.empty()) throw ValidationError(path + ": empty dataset");
    return ds;
}

void save_dataset(const Dataset& dataset, const std::string& path) {
    if (dataset.empty()) throw ValidationError("refusing to write an empty dataset");
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << kCsvHeader << '\n';
    for (const auto& s : dataset.samples) {
        out << format_double(s.distance_m) << ',' << format_double(s.frequency_ghz) << ','
            << format_double(s.time_delay_ns) << ',' << format_double(s.received_power_dbm) << ','
            << format_double(s.rms_delay_spread_ns) << ',' << format_double(s.azimuth_aod_deg)
            << ',' << format_double(s.elevation_aod_deg) << ',' << format_double(s.azimuth_aoa_deg)
            << ',' << format_double(s.elevation_aoa_deg) << ',' << format_double(s.path_loss_db)
            << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

std::map<std::string, std::string> load_keyvalue_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return kv;
}

Environment load_environment(const std::string& path) {
    const auto kv = load_keyvalue_file(path);
    Environment env;
    auto get = [&](const char* key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    if (auto* v = get("scenario")) {
        try {
            env.scenario = scenario_from_string(*v);
        } catch (const ValidationError&) {
            env.scenario = Scenario::Custom;
            env.custom_name = *v;
        }
    }
    if (auto* v = get("frequency_ghz")) env.carrier_frequency_ghz = std::stod(*v);
    if (auto* v = get("bandwidth_mhz")) env.bandwidth_mhz = std::stod(*v);
    if (auto* v = get("tx_power_dbm")) env.tx_power_dbm = std::stod(*v);
    if (auto* v = get("antenna")) env.antenna_config = *v;
    env.validate();
    return env;
}

void save_environment(const Environment& env, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "scenario=" << env.label() << '\n'
        << "frequency_ghz=" << format_double(env.carrier_frequency_ghz) << '\n'
        << "bandwidth_mhz=" << format_double(env.bandwidth_mhz) << '\n'
        << "tx_power_dbm=" << format_double(env.tx_power_dbm) << '\n'
        << "antenna=" << env.antenna_config << '\n';
    if (!out) throw IoError("write failed: " + path);
}

std::pair<Dataset, Dataset> split_train_test(const Dataset& dataset, const SplitSpec& spec) {
    spec.validate();
    const std::size_t n = dataset.size();
    if (n < 2) throw ValidationError("dataset too small to split");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng::Stream stream(spec.seed);
    // Fisher-Yates with the portable bounded draw
    for (std::size_t i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(stream.uniform_int(0, i));
        std::swap(order[i], order[j]);
    }

    // round-half-up, clamped so both sides stay non-empty
    auto n_train = static_cast<std::size_t>(std::floor(spec.train_fraction * static_cast<double>(n) + 0.5));
    n_train = std::clamp<std::size_t>(n_train, 1, n - 1);

    Dataset train, test;
    train.environment = dataset.environment;
    test.environment = dataset.environment;
    for (std::size_t i = 0; i < n; ++i)
        (i < n_train ? train : test).samples.push_back(dataset.samples[order[i]]);
    return {std::move(train), std::move(test)};
}

}  // namespace plmodel
