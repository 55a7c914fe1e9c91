#pragma once

#include <map>
#include <string>

#include "plmodel/types.hpp"

namespace plmodel {

// Measurement CSV schema (fixed header, one sample per row).
extern const char* const kCsvHeader;

// Parses the measurement CSV at `path` into a Dataset carrying `environment`.
// Azimuths are normalized modulo 360 at load time; every other invariant is
// checked and violations reported with the 1-based data row index.
Dataset load_dataset(const std::string& path, const Environment& environment);

// Writes the CSV; numeric fields are printed with enough digits to round-trip
// exactly. Refuses empty datasets.
void save_dataset(const Dataset& dataset, const std::string& path);

// Environment sidecar: plain-text key=value (scenario=, frequency_ghz=,
// bandwidth_mhz=, tx_power_dbm=, antenna=).
Environment load_environment(const std::string& path);
void save_environment(const Environment& env, const std::string& path);

// Shared key=value dialect used by the sidecar and the simulator config:
// one `key=value` pair per line, '#' comments, blank lines ignored.
std::map<std::string, std::string> load_keyvalue_file(const std::string& path);

// Deterministic train/test split: seeded uniform shuffle then prefix-take.
// |train| = round-half-up(train_fraction * N). Requires N >= 2.
std::pair<Dataset, Dataset> split_train_test(const Dataset& dataset, const SplitSpec& spec);

}  // namespace plmodel
