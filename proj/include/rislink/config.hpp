// SPDX-License-Identifier: Apache-2.0
//
// JSON run configuration. Values are written in boundary units (dBm, dBi,
// dB, GHz, MHz, mW, meters) and converted to the internal linear units of
// ScenarioConfig on load. Every field is optional; an empty object reproduces
// the reference setup.
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "rislink/scenario_engine.hpp"

namespace rislink {

struct SweepSettings {
  XRange x{0.0, 200.0};
  double step = 1.0;  // m
  std::vector<std::size_t> n_list{200, 500, 1000};
  std::vector<double> rate_grid;  // bit/s/Hz, defaults to 0.5, 1.0, ..., 30
  double ris_x = 0.0;             // RIS position for ee-vs-rate and size-ris
};

struct RunConfig {
  ScenarioConfig scenario;
  SweepSettings sweep;
  /// Dotted names of fields that fell back to their defaults, in file order.
  std::vector<std::string> defaulted;
};

/// Throws ConfigInvalid naming the offending field (unknown keys included).
RunConfig parse_config(const nlohmann::json& doc);

/// Throws IoError if the file cannot be read, ConfigInvalid if it does not
/// parse or validate.
RunConfig load_config(const std::filesystem::path& path);

/// Snapshot in boundary units; parse_config(config_to_json(c)) reproduces c.
nlohmann::json config_to_json(const RunConfig& config);

/// start, start + step, ... <= stop.
std::vector<double> default_rate_grid();

}  // namespace rislink
