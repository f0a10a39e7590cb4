// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "rislink/config.hpp"

namespace rislink {

inline constexpr const char* kToolName = "rislink";
inline constexpr const char* kToolVersion = "1.0.0";

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,        // unexpected internal error
  kExitConfigInvalid = 2,  // bad flags or configuration
  kExitModelDomain = 3,    // inputs outside a model's domain
  kExitIo = 4,             // file could not be read or written
};

struct RunManifest {
  std::string subcommand;
  std::filesystem::path csv_path;
  std::string config_path;  // empty when running on defaults
  nlohmann::json config;    // effective configuration, boundary units
  nlohmann::json overrides;
  long long seed = 0;
  bool deterministic = true;

  nlohmann::json to_json() const;
};

/// `<stem>.manifest.json` next to the CSV.
std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path);

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

/// Entry point of the tool. Summary tables go to `out`, diagnostics and
/// notices to `err`. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rislink
