// SPDX-License-Identifier: Apache-2.0
//
// SweepResult <-> CSV. Header row always present, values printed with 9
// significant digits, '.' decimal separator and LF line endings, independent
// of the process locale.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rislink/scenario_engine.hpp"

namespace rislink {

/// printf("%.9g") in the C locale.
std::string format_number(double value);

void write_csv(std::ostream& out, const SweepResult& result);
std::string to_csv(const SweepResult& result);

/// Throws std::invalid_argument on malformed input (ragged rows, bad numbers).
SweepResult parse_csv(std::istream& in);
SweepResult parse_csv(const std::string& text);

/// Throw IoError when the file cannot be written or read.
void write_csv_file(const std::filesystem::path& path, const SweepResult& result);
SweepResult read_csv_file(const std::filesystem::path& path);

}  // namespace rislink
