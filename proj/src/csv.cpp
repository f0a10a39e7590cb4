// SPDX-License-Identifier: Apache-2.0
#include "rislink/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rislink/errors.hpp"

namespace rislink {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_number(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": bad number '" + field +
                                "'");
  }
  return value;
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_csv(std::ostream& out, const SweepResult& result) {
  for (std::size_t c = 0; c < result.columns.size(); ++c) {
    if (c > 0) out << ',';
    out << result.columns[c];
  }
  out << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << format_number(row[c]);
    }
    out << '\n';
  }
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream out;
  write_csv(out, result);
  return out.str();
}

SweepResult parse_csv(std::istream& in) {
  SweepResult result;
  std::string line;
  if (!std::getline(in, line) || line.empty()) {
    throw std::invalid_argument("CSV is missing its header row");
  }
  result.columns = split(line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != result.columns.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(result.columns.size()) + " fields");
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_number(f, line_no));
    result.rows.push_back(std::move(row));
  }
  return result;
}

SweepResult parse_csv(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

void write_csv_file(const std::filesystem::path& path, const SweepResult& result) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_csv(out, result);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

SweepResult read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_csv(in);
}

}  // namespace rislink
