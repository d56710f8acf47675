#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace rmlab::cli {

enum class Format { Csv, Json, Text };

Format parse_format(const std::string& text);

/// One subcommand's output: metadata plus a table with one row per data point.
/// The checksum covers the header and data rows only, so it is stable across
/// runs while wall-clock time changes.
struct Report {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::optional<std::uint64_t> seed;
  bool randomized = false;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Alternative body for Format::Text (the matrix text format).
  std::optional<std::string> text_body;
  double wall_clock_seconds = 0.0;
  std::string started_utc;

  void add_row(std::vector<std::string> row);
  std::string checksum() const;
};

std::string render(const Report& report, Format format);

std::string fmt_double(double x);
std::string fmt_bool(bool b);

/// FNV-1a, 64 bit, as 16 hex digits.
std::string fnv1a64_hex(const std::string& data);

std::string utc_now();

}  // namespace rmlab::cli
