#include "report.hpp"

#include <cstdio>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include "rmlab/common.hpp"

namespace rmlab::cli {

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  if (text == "text") return Format::Text;
  throw std::invalid_argument("format must be csv, json or text");
}

void Report::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::logic_error("report row width differs from header");
  rows.push_back(std::move(row));
}

namespace {

std::string join(const std::vector<std::string>& cells, char sep) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out;
}

std::string data_block(const Report& r) {
  std::string out = join(r.columns, ',') + '\n';
  for (const auto& row : r.rows) out += join(row, ',') + '\n';
  return out;
}

constexpr const char* kSubstreamRule = "trial t uses mt19937_64(splitmix64(seed ^ splitmix64(t)))";

}  // namespace

std::string Report::checksum() const { return "fnv1a64:" + fnv1a64_hex(data_block(*this)); }

std::string render(const Report& r, Format format) {
  if (format == Format::Json) {
    nlohmann::ordered_json j;
    j["tool"] = "rmlab";
    j["version"] = kVersion;
    j["command"] = r.command;
    j["config"] = r.config;
    j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
    if (r.randomized) j["substream"] = kSubstreamRule;
    j["started_utc"] = r.started_utc;
    j["wall_clock_seconds"] = r.wall_clock_seconds;
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    j["checksum"] = r.checksum();
    return j.dump(2) + '\n';
  }
  if (format == Format::Text && !r.text_body) throw std::invalid_argument("text format is only available for 'matrix'");

  std::ostringstream out;
  out << "# rmlab " << kVersion << '\n';
  out << "# command: " << r.command << '\n';
  out << "# config: " << r.config.dump() << '\n';
  if (r.seed) out << "# seed: " << *r.seed << '\n';
  if (r.randomized) out << "# substream: " << kSubstreamRule << '\n';
  out << "# started_utc: " << r.started_utc << '\n';
  out << "# wall_clock_seconds: " << fmt_double(r.wall_clock_seconds) << '\n';
  out << (format == Format::Text ? *r.text_body : data_block(r));
  out << "# checksum: " << r.checksum() << '\n';
  return out.str();
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace rmlab::cli
