#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "liecheck/golden.hpp"
#include "liecheck/pencil.hpp"

namespace liecheck {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunReport {
  std::string tool_version = kToolVersion;
  std::string case_name;
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

Json to_json(const RunReport& r);
// Throws UsageError on missing or mistyped fields.
RunReport run_report_from_json(const Json& j);
// A copy with every "elapsed_ms" member removed, recursively.
Json without_timing(const Json& j);

// Fields: case, box, scanned, filtered, violations, violation_count, min_margin_sq, elapsed_ms.
Json to_json(const PencilReport& r);
PencilReport pencil_report_from_json(const Json& j);

// One JSON object on a single line, newline terminated.
void write_report(const std::filesystem::path& path, const RunReport& r);
RunReport read_report(const std::filesystem::path& path);

enum class DumpFormat { Csv, Jsonl };
DumpFormat parse_dump_format(const std::string& name);

// One record per u-small k-type: coordinates and the squared spin norm as "p/q".
// Returns the number of records written.
std::uint64_t write_usmall_dump(const CaseData& c, const std::filesystem::path& path, DumpFormat format);

struct DumpRecord {
  KType mu;
  Rational spin_norm_sq;
};
std::vector<DumpRecord> read_usmall_dump(const std::filesystem::path& path, DumpFormat format);

}  // namespace liecheck
