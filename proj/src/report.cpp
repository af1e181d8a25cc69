#include "liecheck/report.hpp"

#include <fstream>
#include <sstream>

#include "liecheck/errors.hpp"
#include "liecheck/spin.hpp"
#include "liecheck/usmall.hpp"

namespace liecheck {

Json to_json(const RunReport& r) {
  Json j;
  j["tool_version"] = r.tool_version;
  j["case"] = r.case_name;
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["results"] = r.results;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

RunReport run_report_from_json(const Json& j) {
  try {
    RunReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.case_name = j.at("case").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.results = j.at("results");
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

Json without_timing(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (const auto& [k, v] : j.items()) {
      if (k != "elapsed_ms") out[k] = without_timing(v);
    }
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(without_timing(v));
    return out;
  }
  return j;
}

Json to_json(const PencilReport& r) {
  Json j;
  j["case"] = r.case_name;
  j["box"] = r.box_text;
  j["scanned"] = r.scanned;
  j["filtered"] = r.filtered;
  j["violations"] = r.violations;
  j["violation_count"] = r.violation_count;
  j["min_margin_sq"] = r.min_margin_sq ? Json(to_string(*r.min_margin_sq)) : Json(nullptr);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

PencilReport pencil_report_from_json(const Json& j) {
  try {
    PencilReport r;
    r.case_name = j.at("case").get<std::string>();
    r.box_text = j.at("box").get<std::string>();
    r.scanned = j.at("scanned").get<std::uint64_t>();
    r.filtered = j.at("filtered").get<std::uint64_t>();
    r.violations = j.at("violations").get<std::vector<KType>>();
    r.violation_count = j.value("violation_count", static_cast<std::uint64_t>(r.violations.size()));
    if (!j.at("min_margin_sq").is_null()) r.min_margin_sq = parse_rational(j.at("min_margin_sq").get<std::string>());
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed pencil report: ") + e.what());
  }
}

void write_report(const std::filesystem::path& path, const RunReport& r) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UsageError("cannot write report to " + path.string());
  out << to_json(r).dump() << '\n';
}

RunReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read report " + path.string());
  try {
    return run_report_from_json(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
}

DumpFormat parse_dump_format(const std::string& name) {
  if (name == "csv") return DumpFormat::Csv;
  if (name == "jsonl") return DumpFormat::Jsonl;
  throw UsageError("unknown dump format '" + name + "' (expected csv or jsonl)");
}

std::uint64_t write_usmall_dump(const CaseData& c, const std::filesystem::path& path, DumpFormat format) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw UsageError("cannot write dump to " + path.string());
  if (format == DumpFormat::Csv) {
    for (const auto& name : c.coord_names) out << name << ',';
    out << "spin_norm_sq\n";
  }
  std::uint64_t n = 0;
  for_each_usmall(c, [&](const KType& mu) {
    std::string norm = to_string(spin_norm_sq(c, mu));
    if (format == DumpFormat::Csv) {
      for (auto x : mu) out << x << ',';
      out << norm << '\n';
    } else {
      Json j;
      j["mu"] = mu;
      j["spin_norm_sq"] = norm;
      out << j.dump() << '\n';
    }
    ++n;
  });
  return n;
}

std::vector<DumpRecord> read_usmall_dump(const std::filesystem::path& path, DumpFormat format) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read dump " + path.string());
  std::vector<DumpRecord> out;
  std::string line;
  if (format == DumpFormat::Csv) std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    DumpRecord rec;
    if (format == DumpFormat::Csv) {
      std::stringstream ss(line);
      std::string field;
      std::vector<std::string> fields;
      while (std::getline(ss, field, ',')) fields.push_back(field);
      if (fields.size() < 2) throw UsageError("short dump line: " + line);
      for (std::size_t i = 0; i + 1 < fields.size(); ++i) rec.mu.push_back(std::stoll(fields[i]));
      rec.spin_norm_sq = parse_rational(fields.back());
    } else {
      try {
        Json j = Json::parse(line);
        rec.mu = j.at("mu").get<KType>();
        rec.spin_norm_sq = parse_rational(j.at("spin_norm_sq").get<std::string>());
      } catch (const Json::exception& e) {
        throw UsageError(std::string("malformed dump line: ") + e.what());
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace liecheck
