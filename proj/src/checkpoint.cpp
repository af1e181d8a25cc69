#include "liecheck/checkpoint.hpp"

#include <cstdlib>
#include <fstream>
#include <cctype>

#include "liecheck/errors.hpp"
#include "liecheck/golden.hpp"

namespace liecheck {

namespace fs = std::filesystem;

fs::path checkpoint_dir() {
  if (const char* env = std::getenv("LIECHECK_CHECKPOINT_DIR"); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  return fs::path("liecheck-checkpoints");
}

fs::path checkpoint_path(const std::string& case_name, const std::string& box_text, bool shortcut,
                         std::size_t which_beta) {
  std::string file = case_name + "_" + box_text + (shortcut ? "" : "_noshortcut");
  if (which_beta != 0) file += "_beta" + std::to_string(which_beta + 1);
  for (char& ch : file) {
    bool keep = std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '-' || ch == '_';
    if (!keep) ch = ch == ',' ? '_' : '-';
  }
  return checkpoint_dir() / (file + ".json");
}

std::optional<CheckpointState> load_checkpoint(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    CheckpointState st;
    st.case_name = j.at("case").get<std::string>();
    st.box_text = j.at("box").get<std::string>();
    st.shortcut = j.at("shortcut").get<bool>();
    st.which_beta = j.at("which_beta").get<std::size_t>();
    for (char ch : j.at("done").get<std::string>()) st.done.push_back(ch == '1');
    st.totals.scanned = j.at("scanned").get<std::uint64_t>();
    st.totals.filtered = j.at("filtered").get<std::uint64_t>();
    st.totals.violation_count = j.at("violation_count").get<std::uint64_t>();
    st.totals.violations = j.at("violations").get<std::vector<KType>>();
    if (!j.at("min_margin_sq").is_null()) {
      st.totals.min_margin_sq = parse_rational(j.at("min_margin_sq").get<std::string>());
    }
    return st;
  } catch (const Json::exception& e) {
    throw UsageError("unreadable checkpoint " + path.string() + ": " + e.what());
  }
}

void save_checkpoint(const fs::path& path, const CheckpointState& st) {
  Json j;
  j["case"] = st.case_name;
  j["box"] = st.box_text;
  j["shortcut"] = st.shortcut;
  j["which_beta"] = st.which_beta;
  std::string done;
  for (bool b : st.done) done.push_back(b ? '1' : '0');
  j["done"] = done;
  j["scanned"] = st.totals.scanned;
  j["filtered"] = st.totals.filtered;
  j["violation_count"] = st.totals.violation_count;
  j["violations"] = st.totals.violations;
  j["min_margin_sq"] = st.totals.min_margin_sq ? Json(to_string(*st.totals.min_margin_sq)) : Json(nullptr);

  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << j.dump() << '\n';
  }
  fs::rename(tmp, path);
}

}  // namespace liecheck
