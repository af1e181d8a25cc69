#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/pencil.hpp"

namespace liecheck {

// Progress of an interrupted verify_box run.
struct CheckpointState {
  std::string case_name;
  std::string box_text;
  bool shortcut = true;
  std::size_t which_beta = 0;
  std::vector<bool> done;  // one flag per work unit
  ScanTotals totals;
};

// $LIECHECK_CHECKPOINT_DIR, or ./liecheck-checkpoints
std::filesystem::path checkpoint_dir();
// File name derived from the case, box and mode, inside checkpoint_dir().
std::filesystem::path checkpoint_path(const std::string& case_name, const std::string& box_text,
                                      bool shortcut, std::size_t which_beta = 0);

// nullopt when the file does not exist; UsageError when it cannot be parsed.
std::optional<CheckpointState> load_checkpoint(const std::filesystem::path& path);
// Writes to a temporary file and renames it over `path`.
void save_checkpoint(const std::filesystem::path& path, const CheckpointState& state);

}  // namespace liecheck
