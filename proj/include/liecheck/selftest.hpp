#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/golden.hpp"

namespace liecheck {

struct SelftestItem {
  std::string name;  // e.g. "usmall-count-EI"
  std::string expected;
  std::string computed;
  bool passed = false;
};

struct SelftestOptions {
  // adds the EVIII/EIX counts and the EV, EVI, EII, EI, FI verification boxes
  bool long_run = false;
  unsigned jobs = 1;
  // reference values to compare against; the bundled data when unset
  std::optional<Json> reference;
  std::function<void(const SelftestItem&)> on_item;
};

struct SelftestResult {
  std::vector<SelftestItem> items;
  bool ok() const;
  std::vector<std::string> failures() const;
};

SelftestResult run_selftest(const SelftestOptions& opts = {});

}  // namespace liecheck
