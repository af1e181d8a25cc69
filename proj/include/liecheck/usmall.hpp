#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "liecheck/cases.hpp"

namespace liecheck {

struct InequalityRow {
  std::vector<Rational> coefs;
  Rational bound;
  friend bool operator==(const InequalityRow&, const InequalityRow&) = default;
};

// Rows read as sum_i coefs[i] * mu[i] <= bound over k-type coordinates.
struct InequalitySystem {
  std::vector<InequalityRow> rows;

  bool satisfied(const KType& mu) const;
  std::string str(const std::vector<std::string>& names) const;
};

// One row per (xi_i, w^(j)) pair, unreduced: <mu + 2 rho_c, w xi_i> <= 2 <rho, xi_i>.
InequalitySystem lemma_system(const CaseData& c);

// Rows scaled to coprime integer coefficients with floored bounds, duplicates and
// rows implied by a single other row removed. SP4R uses the bundled direct system.
InequalitySystem usmall_system(const CaseData& c);

// Throws UsageError for non-dominant mu. Rebuilds the system on every call; use
// UsmallFilter for repeated queries.
bool is_usmall(const CaseData& c, const KType& mu);

class UsmallFilter {
 public:
  explicit UsmallFilter(const CaseData& c);
  // Throws UsageError for non-dominant mu.
  bool operator()(const KType& mu) const;
  const InequalitySystem& system() const { return sys_; }

 private:
  const CaseData& c_;
  InequalitySystem sys_;
};

struct EnumerateOptions {
  unsigned jobs = 1;
  // scan coordinates last-to-first
  bool reverse = false;
};

std::uint64_t count_usmall(const CaseData& c, const EnumerateOptions& opts = {});
// Visits u-small k-types in lexicographic order (single-threaded).
void for_each_usmall(const CaseData& c, const std::function<void(const KType&)>& visit);

}  // namespace liecheck
