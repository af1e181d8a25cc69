#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liecheck/cases.hpp"

namespace liecheck {

// Inclusive integer ranges, one per k-type coordinate.
struct Box {
  std::vector<std::pair<long long, long long>> ranges;

  std::size_t dim() const { return ranges.size(); }
  // number of lattice points (saturates at UINT64_MAX)
  std::uint64_t size() const;
  bool contains(const KType& mu) const;
  // "a:0..12,b:0..7"
  std::string str(const std::vector<std::string>& names) const;
  friend bool operator==(const Box&, const Box&) = default;
};

// Parses "a:0..12,b:0..7,..." with every coordinate named exactly once.
Box parse_box(const CaseData& c, std::string_view text);

struct DefaultBox {
  Box box;
  // true for the classical families, whose box is a small sanity range
  bool sanity_only = false;
};

// Throws UsageError for SP4R, which has no box.
DefaultBox default_box(const CaseData& c);

// mu + n * beta; throws RangeError naming the first non-dominant coordinate.
KType pencil_member(const CaseData& c, const KType& mu, long long n, std::size_t which_beta = 0);

// spin_norm_sq(mu) - spin_norm_sq(mu - beta). Throws PreconditionError unless mu and
// mu - beta are dominant.
Rational step_margin_sq(const CaseData& c, const KType& mu, std::size_t which_beta = 0);

struct StepDecomposition {
  // {mu - rho_n^(j)} - {mu - beta - rho_n^(j)}
  RationalVector delta;
  Rational term_i;
  Rational term_ii;
};

StepDecomposition decompose_step(const CaseData& c, const KType& mu, std::size_t j,
                                 std::size_t which_beta = 0);

// 2 <rho_c, w_{0,k} beta>, k is 1-based.
Rational parabolic_bound(const CaseData& c, int k);
std::vector<Rational> parabolic_bounds(const CaseData& c);
// -2 <rho_c, beta>
Rational naive_bound(const CaseData& c);

// Counters of a (partial) box scan. Merging is order independent.
struct ScanTotals {
  std::uint64_t scanned = 0;
  std::uint64_t filtered = 0;
  std::uint64_t violation_count = 0;
  // lexicographically smallest violations, at most kMaxStoredViolations
  std::vector<KType> violations;
  std::optional<Rational> min_margin_sq;

  static constexpr std::size_t kMaxStoredViolations = 10000;
  void merge(ScanTotals other);
};

struct PencilReport {
  std::string case_name;
  Box box;
  std::string box_text;
  std::uint64_t scanned = 0;
  std::uint64_t filtered = 0;
  std::uint64_t violation_count = 0;
  std::vector<KType> violations;
  // absent when no k-type passed the filter
  std::optional<Rational> min_margin_sq;
  std::int64_t elapsed_ms = 0;
  bool resumed = false;

  bool verified() const { return violation_count == 0; }
};

enum class Engine { Auto, Exact };

struct VerifyOptions {
  unsigned jobs = 1;
  // bound-based pruning of exact variant evaluations; identical results either way
  bool shortcut = true;
  Engine engine = Engine::Auto;
  std::size_t which_beta = 0;
  // resumable state file; empty disables checkpointing
  std::filesystem::path checkpoint;
  std::uint64_t checkpoint_every = 100'000'000;
  // (units done, units total, points scanned so far)
  std::function<void(std::size_t, std::size_t, std::uint64_t)> progress;
};

PencilReport verify_box(const CaseData& c, const Box& box, const VerifyOptions& opts = {});

enum class Sp4rFamily { Descending, Ascending };

struct Sp4rTriple {
  KType mu;
  Rational good;    // spin_norm_sq(mu - beta_good)
  Rational middle;  // spin_norm_sq(mu)
  Rational bad;     // spin_norm_sq(mu - beta_bad)
};

// Smallest m for which the family member is u-large with both neighbours dominant.
long long sp4r_threshold(Sp4rFamily f);
KType sp4r_member(long long m, Sp4rFamily f);
// Throws PreconditionError below sp4r_threshold.
Sp4rTriple sp4r_family(long long m, Sp4rFamily f);
std::string sp4r_family_name(Sp4rFamily f);

}  // namespace liecheck
