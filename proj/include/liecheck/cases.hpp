#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liecheck/rational_vector.hpp"
#include "liecheck/root_system.hpp"
#include "liecheck/weyl.hpp"

namespace liecheck {

enum class Family { SL2nR, SL2n1R, SLnH, EI, EII, EIV, EV, EVI, EVIII, EIX, FI, FII, G, SP4R };

const std::vector<Family>& all_families();
std::string family_name(Family f);
bool is_classical(Family f);

struct CaseId {
  Family family = Family::G;
  std::optional<int> n;

  // "EI", "SL2nR[n=3]"
  std::string str() const;
  friend bool operator==(const CaseId&, const CaseId&) = default;
};

// Throws UnknownCaseError for an unrecognized name and UsageError when n is missing,
// superfluous or too small.
CaseId make_case_id(std::string_view name, std::optional<int> n = std::nullopt);

// Highest weight in k-fundamental-weight coordinates; (p, q) for SP4R.
using KType = std::vector<long long>;

struct CaseData {
  CaseId id;
  RootSystem g_restricted;
  RootSystem k_system;
  std::vector<RationalVector> p_positive;
  // One highest weight of p, or two for SP4R.
  std::vector<RationalVector> betas;
  RationalVector rho;
  RationalVector rho_c;
  std::vector<RationalVector> rho_n_variants;
  std::vector<RationalVector> k_fund_weights;
  std::vector<RationalVector> g_fund_weights;
  bool k_has_center = false;
  std::vector<WeylWord> w1;
  std::vector<std::string> coord_names;

  const RationalVector& beta() const { return betas.front(); }
  std::size_t ktype_dim() const { return coord_names.size(); }
  std::size_t s() const { return w1.size(); }
};

CaseData build_case(const CaseId& id);

RationalVector ktype_to_ambient(const CaseData& c, const KType& mu);
// Inverse of ktype_to_ambient. Throws UsageError if v is not an integral weight.
KType ambient_to_ktype(const CaseData& c, const RationalVector& v);
bool is_dominant_ktype(const CaseData& c, const KType& mu);
KType beta_ktype(const CaseData& c, std::size_t which = 0);

struct CaseDescriptor {
  Family family;
  std::string name;
  bool parametrized;
  std::optional<int> min_n;
  // k rank for fixed cases
  std::optional<int> rank;
  bool k_has_center;
};

std::vector<CaseDescriptor> list_cases();

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::string case_name;
  std::vector<ValidationCheck> checks;
  bool ok() const;
  std::vector<std::string> failures() const;
};

// Runs every structural invariant plus comparisons with the bundled reference data.
ValidationReport validate_case(const CaseData& c);

// Human-readable data sheet.
std::string case_sheet(const CaseData& c);

}  // namespace liecheck
