#pragma once

// Reference computations for the test suites. None of them reuse the library's
// Weyl-group or u-small algorithms.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "liecheck/cases.hpp"

namespace oracle {

using liecheck::CaseData;
using liecheck::KType;
using liecheck::Rational;
using liecheck::RationalVector;
using liecheck::RootSystem;

// Full Weyl orbit of v, by closing under simple reflections.
std::set<RationalVector> weyl_orbit(const RationalVector& v, const RootSystem& sys);

// All roots obtained by reflecting the simple roots, positive ones only.
std::set<RationalVector> positive_roots_by_orbit(const std::vector<RationalVector>& simple);

// |W| from the classification: product over irreducible components, each identified
// by rank and number of positive roots.
std::uint64_t weyl_order(const RootSystem& sys);

// Membership in the zonotope sum over positive p-roots of [-alpha, alpha], tested
// against every hyperplane spanned by rank-1 generators.
class Zonotope {
 public:
  explicit Zonotope(const CaseData& c);
  bool contains(const KType& mu) const;
  std::size_t facets() const { return normals_.size(); }

 private:
  std::vector<std::int64_t> integral_coords(const KType& mu) const;

  const CaseData& c_;
  std::size_t rank_ = 0;
  std::vector<std::vector<std::int64_t>> normals_;
  std::vector<std::int64_t> support_;
  std::vector<std::vector<Rational>> weight_coords_;  // k fundamental weights in g simple coordinates
  std::int64_t denom_ = 1;
};

// Printed classical u-small criterion (rows over ambient coordinates).
bool classical_printed_usmall(const CaseData& c, const KType& mu);

std::uint64_t fnv1a(const std::string& s);

inline std::mt19937_64 rng(std::uint64_t seed = 20240611) { return std::mt19937_64(seed); }

}  // namespace oracle
