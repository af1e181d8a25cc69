#pragma once

#include <vector>

#include "liecheck/cases.hpp"

namespace liecheck {

// |{v - rho_n^(j)} + rho_c|^2 for an arbitrary weight v in ambient coordinates.
Rational variant_norm_sq(const CaseData& c, const RationalVector& v, std::size_t j);
// min over j of variant_norm_sq; v need not be dominant.
Rational spin_norm_sq_ambient(const CaseData& c, const RationalVector& v);

// Squared spin norm of a k-type. Throws UsageError when mu is not dominant.
Rational spin_norm_sq(const CaseData& c, const KType& mu);
// Indices j attaining the minimum, ascending.
std::vector<std::size_t> spin_argmin(const CaseData& c, const KType& mu);
// {-rho_n^(j)}
std::vector<RationalVector> spin_lowest_weights(const CaseData& c);

}  // namespace liecheck
