#include "liecheck/spin.hpp"

#include "liecheck/errors.hpp"

namespace liecheck {

namespace {

void require_dominant(const CaseData& c, const KType& mu) {
  if (mu.size() != c.ktype_dim()) {
    throw UsageError("k-type for " + c.id.str() + " needs " + std::to_string(c.ktype_dim()) +
                     " coordinates");
  }
  if (!is_dominant_ktype(c, mu)) throw UsageError("k-type is not dominant");
}

}  // namespace

Rational variant_norm_sq(const CaseData& c, const RationalVector& v, std::size_t j) {
  if (j >= c.rho_n_variants.size()) throw UsageError("variant index out of range");
  RationalVector d = to_dominant(v - c.rho_n_variants[j], c.k_system).vector;
  return norm_sq(d + c.rho_c);
}

Rational spin_norm_sq_ambient(const CaseData& c, const RationalVector& v) {
  Rational best = variant_norm_sq(c, v, 0);
  for (std::size_t j = 1; j < c.s(); ++j) {
    Rational x = variant_norm_sq(c, v, j);
    if (x < best) best = x;
  }
  return best;
}

Rational spin_norm_sq(const CaseData& c, const KType& mu) {
  require_dominant(c, mu);
  return spin_norm_sq_ambient(c, ktype_to_ambient(c, mu));
}

std::vector<std::size_t> spin_argmin(const CaseData& c, const KType& mu) {
  require_dominant(c, mu);
  RationalVector v = ktype_to_ambient(c, mu);
  std::vector<Rational> vals;
  for (std::size_t j = 0; j < c.s(); ++j) vals.push_back(variant_norm_sq(c, v, j));
  Rational best = vals[0];
  for (const auto& x : vals) best = x < best ? x : best;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < vals.size(); ++j) {
    if (vals[j] == best) out.push_back(j);
  }
  return out;
}

std::vector<RationalVector> spin_lowest_weights(const CaseData& c) {
  std::vector<RationalVector> out;
  for (const auto& v : c.rho_n_variants) out.push_back(-v);
  return out;
}

}  // namespace liecheck
