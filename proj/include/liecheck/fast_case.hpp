#pragma once

#include <cstdint>
#include <vector>

#include "liecheck/cases.hpp"

namespace liecheck {

// Integer engine for semisimple k. Weights are Dynkin-label vectors in the
// k-fundamental-weight basis, and every squared norm is multiplied by scale().
class FastCase {
 public:
  explicit FastCase(const CaseData& c);

  int rank() const { return rank_; }
  std::size_t variants() const { return rho_n_.size(); }
  // D with D * <varpi_i, varpi_j> and D * |gamma_i|^2 integral.
  std::int64_t scale() const { return scale_; }
  Rational unscale(std::int64_t x) const {
    Rational q(static_cast<long>(x), static_cast<long>(scale_));
    q.canonicalize();
    return q;
  }

  const std::vector<std::int64_t>& gram() const { return gram_; }  // rank x rank, row-major
  std::int64_t gram_at(int i, int j) const { return gram_[static_cast<std::size_t>(i * rank_ + j)]; }
  const std::vector<int>& rho_n(std::size_t j) const { return rho_n_[j]; }
  const std::vector<int>& beta() const { return beta_; }

  // D * |x + rho_c|^2 for labels x.
  std::int64_t shifted_norm(const int* x) const;
  // 2 D <rho_c, {x} - x>; x is overwritten with its dominant representative.
  std::int64_t dominate(int* x) const;
  // D * |{mu - rho_n^(j)} + rho_c|^2
  std::int64_t variant_value(const int* mu, std::size_t j) const;
  // D * spin norm^2 of mu (labels may be any integers; no dominance required).
  std::int64_t spin_norm(const int* mu) const;

  // Integer u-small rows (nonnegative coefficients).
  const std::vector<std::vector<std::int64_t>>& usmall_coefs() const { return usmall_coefs_; }
  const std::vector<std::int64_t>& usmall_bounds() const { return usmall_bounds_; }
  bool usmall(const int* mu) const;

 private:
  int rank_ = 0;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> gram_;
  std::vector<int> cartan_;  // cartan_[i*r+j] = <gamma_i, gamma_j^vee>
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::int64_t> root_weight_;  // D * |gamma_i|^2
  std::vector<std::vector<int>> rho_n_;
  std::vector<int> beta_;
  std::vector<std::vector<std::int64_t>> usmall_coefs_;
  std::vector<std::int64_t> usmall_bounds_;
};

}  // namespace liecheck
