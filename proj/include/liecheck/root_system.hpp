#pragma once

#include <cstddef>
#include <vector>

#include "liecheck/rational_vector.hpp"

namespace liecheck {

// Positive roots of the reduced system spanned by `simple_roots`, ordered by height
// and then by simple-root coefficients. Throws ConstructionError when the input is
// not a crystallographic simple system.
std::vector<RationalVector> generate_positive_roots(const std::vector<RationalVector>& simple_roots);

// Vectors in the span of the simple roots whose coroot pairing with simple root j is
// delta_ij. Throws ConstructionError on a singular pairing matrix.
std::vector<RationalVector> fundamental_weights(const std::vector<RationalVector>& simple_roots,
                                                std::size_t ambient_dim);

class RootSystem {
 public:
  RootSystem() = default;

  // `extra_positive` adds non-reduced roots (2e_i for BC_n). The Weyl group is still
  // generated by the simple reflections, and positivity tests ignore the extras.
  static RootSystem from_simple_roots(std::vector<RationalVector> simple,
                                      std::vector<RationalVector> extra_positive = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return simple_.size(); }
  bool reduced() const { return extra_.empty(); }

  const std::vector<RationalVector>& simple_roots() const { return simple_; }
  const RationalVector& simple_root(std::size_t i) const { return simple_.at(i); }
  // Reduced positive roots followed by any extra roots.
  const std::vector<RationalVector>& positive_roots() const { return positive_; }
  const std::vector<RationalVector>& reduced_positive_roots() const { return reduced_positive_; }
  const std::vector<RationalVector>& fundamental_weights() const { return fundamental_; }

  // Integer matrix C[i][j] = <alpha_i, alpha_j^vee>.
  std::vector<std::vector<long>> cartan_matrix() const;

  bool is_root(const RationalVector& v) const;
  bool is_positive_root(const RationalVector& v) const;
  bool is_dominant(const RationalVector& v) const;
  bool is_strictly_dominant(const RationalVector& v) const;

  // Coroot pairings with each simple root.
  std::vector<Rational> dynkin_labels(const RationalVector& v) const;
  // Coefficients of v in the simple-root basis; v must lie in their span.
  std::vector<Rational> simple_coordinates(const RationalVector& v) const;
  RationalVector from_simple_coordinates(const std::vector<Rational>& coefs) const;
  RationalVector from_fundamental_coordinates(const std::vector<Rational>& coefs) const;

  // Half-sum of positive_roots().
  RationalVector rho() const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<RationalVector> simple_;
  std::vector<RationalVector> reduced_positive_;
  std::vector<RationalVector> extra_;
  std::vector<RationalVector> positive_;
  std::vector<RationalVector> fundamental_;
};

}  // namespace liecheck
