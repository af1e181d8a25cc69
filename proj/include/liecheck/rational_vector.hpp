#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace liecheck {

using Rational = mpq_class;

// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);
// Decimal rendering with the given number of fractional digits (display only).
std::string to_decimal(const Rational& q, int digits);
// Square root of a nonnegative rational, rounded to `digits` fractional places.
std::string sqrt_decimal(const Rational& q, int digits);

class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim, Rational(0)) {}
  RationalVector(std::initializer_list<Rational> init) : coords_(init) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static RationalVector from_ints(const std::vector<long long>& values);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  RationalVector& operator+=(const RationalVector& other);
  RationalVector& operator-=(const RationalVector& other);
  RationalVector& operator*=(const Rational& s);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
  friend RationalVector operator*(const Rational& s, RationalVector v) { return v *= s; }
  friend RationalVector operator*(RationalVector v, const Rational& s) { return v *= s; }
  RationalVector operator-() const;

  friend bool operator==(const RationalVector& a, const RationalVector& b);
  // Lexicographic; dimensions compared first.
  friend std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b);

  // "(1/2, -1/2, 0)"
  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

// Euclidean dot product. Throws UsageError on dimension mismatch.
Rational inner(const RationalVector& u, const RationalVector& v);
Rational norm_sq(const RationalVector& v);
// 2<v,alpha>/<alpha,alpha>. Throws UsageError if alpha is zero.
Rational coroot_pairing(const RationalVector& v, const RationalVector& alpha);
RationalVector reflect(const RationalVector& v, const RationalVector& alpha);

}  // namespace liecheck
