#include "liecheck/rational_vector.hpp"

#include <sstream>

#include "liecheck/errors.hpp"

namespace liecheck {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw UsageError("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw UsageError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_decimal(const Rational& q, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  mpz_class num = q.get_num() * scale;
  mpz_class den = q.get_den();
  // round half away from zero
  mpz_class twice = 2 * num + (num >= 0 ? den : -den);
  mpz_class scaled = twice / (2 * den);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits_str = scaled.get_str();
  if (static_cast<int>(digits_str.size()) <= digits) {
    digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
  }
  std::string out = digits_str.substr(0, digits_str.size() - digits);
  if (digits > 0) out += "." + digits_str.substr(digits_str.size() - digits);
  return (neg ? "-" : "") + out;
}

std::string sqrt_decimal(const Rational& q, int digits) {
  if (q < 0) throw UsageError("square root of negative value " + to_string(q));
  mpz_class scale = 1;
  for (int i = 0; i <= digits; ++i) scale *= 10;
  // floor(10^(digits+1) sqrt q), then round on the extra digit
  mpz_class radicand = q.get_num() * scale * scale / q.get_den();
  mpz_class root = sqrt(radicand);
  mpz_class rounded = (root + 5) / 10;
  Rational r(rounded, scale / 10);
  r.canonicalize();
  return to_decimal(r, digits);
}

RationalVector RationalVector::from_ints(const std::vector<long long>& values) {
  RationalVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = Rational(static_cast<long>(values[i]));
  return v;
}

bool RationalVector::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

static void check_same_dim(const RationalVector& a, const RationalVector& b) {
  if (a.dim() != b.dim()) {
    throw UsageError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
  }
}

RationalVector& RationalVector::operator+=(const RationalVector& other) {
  check_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& other) {
  check_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

RationalVector RationalVector::operator-() const {
  RationalVector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const RationalVector& a, const RationalVector& b) {
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const RationalVector& a, const RationalVector& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string RationalVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << to_string(coords_[i]);
  }
  os << ')';
  return os.str();
}

Rational inner(const RationalVector& u, const RationalVector& v) {
  check_same_dim(u, v);
  Rational s = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

Rational norm_sq(const RationalVector& v) { return inner(v, v); }

Rational coroot_pairing(const RationalVector& v, const RationalVector& alpha) {
  Rational aa = inner(alpha, alpha);
  if (aa == 0) throw UsageError("coroot pairing with the zero vector");
  return 2 * inner(v, alpha) / aa;
}

RationalVector reflect(const RationalVector& v, const RationalVector& alpha) {
  Rational c = coroot_pairing(v, alpha);
  RationalVector r(v);
  for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= c * alpha[i];
  return r;
}

}  // namespace liecheck
