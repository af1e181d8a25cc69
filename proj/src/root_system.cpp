#include "liecheck/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "liecheck/errors.hpp"
#include "linalg.hpp"

namespace liecheck {

namespace {

// E8 has 120 positive roots; anything far beyond that means a non-crystallographic input.
constexpr std::size_t kMaxPositiveRoots = 4096;

void check_simple_system(const std::vector<RationalVector>& simple) {
  if (simple.empty()) throw ConstructionError("empty simple system");
  std::size_t dim = simple[0].dim();
  for (const auto& a : simple) {
    if (a.dim() != dim) throw ConstructionError("simple roots of differing dimension");
    if (a.is_zero()) throw ConstructionError("zero simple root");
  }
  detail::Matrix rows;
  for (const auto& a : simple) rows.push_back(a.coords());
  if (detail::rank_of(rows) != simple.size()) {
    throw ConstructionError("simple roots are linearly dependent");
  }
  for (std::size_t i = 0; i < simple.size(); ++i) {
    for (std::size_t j = 0; j < simple.size(); ++j) {
      if (i == j) continue;
      Rational c = coroot_pairing(simple[i], simple[j]);
      if (c.get_den() != 1 || c > 0) {
        throw ConstructionError("simple roots " + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + " have non-crystallographic pairing " +
                                to_string(c));
      }
    }
  }
}

}  // namespace

std::vector<RationalVector> generate_positive_roots(const std::vector<RationalVector>& simple) {
  check_simple_system(simple);
  const std::size_t r = simple.size();
  std::vector<std::vector<long>> cartan(r, std::vector<long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      cartan[i][j] = coroot_pairing(simple[i], simple[j]).get_num().get_si();

  // Roots as simple-root coefficient vectors; string algorithm level by level.
  using Coefs = std::vector<long>;
  std::set<Coefs> known;
  std::vector<std::vector<Coefs>> levels(1);
  for (std::size_t i = 0; i < r; ++i) {
    Coefs e(r, 0);
    e[i] = 1;
    levels[0].push_back(e);
    known.insert(e);
  }
  while (!levels.back().empty()) {
    std::set<Coefs> next;
    for (const auto& b : levels.back()) {
      for (std::size_t i = 0; i < r; ++i) {
        // p: how far b - k alpha_i stays a root
        long p = 0;
        Coefs down = b;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        long pairing = 0;
        for (std::size_t j = 0; j < r; ++j) pairing += b[j] * cartan[j][i];
        long q = p - pairing;
        if (q > 0) {
          Coefs up = b;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    for (const auto& c : next) known.insert(c);
    if (known.size() > kMaxPositiveRoots) {
      throw ConstructionError("positive-root closure did not stabilize");
    }
    levels.emplace_back(next.begin(), next.end());
  }

  std::vector<RationalVector> out;
  for (const auto& level : levels) {
    for (const auto& c : level) {
      RationalVector v(simple[0].dim());
      for (std::size_t i = 0; i < r; ++i) {
        if (c[i] != 0) v += Rational(c[i]) * simple[i];
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<RationalVector> fundamental_weights(const std::vector<RationalVector>& simple,
                                                std::size_t ambient_dim) {
  for (const auto& a : simple) {
    if (a.dim() != ambient_dim) throw UsageError("simple root dimension differs from ambient");
  }
  const std::size_t r = simple.size();
  detail::Matrix c(r, std::vector<Rational>(r));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) c[j][k] = coroot_pairing(simple[j], simple[k]);
  auto inv = detail::inverse_of(c);
  if (!inv) throw ConstructionError("singular pairing matrix");
  // varpi_i = sum_j (C^{-1})_{ij} alpha_j
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < r; ++i) {
    RationalVector w(ambient_dim);
    for (std::size_t j = 0; j < r; ++j) {
      if ((*inv)[i][j] != 0) w += (*inv)[i][j] * simple[j];
    }
    out.push_back(std::move(w));
  }
  return out;
}

RootSystem RootSystem::from_simple_roots(std::vector<RationalVector> simple,
                                         std::vector<RationalVector> extra_positive) {
  RootSystem rs;
  rs.reduced_positive_ = generate_positive_roots(simple);
  rs.ambient_dim_ = simple[0].dim();
  rs.simple_ = std::move(simple);
  rs.extra_ = std::move(extra_positive);
  for (const auto& e : rs.extra_) {
    if (e.dim() != rs.ambient_dim_) throw ConstructionError("extra root of wrong dimension");
  }
  rs.positive_ = rs.reduced_positive_;
  rs.positive_.insert(rs.positive_.end(), rs.extra_.begin(), rs.extra_.end());
  rs.fundamental_ = liecheck::fundamental_weights(rs.simple_, rs.ambient_dim_);
  return rs;
}

std::vector<std::vector<long>> RootSystem::cartan_matrix() const {
  std::vector<std::vector<long>> c(rank(), std::vector<long>(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      c[i][j] = coroot_pairing(simple_[i], simple_[j]).get_num().get_si();
  return c;
}

bool RootSystem::is_positive_root(const RationalVector& v) const {
  return std::find(positive_.begin(), positive_.end(), v) != positive_.end();
}

bool RootSystem::is_root(const RationalVector& v) const {
  return is_positive_root(v) || is_positive_root(-v);
}

bool RootSystem::is_dominant(const RationalVector& v) const {
  for (const auto& a : simple_) {
    if (inner(v, a) < 0) return false;
  }
  return true;
}

bool RootSystem::is_strictly_dominant(const RationalVector& v) const {
  for (const auto& a : simple_) {
    if (inner(v, a) <= 0) return false;
  }
  return true;
}

std::vector<Rational> RootSystem::dynkin_labels(const RationalVector& v) const {
  std::vector<Rational> out;
  out.reserve(rank());
  for (const auto& a : simple_) out.push_back(coroot_pairing(v, a));
  return out;
}

std::vector<Rational> RootSystem::simple_coordinates(const RationalVector& v) const {
  // alpha_j pairs to delta_ij against the fundamental coweights 2 varpi_i / <alpha_i, alpha_i>
  std::vector<Rational> out;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.push_back(2 * inner(v, fundamental_[i]) / inner(simple_[i], simple_[i]));
  }
  if (from_simple_coordinates(out) != v) {
    throw UsageError("vector " + v.str() + " is not in the span of the simple roots");
  }
  return out;
}

RationalVector RootSystem::from_simple_coordinates(const std::vector<Rational>& coefs) const {
  if (coefs.size() != rank()) throw UsageError("expected " + std::to_string(rank()) + " coefficients");
  RationalVector v(ambient_dim_);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (coefs[i] != 0) v += coefs[i] * simple_[i];
  }
  return v;
}

RationalVector RootSystem::from_fundamental_coordinates(const std::vector<Rational>& coefs) const {
  if (coefs.size() != rank()) throw UsageError("expected " + std::to_string(rank()) + " coordinates");
  RationalVector v(ambient_dim_);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (coefs[i] != 0) v += coefs[i] * fundamental_[i];
  }
  return v;
}

RationalVector RootSystem::rho() const {
  RationalVector s(ambient_dim_);
  for (const auto& a : positive_) s += a;
  s *= Rational(1, 2);
  return s;
}

}  // namespace liecheck
