#include <gtest/gtest.h>

#include <algorithm>

#include "liecheck/errors.hpp"
#include "liecheck/spin.hpp"
#include "liecheck/usmall.hpp"
#include "oracles.hpp"

using namespace liecheck;

namespace {

// Spin norm from the orbit oracle: the dominant point of each W(k) orbit.
Rational spin_by_orbits(const CaseData& c, const KType& mu) {
  RationalVector v = ktype_to_ambient(c, mu);
  std::optional<Rational> best;
  for (const auto& r : c.rho_n_variants) {
    for (const auto& x : oracle::weyl_orbit(v - r, c.k_system)) {
      if (!c.k_system.is_dominant(x)) continue;
      Rational n = norm_sq(x + c.rho_c);
      if (!best || n < *best) best = n;
    }
  }
  return *best;
}

std::vector<KType> usmall_list(const CaseData& c) {
  std::vector<KType> out;
  for_each_usmall(c, [&](const KType& mu) { out.push_back(mu); });
  return out;
}

}  // namespace

TEST(Spin, GExamples) {
  auto c = build_case(make_case_id("G"));
  EXPECT_EQ(spin_norm_sq(c, {0, 0}), 14);
  EXPECT_EQ(spin_norm_sq(c, {3, 1}), 2);
  auto arg = spin_argmin(c, {3, 1});
  EXPECT_NE(std::find(arg.begin(), arg.end(), 1u), arg.end());
  EXPECT_EQ(spin_argmin(c, {0, 0}), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Spin, SP4RExample) {
  auto c = build_case(make_case_id("SP4R"));
  EXPECT_EQ(spin_norm_sq(c, {-8, -10}), 117);
  EXPECT_THROW(spin_norm_sq(c, {-10, -8}), UsageError);
}

TEST(Spin, SP4RArgminBruteForce) {
  auto c = build_case(make_case_id("SP4R"));
  KType mu{3, -3};
  std::vector<Rational> values;
  for (std::size_t j = 0; j < 4; ++j) values.push_back(variant_norm_sq(c, ktype_to_ambient(c, mu), j));
  Rational m = *std::min_element(values.begin(), values.end());
  std::vector<std::size_t> expect;
  for (std::size_t j = 0; j < 4; ++j)
    if (values[j] == m) expect.push_back(j);
  EXPECT_EQ(spin_argmin(c, mu), expect);
  EXPECT_EQ(spin_norm_sq(c, mu), m);
}

TEST(Spin, RejectsNonDominant) {
  auto c = build_case(make_case_id("G"));
  EXPECT_THROW(spin_norm_sq(c, {-1, 0}), UsageError);
}

TEST(Spin, LowestWeights) {
  auto g = build_case(make_case_id("G"));
  EXPECT_EQ(spin_lowest_weights(g).size(), 3u);
  auto eiv = build_case(make_case_id("EIV"));
  auto lw = spin_lowest_weights(eiv);
  ASSERT_EQ(lw.size(), 1u);
  EXPECT_EQ(lw.front(), -eiv.rho_n_variants.front());
  for (const auto& d : list_cases()) {
    auto c = build_case(d.parametrized ? make_case_id(d.name, 3) : make_case_id(d.name));
    EXPECT_EQ(spin_lowest_weights(c).size(), c.s());
  }
}

TEST(Spin, MatchesOrbitOracle) {
  for (const char* name : {"G", "FII"}) {
    auto c = build_case(make_case_id(name));
    for (const auto& mu : usmall_list(c)) EXPECT_EQ(spin_norm_sq(c, mu), spin_by_orbits(c, mu)) << name;
  }
}

TEST(Spin, FloorAndCeilingOnUsmallSetProperty) {
  for (const char* name : {"G", "FII", "EIV", "SP4R", "FI", "EI"}) {
    auto c = build_case(make_case_id(name));
    Rational lo = norm_sq(c.rho_c), hi = norm_sq(c.rho);
    // for SP4R the rho_n^(j) are half-integral, so no k-type reaches the floor
    std::set<KType> variants;
    if (!c.k_has_center)
      for (const auto& v : c.rho_n_variants) variants.insert(ambient_to_ktype(c, v));
    for (const auto& mu : usmall_list(c)) {
      Rational s = spin_norm_sq(c, mu);
      EXPECT_LE(lo, s) << name;
      EXPECT_LE(s, hi) << name;
      // the floor is attained exactly on the spin-module highest weights
      EXPECT_EQ(s == lo, variants.count(mu) == 1) << name;
    }
    for (const auto& v : variants) EXPECT_EQ(spin_norm_sq(c, v), lo);
    EXPECT_EQ(spin_norm_sq(c, KType(c.ktype_dim(), 0)), hi);
  }
}

TEST(Spin, RealRSBoundProperty) {
  for (const char* name : {"G", "FII", "EIV", "FI", "EI"}) {
    auto c = build_case(make_case_id(name));
    Rational hi = norm_sq(c.rho);
    for (const auto& r : c.rho_n_variants) {
      for (const auto& x : oracle::weyl_orbit(r, c.k_system)) {
        auto d = to_dominant(x, c.k_system);
        EXPECT_LE(norm_sq(d.vector + c.rho_c), hi) << name;
      }
    }
  }
}

TEST(Spin, VariantOrderInvariance) {
  auto gen = oracle::rng();
  for (const char* name : {"FI", "EII"}) {
    auto c = build_case(make_case_id(name));
    CaseData shuffled = c;
    std::shuffle(shuffled.rho_n_variants.begin(), shuffled.rho_n_variants.end(), gen);
    std::uniform_int_distribution<long long> d(0, 9);
    for (int t = 0; t < 200; ++t) {
      KType mu(c.ktype_dim());
      for (auto& x : mu) x = d(gen);
      EXPECT_EQ(spin_norm_sq(c, mu), spin_norm_sq(shuffled, mu));
    }
  }
}
