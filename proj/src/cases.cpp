#include "liecheck/cases.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "liecheck/errors.hpp"

namespace liecheck {

namespace {

const std::vector<std::pair<Family, const char*>> kNames = {
    {Family::SL2nR, "SL2nR"}, {Family::SL2n1R, "SL2n1R"}, {Family::SLnH, "SLnH"},
    {Family::EI, "EI"},       {Family::EII, "EII"},       {Family::EIV, "EIV"},
    {Family::EV, "EV"},       {Family::EVI, "EVI"},       {Family::EVIII, "EVIII"},
    {Family::EIX, "EIX"},     {Family::FI, "FI"},         {Family::FII, "FII"},
    {Family::G, "G"},         {Family::SP4R, "SP4R"},
};

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

RationalVector unit(std::size_t dim, std::size_t i, long scale = 1) {
  RationalVector v(dim);
  v[i] = scale;
  return v;
}

// E8 in Bourbaki coordinates; E6 and E7 are the first 6 and 7 simple roots.
std::vector<RationalVector> e_simple(std::size_t rank) {
  std::vector<RationalVector> s;
  RationalVector a1(8);
  for (std::size_t i = 0; i < 8; ++i) a1[i] = q(i == 0 || i == 7 ? 1 : -1, 2);
  s.push_back(a1);
  s.push_back(unit(8, 0) + unit(8, 1));
  for (std::size_t i = 1; i <= 6; ++i) s.push_back(unit(8, i) - unit(8, i - 1));
  s.resize(rank);
  return s;
}

// alpha_1, alpha_2 short; alpha_3, alpha_4 long.
std::vector<RationalVector> f4_simple() {
  return {RationalVector{q(1, 2), q(-1, 2), q(-1, 2), q(-1, 2)}, RationalVector{0, 0, 0, 1},
          RationalVector{0, 0, 1, -1}, RationalVector{0, 1, -1, 0}};
}

// f4_simple() under (x,y,z,w) -> (x+y, x-y, z+w, z-w), which doubles every inner
// product: short roots +-e_i+-e_j, long roots +-2e_i and (+-1,+-1,+-1,+-1). The EI
// norms (naive bound, term II) are stated in this normalization.
std::vector<RationalVector> f4_simple_doubled() {
  std::vector<RationalVector> out;
  for (const auto& v : f4_simple()) out.push_back(RationalVector{v[0] + v[1], v[0] - v[1], v[2] + v[3], v[2] - v[3]});
  return out;
}

std::vector<RationalVector> g2_simple() {
  return {RationalVector{1, -1, 0}, RationalVector{-2, 1, 1}};
}

enum class PRule { Complement, ShortPositive, ShortAndLongOutsideK, Listed };

struct Recipe {
  std::vector<RationalVector> g_simple;
  std::vector<RationalVector> g_extra;
  // k simple roots, either explicit or as simple-root coefficients of g
  std::vector<RationalVector> k_simple;
  std::vector<std::vector<long>> k_coefs;
  PRule p_rule = PRule::Complement;
  std::vector<RationalVector> p_listed;
  bool k_has_center = false;
};

std::vector<std::vector<long>> unit_coefs(std::size_t rank, const std::vector<int>& one_based) {
  std::vector<std::vector<long>> out;
  for (int i : one_based) {
    std::vector<long> c(rank, 0);
    c[static_cast<std::size_t>(i - 1)] = 1;
    out.push_back(c);
  }
  return out;
}

Recipe exceptional_recipe(Family f) {
  Recipe r;
  switch (f) {
    case Family::G:
      r.g_simple = g2_simple();
      r.k_coefs = {{1, 0}, {3, 2}};
      break;
    case Family::FI:
      r.g_simple = f4_simple();
      r.k_coefs = unit_coefs(4, {1, 2, 3});
      r.k_coefs.push_back({2, 4, 3, 2});
      break;
    case Family::FII:
      // k = B4; numbering chosen so the listed spin-module weights come out as
      // [2,0,0,0], [1,0,0,1], [0,0,1,0]
      r.g_simple = f4_simple();
      r.k_coefs = {{2, 2, 1, 0}};
      for (auto& c : unit_coefs(4, {4, 3, 2})) r.k_coefs.push_back(c);
      break;
    case Family::EIV:
      r.g_simple = f4_simple();
      r.k_coefs = unit_coefs(4, {1, 2, 3, 4});
      r.p_rule = PRule::ShortPositive;
      break;
    case Family::EI:
      r.g_simple = f4_simple_doubled();
      r.k_coefs = {{0, 1, 1, 1}};
      for (auto& c : unit_coefs(4, {1, 2, 3})) r.k_coefs.push_back(c);
      r.p_rule = PRule::ShortAndLongOutsideK;
      break;
    case Family::EII:
      r.g_simple = e_simple(6);
      r.k_coefs = unit_coefs(6, {6, 5, 4, 3, 1});
      r.k_coefs.push_back({1, 2, 2, 3, 2, 1});
      break;
    case Family::EV:
      r.g_simple = e_simple(7);
      r.k_coefs = unit_coefs(7, {1, 3, 4, 5, 6, 7});
      r.k_coefs.push_back({1, 2, 2, 3, 2, 1, 0});
      break;
    case Family::EVI:
      r.g_simple = e_simple(7);
      r.k_coefs = unit_coefs(7, {7, 6, 5, 4, 2, 3});
      r.k_coefs.push_back({2, 2, 3, 4, 3, 2, 1});
      break;
    case Family::EVIII:
      r.g_simple = e_simple(8);
      r.k_coefs = {{2, 2, 3, 4, 3, 2, 1, 0}};
      for (auto& c : unit_coefs(8, {8, 7, 6, 5, 4, 2, 3})) r.k_coefs.push_back(c);
      break;
    case Family::EIX:
      r.g_simple = e_simple(8);
      r.k_coefs = unit_coefs(8, {1, 2, 3, 4, 5, 6, 7});
      r.k_coefs.push_back({2, 3, 4, 6, 5, 4, 3, 2});
      break;
    default:
      throw UsageError("not an exceptional family");
  }
  return r;
}

// e_i - e_{i+1}, i < n
std::vector<RationalVector> a_chain(int n) {
  std::vector<RationalVector> s;
  for (int i = 0; i + 1 < n; ++i) {
    s.push_back(unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i)) -
                unit(static_cast<std::size_t>(n), static_cast<std::size_t>(i + 1)));
  }
  return s;
}

std::vector<RationalVector> pm_pairs(int n) {
  std::vector<RationalVector> out;
  auto d = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      out.push_back(unit(d, i) - unit(d, j));
      out.push_back(unit(d, i) + unit(d, j));
    }
  }
  return out;
}

Recipe classical_recipe(Family f, int n) {
  Recipe r;
  auto d = static_cast<std::size_t>(n);
  r.p_rule = PRule::Listed;
  switch (f) {
    case Family::SL2nR: {
      // g = C_n, k = D_n
      r.g_simple = a_chain(n);
      r.g_simple.push_back(unit(d, d - 1, 2));
      r.k_simple = a_chain(n);
      r.k_simple.push_back(unit(d, d - 2) + unit(d, d - 1));
      r.p_listed = pm_pairs(n);
      for (std::size_t i = 0; i < d; ++i) r.p_listed.push_back(unit(d, i, 2));
      break;
    }
    case Family::SL2n1R: {
      // g = BC_n (Weyl group of B_n plus the roots 2e_i), k = B_n
      r.g_simple = a_chain(n);
      r.g_simple.push_back(unit(d, d - 1));
      for (std::size_t i = 0; i < d; ++i) r.g_extra.push_back(unit(d, i, 2));
      r.k_simple = r.g_simple;
      r.p_listed = pm_pairs(n);
      for (std::size_t i = 0; i < d; ++i) r.p_listed.push_back(unit(d, i));
      for (std::size_t i = 0; i < d; ++i) r.p_listed.push_back(unit(d, i, 2));
      break;
    }
    case Family::SLnH: {
      // g = k = C_n
      r.g_simple = a_chain(n);
      r.g_simple.push_back(unit(d, d - 1, 2));
      r.k_simple = r.g_simple;
      r.p_listed = pm_pairs(n);
      break;
    }
    default:
      throw UsageError("not a classical family");
  }
  return r;
}

Recipe sp4r_recipe() {
  Recipe r;
  r.g_simple = {RationalVector{1, -1}, RationalVector{0, 2}};
  r.k_simple = {RationalVector{1, -1}};
  r.p_rule = PRule::Listed;
  r.p_listed = {RationalVector{2, 0}, RationalVector{0, 2}, RationalVector{1, 1}};
  r.k_has_center = true;
  return r;
}

RationalVector half_sum(const std::vector<RationalVector>& roots, std::size_t dim) {
  RationalVector s(dim);
  for (const auto& a : roots) s += a;
  s *= q(1, 2);
  return s;
}

// Weights lambda of +-p that are k-dominant and have no lambda + gamma in +-p.
std::vector<RationalVector> highest_weights_of_p(const RootSystem& k,
                                                 const std::vector<RationalVector>& p_pos) {
  std::vector<RationalVector> weights = p_pos;
  for (const auto& a : p_pos) weights.push_back(-a);
  auto contains = [&](const RationalVector& v) {
    return std::find(weights.begin(), weights.end(), v) != weights.end();
  };
  std::vector<RationalVector> out;
  for (const auto& w : weights) {
    if (!k.is_dominant(w)) continue;
    bool top = true;
    for (const auto& g : k.simple_roots()) {
      if (contains(w + g)) {
        top = false;
        break;
      }
    }
    if (top && std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return b < a; });
  return out;
}

std::vector<std::string> coordinate_names(Family f, std::size_t rank) {
  if (f == Family::SP4R) return {"p", "q"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rank; ++i) {
    if (is_classical(f)) {
      out.push_back("m" + std::to_string(i + 1));
    } else {
      out.push_back(std::string(1, static_cast<char>('a' + i)));
    }
  }
  return out;
}

void require(bool ok, const std::string& invariant, const CaseId& id) {
  if (!ok) throw ConstructionError(id.str() + ": invariant '" + invariant + "' failed");
}

CaseData assemble(const CaseId& id, Recipe r) {
  CaseData c;
  c.id = id;
  c.k_has_center = r.k_has_center;
  c.g_restricted = RootSystem::from_simple_roots(r.g_simple, r.g_extra);
  const auto& g = c.g_restricted;
  if (!r.k_coefs.empty()) {
    for (const auto& coefs : r.k_coefs) {
      std::vector<Rational> qc(coefs.begin(), coefs.end());
      r.k_simple.push_back(g.from_simple_coordinates(qc));
    }
  }
  for (const auto& gamma : r.k_simple) {
    require(g.is_positive_root(gamma), "gamma-is-positive-root", id);
  }
  c.k_system = RootSystem::from_simple_roots(r.k_simple);
  const auto& k = c.k_system;
  for (const auto& a : k.positive_roots()) {
    require(g.is_positive_root(a), "k-positive-in-g-positive", id);
  }

  switch (r.p_rule) {
    case PRule::Complement:
      for (const auto& a : g.positive_roots()) {
        if (!k.is_positive_root(a)) c.p_positive.push_back(a);
      }
      break;
    case PRule::ShortPositive:
    case PRule::ShortAndLongOutsideK: {
      Rational shortest = norm_sq(g.positive_roots().front());
      for (const auto& a : g.positive_roots()) shortest = std::min(shortest, norm_sq(a));
      for (const auto& a : g.positive_roots()) {
        bool is_short = norm_sq(a) == shortest;
        if (is_short || (r.p_rule == PRule::ShortAndLongOutsideK && !k.is_positive_root(a))) {
          c.p_positive.push_back(a);
        }
      }
      break;
    }
    case PRule::Listed:
      c.p_positive = r.p_listed;
      break;
  }

  const std::size_t dim = g.ambient_dim();
  c.rho_c = k.rho();
  // rho = rho_c + half-sum of the listed noncompact roots (which may repeat compact ones)
  c.rho = c.rho_c + half_sum(c.p_positive, dim);
  c.betas = highest_weights_of_p(k, c.p_positive);
  require(!c.betas.empty(), "beta-exists", id);
  require(c.k_has_center || c.betas.size() == 1, "beta-unique", id);
  c.w1 = minimal_coset_reps(g, k);
  for (const auto& w : c.w1) c.rho_n_variants.push_back(apply_word(w, c.rho, g) - c.rho_c);
  c.k_fund_weights = k.fundamental_weights();
  c.g_fund_weights = g.fundamental_weights();
  c.coord_names = coordinate_names(id.family, c.k_has_center ? 2 : k.rank());

  require(c.rho == c.rho_c + c.rho_n_variants.front(), "rho-split", id);
  for (const auto& v : c.rho_n_variants) {
    require(norm_sq(v + c.rho_c) == norm_sq(c.rho), "variant-norm", id);
    require(k.is_dominant(v), "variant-dominant", id);
  }
  return c;
}

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> v;
    for (const auto& [f, name] : kNames) v.push_back(f);
    return v;
  }();
  return fams;
}

std::string family_name(Family f) {
  for (const auto& [fam, name] : kNames) {
    if (fam == f) return name;
  }
  return "?";
}

bool is_classical(Family f) {
  return f == Family::SL2nR || f == Family::SL2n1R || f == Family::SLnH;
}

std::string CaseId::str() const {
  std::string s = family_name(family);
  if (n) s += "[n=" + std::to_string(*n) + "]";
  return s;
}

CaseId make_case_id(std::string_view name, std::optional<int> n) {
  for (const auto& [f, fname] : kNames) {
    if (name != fname) continue;
    CaseId id{f, n};
    if (is_classical(f)) {
      if (!n) throw UsageError(std::string(fname) + " requires --n");
      int min_n = f == Family::SL2n1R ? 1 : 2;
      if (*n < min_n) {
        throw UsageError(std::string(fname) + " requires n >= " + std::to_string(min_n));
      }
    } else if (n) {
      throw UsageError(std::string(fname) + " does not take --n");
    }
    return id;
  }
  throw UnknownCaseError("unknown case '" + std::string(name) + "'");
}

CaseData build_case(const CaseId& id) {
  if (is_classical(id.family)) {
    CaseId checked = make_case_id(family_name(id.family), id.n);
    return assemble(checked, classical_recipe(id.family, *id.n));
  }
  if (id.n) throw UsageError(family_name(id.family) + " does not take n");
  if (id.family == Family::SP4R) return assemble(id, sp4r_recipe());
  return assemble(id, exceptional_recipe(id.family));
}

RationalVector ktype_to_ambient(const CaseData& c, const KType& mu) {
  if (mu.size() != c.ktype_dim()) {
    throw UsageError("k-type for " + c.id.str() + " needs " + std::to_string(c.ktype_dim()) +
                     " coordinates, got " + std::to_string(mu.size()));
  }
  if (c.k_has_center) return RationalVector::from_ints(mu);
  RationalVector v(c.g_restricted.ambient_dim());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] != 0) v += Rational(static_cast<long>(mu[i])) * c.k_fund_weights[i];
  }
  return v;
}

KType ambient_to_ktype(const CaseData& c, const RationalVector& v) {
  KType out;
  if (c.k_has_center) {
    for (const auto& x : v) {
      if (x.get_den() != 1) throw UsageError("weight " + v.str() + " is not integral");
      out.push_back(x.get_num().get_si());
    }
    return out;
  }
  for (const auto& x : c.k_system.dynkin_labels(v)) {
    if (x.get_den() != 1) throw UsageError("weight " + v.str() + " is not integral for k");
    out.push_back(x.get_num().get_si());
  }
  if (ktype_to_ambient(c, out) != v) {
    throw UsageError("weight " + v.str() + " is not in the span of the k roots");
  }
  return out;
}

bool is_dominant_ktype(const CaseData& c, const KType& mu) {
  if (mu.size() != c.ktype_dim()) return false;
  if (c.k_has_center) return mu[0] >= mu[1];
  return std::all_of(mu.begin(), mu.end(), [](long long a) { return a >= 0; });
}

KType beta_ktype(const CaseData& c, std::size_t which) {
  return ambient_to_ktype(c, c.betas.at(which));
}

std::vector<CaseDescriptor> list_cases() {
  std::vector<CaseDescriptor> out;
  for (Family f : all_families()) {
    CaseDescriptor d{f, family_name(f), is_classical(f), std::nullopt, std::nullopt, false};
    if (is_classical(f)) {
      d.min_n = f == Family::SL2n1R ? 1 : 2;
    } else {
      d.k_has_center = f == Family::SP4R;
      if (f == Family::SP4R) {
        d.rank = 2;
      } else {
        d.rank = static_cast<int>(exceptional_recipe(f).k_coefs.size());
      }
    }
    out.push_back(d);
  }
  return out;
}

std::string case_sheet(const CaseData& c) {
  std::ostringstream os;
  auto labels = [&](const RationalVector& v) {
    if (c.k_has_center) return v.str();
    std::ostringstream l;
    auto d = c.k_system.dynkin_labels(v);
    l << '[';
    for (std::size_t i = 0; i < d.size(); ++i) l << (i ? "," : "") << to_string(d[i]);
    l << ']';
    return l.str();
  };
  os << "case: " << c.id.str() << "\n";
  os << "k has center: " << (c.k_has_center ? "yes" : "no") << "\n";
  os << "g simple roots:\n";
  for (std::size_t i = 0; i < c.g_restricted.rank(); ++i)
    os << "  alpha" << i + 1 << " = " << c.g_restricted.simple_root(i).str() << "\n";
  os << "g positive roots: " << c.g_restricted.positive_roots().size()
     << (c.g_restricted.reduced() ? "" : " (non-reduced)") << "\n";
  os << "k simple roots:\n";
  for (std::size_t i = 0; i < c.k_system.rank(); ++i)
    os << "  gamma" << i + 1 << " = " << c.k_system.simple_root(i).str() << "\n";
  os << "k positive roots: " << c.k_system.positive_roots().size() << "\n";
  os << "p positive roots: " << c.p_positive.size() << "\n";
  for (std::size_t i = 0; i < c.betas.size(); ++i) {
    os << "beta" << (c.betas.size() > 1 ? std::to_string(i + 1) : "") << " = "
       << c.betas[i].str() << " " << labels(c.betas[i]) << "\n";
  }
  os << "rho = " << c.rho.str() << "  |rho|^2 = " << to_string(norm_sq(c.rho)) << "\n";
  os << "rho_c = " << c.rho_c.str() << "  |rho_c|^2 = " << to_string(norm_sq(c.rho_c)) << "\n";
  os << "|W1| = " << c.w1.size() << "\n";
  for (std::size_t j = 0; j < c.w1.size(); ++j) {
    os << "  j=" << j << "  w = " << c.w1[j].str() << "  rho_n = " << c.rho_n_variants[j].str()
       << " " << labels(c.rho_n_variants[j]) << "\n";
  }
  return os.str();
}

}  // namespace liecheck
