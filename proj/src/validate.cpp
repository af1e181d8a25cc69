#include <algorithm>
#include <set>
#include <sstream>

#include "liecheck/cases.hpp"
#include "liecheck/golden.hpp"

namespace liecheck {

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

namespace {

class Checker {
 public:
  explicit Checker(ValidationReport& r) : report_(r) {}
  void check(const std::string& name, bool passed, const std::string& detail = "") {
    report_.checks.push_back({name, passed, detail});
  }

 private:
  ValidationReport& report_;
};

std::string join_labels(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ']';
  return os.str();
}

std::vector<Rational> json_rationals(const Json& arr) {
  std::vector<Rational> out;
  for (const auto& x : arr) {
    if (x.is_string()) {
      out.push_back(parse_rational(x.get<std::string>()));
    } else {
      out.push_back(Rational(x.get<long>()));
    }
  }
  return out;
}

// Value of an affine per-coordinate formula n*N + i*I + C (1-based i).
RationalVector formula_vector(const Json& f, int n) {
  RationalVector v(static_cast<std::size_t>(n));
  Rational cst = parse_rational(f["C"].get<std::string>());
  for (int i = 1; i <= n; ++i) {
    v[static_cast<std::size_t>(i - 1)] =
        Rational(f["N"].get<long>() * n + f["I"].get<long>() * i) + cst;
  }
  if (f.contains("last_sign")) v[static_cast<std::size_t>(n - 1)] *= f["last_sign"].get<long>();
  return v;
}

// Weyl element given as a product of reflections in roots (simple-root coordinates).
RationalVector act_by_root_reflections(const Json& word, const RationalVector& v,
                                       const RootSystem& g) {
  RationalVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = reflect(out, g.from_simple_coordinates(json_rationals(*it)));
  }
  return out;
}

}  // namespace

ValidationReport validate_case(const CaseData& c) {
  ValidationReport report;
  report.case_name = c.id.str();
  Checker ck(report);
  const Json& gold = golden();
  const std::string fam = family_name(c.id.family);
  const auto& g = c.g_restricted;
  const auto& k = c.k_system;

  // structural invariants
  ck.check("variant-count", c.rho_n_variants.size() == c.w1.size() && !c.w1.empty());
  ck.check("identity-first", !c.w1.empty() && c.w1.front().empty());
  ck.check("rho-split", !c.rho_n_variants.empty() && c.rho == c.rho_c + c.rho_n_variants.front());
  {
    bool ok = true;
    for (std::size_t j = 0; j < c.w1.size() && j < c.rho_n_variants.size(); ++j) {
      ok = ok && apply_word(c.w1[j], c.rho, g) == c.rho_c + c.rho_n_variants[j];
    }
    ck.check("variant-images", ok);
  }
  {
    bool ok = true;
    for (const auto& v : c.rho_n_variants) ok = ok && norm_sq(v + c.rho_c) == norm_sq(c.rho);
    ck.check("variant-norms", ok);
  }
  {
    // rho_n^(j) is the half-sum of the roots of +-p that are positive on w^(j) rho
    bool ok = true;
    for (std::size_t j = 0; j < c.w1.size() && j < c.rho_n_variants.size(); ++j) {
      RationalVector image = apply_word(c.w1[j], c.rho, g);
      RationalVector sum(g.ambient_dim());
      for (const auto& a : c.p_positive) sum += inner(a, image) > 0 ? a : -a;
      ok = ok && sum * Rational(1, 2) == c.rho_n_variants[j];
    }
    ck.check("variant-half-sums", ok);
  }
  {
    bool ok = true;
    for (const auto& gamma : k.simple_roots()) ok = ok && g.is_root(gamma);
    ck.check("gamma-roots", ok);
  }
  {
    bool ok = true;
    for (const auto& b : c.betas) {
      bool in_p = std::find(c.p_positive.begin(), c.p_positive.end(), b) != c.p_positive.end() ||
                  std::find(c.p_positive.begin(), c.p_positive.end(), -b) != c.p_positive.end();
      ok = ok && in_p;
    }
    ck.check("beta-in-p", ok && !c.betas.empty());
  }
  {
    bool ok = !c.betas.empty();
    for (const auto& b : c.betas) ok = ok && k.is_dominant(b);
    ck.check("beta-dominant", ok);
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < c.k_fund_weights.size(); ++i)
      for (std::size_t j = 0; j < k.rank(); ++j)
        ok = ok && coroot_pairing(c.k_fund_weights[i], k.simple_root(j)) == (i == j ? 1 : 0);
    for (std::size_t i = 0; i < c.g_fund_weights.size(); ++i)
      for (std::size_t j = 0; j < g.rank(); ++j)
        ok = ok && coroot_pairing(c.g_fund_weights[i], g.simple_root(j)) == (i == j ? 1 : 0);
    ck.check("fundamental-weights", ok);
  }

  // reference data
  const Json& sizes = gold["w1_sizes"];
  if (sizes.contains(fam)) {
    ck.check("w1-size", c.w1.size() == sizes[fam].get<std::size_t>(),
             "computed " + std::to_string(c.w1.size()) + ", expected " + sizes[fam].dump());
  }
  if (gold["w1_elements"].contains(fam)) {
    const Json& words = gold["w1_elements"][fam];
    std::set<RationalVector> expected, computed;
    for (const auto& w : words) expected.insert(act_by_root_reflections(w, c.rho, g));
    for (const auto& w : c.w1) computed.insert(apply_word(w, c.rho, g));
    ck.check("w1-elements", expected == computed && words.size() == c.w1.size());
  }
  if (gold["beta"].contains(fam)) {
    auto expect = json_rationals(gold["beta"][fam]);
    auto got = k.dynkin_labels(c.beta());
    ck.check("beta-printed", got == expect, "computed " + join_labels(got));
  }
  if (gold["beta_ambient"].contains(fam)) {
    const Json& b = gold["beta_ambient"][fam];
    bool ok = true;
    if (c.k_has_center) {
      ok = b.size() == c.betas.size();
      for (std::size_t i = 0; ok && i < b.size(); ++i)
        ok = c.betas[i] == RationalVector(json_rationals(b[i]));
    } else {
      auto lead = json_rationals(b);
      RationalVector expect(g.ambient_dim());
      for (std::size_t i = 0; i < lead.size(); ++i) expect[i] = lead[i];
      ok = c.betas.size() == 1 && c.beta() == expect;
    }
    ck.check("beta-printed", ok, "computed " + c.beta().str());
  }
  if (gold["rho_n_fundamental"].contains(fam)) {
    const Json& list = gold["rho_n_fundamental"][fam];
    bool ok = list.size() == c.rho_n_variants.size();
    for (std::size_t j = 0; ok && j < list.size(); ++j)
      ok = k.dynkin_labels(c.rho_n_variants[j]) == json_rationals(list[j]);
    ck.check("rho-n-printed", ok);
  }
  if (gold["rho_n_ambient"].contains(fam)) {
    const Json& list = gold["rho_n_ambient"][fam];
    bool ok = list.size() == c.rho_n_variants.size();
    for (std::size_t j = 0; ok && j < list.size(); ++j)
      ok = c.rho_n_variants[j] == RationalVector(json_rationals(list[j]));
    ck.check("rho-n-printed", ok);
  }
  if (gold["classical_formulas"].contains(fam) && c.id.n) {
    const Json& f = gold["classical_formulas"][fam];
    int n = *c.id.n;
    bool ok = f["rho_n"].size() == c.rho_n_variants.size();
    for (std::size_t j = 0; ok && j < f["rho_n"].size(); ++j)
      ok = c.rho_n_variants[j] == formula_vector(f["rho_n"][j], n);
    ck.check("rho-n-printed", ok);
    ck.check("rho-c-printed", c.rho_c == formula_vector(f["rho_c"], n), c.rho_c.str());
  }
  if (c.id.family == Family::G) {
    const Json& gw = gold["G_weights"];
    bool ok = true;
    for (std::size_t i = 0; i < 2; ++i) {
      ok = ok && c.k_fund_weights[i] == RationalVector(json_rationals(gw["varpi"][i]));
      ok = ok && g.simple_coordinates(c.g_fund_weights[i]) ==
                     json_rationals(gw["xi_simple_coords"][i]);
    }
    ck.check("fundamental-weights-printed", ok);
  }
  return report;
}

}  // namespace liecheck
