#include "liecheck/selftest.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "liecheck/cases.hpp"
#include "liecheck/pencil.hpp"
#include "liecheck/spin.hpp"
#include "liecheck/usmall.hpp"

namespace liecheck {

bool SelftestResult::ok() const {
  for (const auto& it : items) {
    if (!it.passed) return false;
  }
  return true;
}

std::vector<std::string> SelftestResult::failures() const {
  std::vector<std::string> out;
  for (const auto& it : items) {
    if (!it.passed) out.push_back(it.name);
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string list_str(const std::vector<Rational>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(to_string(x));
  return "[" + join(parts) + "]";
}

std::vector<Rational> json_rationals(const Json& arr) {
  std::vector<Rational> out;
  for (const auto& x : arr) out.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
  return out;
}

std::string lists_str(const std::vector<std::vector<Rational>>& v) {
  std::vector<std::string> parts;
  for (const auto& x : v) parts.push_back(list_str(x));
  return join(parts, " ");
}

class Runner {
 public:
  Runner(const SelftestOptions& opts, const Json& ref) : opts_(opts), ref_(ref) {}

  const CaseData& get(const std::string& name, std::optional<int> n = std::nullopt) {
    CaseId id = make_case_id(name, n);
    auto key = id.str();
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, build_case(id)).first;
    return it->second;
  }

  void add(std::string name, std::string expected, std::string computed) {
    bool ok = expected == computed;
    add(std::move(name), std::move(expected), std::move(computed), ok);
  }

  void add(std::string name, std::string expected, std::string computed, bool ok) {
    SelftestItem item{std::move(name), std::move(expected), std::move(computed), ok};
    if (opts_.on_item) opts_.on_item(item);
    result_.items.push_back(std::move(item));
  }

  // Runs `body`, turning an exception into a failed item.
  template <typename F>
  void guarded(const std::string& name, const std::string& expected, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, expected, std::string("error: ") + e.what(), false);
    }
  }

  SelftestResult run();

 private:
  const SelftestOptions& opts_;
  const Json& ref_;
  std::map<std::string, CaseData> cache_;
  SelftestResult result_;
};

const std::vector<std::string> kFixed = {"EI", "EII", "EIV", "EV", "EVI", "EVIII", "EIX", "FI", "FII", "G", "SP4R"};
const std::vector<std::string> kClassical = {"SL2nR", "SL2n1R", "SLnH"};
const std::vector<int> kClassicalN = {2, 3, 4};

SelftestResult Runner::run() {
  // registry validation
  auto validate = [&](const std::string& name, std::optional<int> n) {
    std::string label = n ? name + "[n=" + std::to_string(*n) + "]" : name;
    guarded("validate-" + label, "ok", [&] {
      ValidationReport rep = validate_case(get(name, n));
      add("validate-" + label, "ok", rep.ok() ? "ok" : "failed: " + join(rep.failures()));
    });
  };
  for (const auto& name : kFixed) validate(name, std::nullopt);
  for (const auto& name : kClassical) {
    for (int n : kClassicalN) validate(name, n);
  }

  // u-small counts
  for (const auto& [name, value] : ref_.at("usmall_counts").items()) {
    if (name == "comment") continue;
    if (!opts_.long_run && (name == "EVIII" || name == "EIX")) continue;
    std::string expected = std::to_string(value.get<long long>());
    guarded("usmall-count-" + name, expected, [&] {
      EnumerateOptions eo;
      eo.jobs = opts_.jobs;
      add("usmall-count-" + name, expected, std::to_string(count_usmall(get(name), eo)));
    });
  }

  // printed inequality systems
  for (const auto& [name, rows] : ref_.at("usmall_systems").items()) {
    if (name == "comment") continue;
    std::vector<std::string> want, have;
    for (const auto& row : rows) want.push_back(list_str(json_rationals(row.at(0))) + "<=" + to_string(json_rationals(Json::array({row.at(1)}))[0]));
    std::sort(want.begin(), want.end());
    guarded("usmall-system-" + name, join(want, " "), [&] {
      for (const auto& row : usmall_system(get(name)).rows) have.push_back(list_str(row.coefs) + "<=" + to_string(row.bound));
      std::sort(have.begin(), have.end());
      add("usmall-system-" + name, join(want, " "), join(have, " "));
    });
  }

  // |W^1|
  for (const auto& [name, value] : ref_.at("w1_sizes").items()) {
    std::string expected = std::to_string(value.get<long long>());
    bool classical = std::find(kClassical.begin(), kClassical.end(), name) != kClassical.end();
    std::vector<std::optional<int>> ns;
    if (classical) {
      for (int n : kClassicalN) ns.emplace_back(n);
    } else {
      ns.emplace_back(std::nullopt);
    }
    for (auto n : ns) {
      std::string label = "w1-size-" + (n ? name + "[n=" + std::to_string(*n) + "]" : name);
      guarded(label, expected, [&] { add(label, expected, std::to_string(get(name, n).s())); });
    }
  }

  // beta and rho_n in k-fundamental coordinates
  for (const auto& [name, value] : ref_.at("beta").items()) {
    if (name == "comment") continue;
    std::string expected = list_str(json_rationals(value));
    guarded("beta-" + name, expected, [&] {
      const CaseData& c = get(name);
      add("beta-" + name, expected, list_str(c.k_system.dynkin_labels(c.beta())));
    });
  }
  for (const auto& [name, lists] : ref_.at("rho_n_fundamental").items()) {
    if (name == "comment") continue;
    std::vector<std::vector<Rational>> want;
    for (const auto& l : lists) want.push_back(json_rationals(l));
    guarded("rho-n-" + name, lists_str(want), [&] {
      const CaseData& c = get(name);
      std::vector<std::vector<Rational>> have;
      for (const auto& v : c.rho_n_variants) have.push_back(c.k_system.dynkin_labels(v));
      add("rho-n-" + name, lists_str(want), lists_str(have));
    });
  }
  for (const auto& [name, lists] : ref_.at("rho_n_ambient").items()) {
    if (name == "comment") continue;
    std::vector<std::vector<Rational>> want;
    for (const auto& l : lists) want.push_back(json_rationals(l));
    guarded("rho-n-" + name, lists_str(want), [&] {
      std::vector<std::vector<Rational>> have;
      for (const auto& v : get(name).rho_n_variants) have.emplace_back(v.begin(), v.end());
      add("rho-n-" + name, lists_str(want), lists_str(have));
    });
  }
  for (const auto& [name, spec] : ref_.at("classical_formulas").items()) {
    if (name == "comment") continue;
    for (int n : kClassicalN) {
      auto formula = [n](const Json& f) {
        std::vector<Rational> v;
        Rational c = parse_rational(f.at("C").get<std::string>());
        for (int i = 1; i <= n; ++i) v.push_back(n * f.at("N").get<long>() + i * f.at("I").get<long>() + c);
        if (f.value("last_sign", 1) < 0) v.back() = -v.back();
        return v;
      };
      std::string label = name + "[n=" + std::to_string(n) + "]";
      std::vector<std::vector<Rational>> want;
      for (const auto& f : spec.at("rho_n")) want.push_back(formula(f));
      guarded("rho-n-" + label, lists_str(want), [&] {
        std::vector<std::vector<Rational>> have;
        for (const auto& v : get(name, n).rho_n_variants) have.emplace_back(v.begin(), v.end());
        add("rho-n-" + label, lists_str(want), lists_str(have));
      });
      std::string want_c = list_str(formula(spec.at("rho_c")));
      guarded("rho-c-" + label, want_c, [&] {
        const auto& rc = get(name, n).rho_c;
        add("rho-c-" + label, want_c, list_str(std::vector<Rational>(rc.begin(), rc.end())));
      });
    }
  }

  // bound tables
  for (const auto& [name, table] : ref_.at("parabolic_bounds").items()) {
    if (name == "comment") continue;
    std::string expected = list_str(json_rationals(table));
    guarded("parabolic-bounds-" + name, expected,
            [&] { add("parabolic-bounds-" + name, expected, list_str(parabolic_bounds(get(name)))); });
  }
  for (const auto& [name, value] : ref_.at("naive_bounds").items()) {
    if (name == "comment") continue;
    std::string expected = std::to_string(value.get<long long>());
    guarded("naive-bound-" + name, expected, [&] { add("naive-bound-" + name, expected, to_string(naive_bound(get(name)))); });
  }

  // Sp(4,R) families
  const Json& fams = ref_.at("sp4r_families");
  long long m_lo = fams.at("m_range").at(0).get<long long>();
  long long m_hi = fams.at("m_range").at(1).get<long long>();
  for (Sp4rFamily f : {Sp4rFamily::Descending, Sp4rFamily::Ascending}) {
    std::string fname = sp4r_family_name(f);
    const Json& quad = fams.at(fname).at("quadratics");
    std::string expected = "printed quadratics for m=" + std::to_string(m_lo) + ".." + std::to_string(m_hi);
    guarded("sp4r-" + fname, expected, [&] {
      std::string bad;
      for (long long m = m_lo; m <= m_hi && bad.empty(); ++m) {
        Sp4rTriple t = sp4r_family(m, f);
        std::vector<Rational> want;
        for (const auto& q : quad) {
          want.emplace_back(static_cast<long>(q.at(0).get<long>() * m * m + q.at(1).get<long>() * m + q.at(2).get<long>()));
        }
        std::vector<Rational> have = {t.good, t.middle, t.bad};
        if (want != have) bad = "m=" + std::to_string(m) + ": " + list_str(have) + " vs printed " + list_str(want);
        else if (!(t.good < t.middle && t.middle < t.bad)) bad = "m=" + std::to_string(m) + ": ordering fails";
      }
      add("sp4r-" + fname, expected, bad.empty() ? expected : bad);
    });
  }

  // Theorem-C boxes
  std::vector<std::string> boxes = {"G", "FII", "EIV"};
  if (opts_.long_run) boxes.insert(boxes.end(), {"EI", "FI", "EII", "EV", "EVI"});
  for (const auto& name : boxes) {
    guarded("verify-" + name, "0 violations", [&] {
      const CaseData& c = get(name);
      VerifyOptions vo;
      vo.jobs = opts_.jobs;
      PencilReport rep = verify_box(c, default_box(c).box, vo);
      add("verify-" + name, "0 violations", std::to_string(rep.violation_count) + " violations");
    });
  }
  return std::move(result_);
}

}  // namespace

SelftestResult run_selftest(const SelftestOptions& opts) {
  const Json& ref = opts.reference ? *opts.reference : golden();
  Runner runner(opts, ref);
  return runner.run();
}

}  // namespace liecheck
