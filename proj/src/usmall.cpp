#include "liecheck/usmall.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "liecheck/errors.hpp"
#include "liecheck/golden.hpp"

namespace liecheck {

bool InequalitySystem::satisfied(const KType& mu) const {
  for (const auto& r : rows) {
    Rational s = 0;
    for (std::size_t i = 0; i < mu.size() && i < r.coefs.size(); ++i) {
      if (r.coefs[i] != 0 && mu[i] != 0) s += r.coefs[i] * static_cast<long>(mu[i]);
    }
    if (s > r.bound) return false;
  }
  return true;
}

std::string InequalitySystem::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  for (const auto& r : rows) {
    bool first = true;
    for (std::size_t i = 0; i < r.coefs.size(); ++i) {
      const Rational& c = r.coefs[i];
      if (c == 0) continue;
      Rational a = abs(c);
      if (!first) os << (c < 0 ? " - " : " + ");
      if (first && c < 0) os << '-';
      if (a != 1) os << to_string(a);
      os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
      first = false;
    }
    if (first) os << '0';
    os << " <= " << to_string(r.bound) << "\n";
  }
  return os.str();
}

InequalitySystem lemma_system(const CaseData& c) {
  InequalitySystem sys;
  const auto& g = c.g_restricted;
  for (std::size_t j = 0; j < c.s(); ++j) {
    for (const auto& xi : c.g_fund_weights) {
      RationalVector wxi = apply_word(c.w1[j], xi, g);
      InequalityRow row;
      if (c.k_has_center) {
        row.coefs = wxi.coords();
      } else {
        for (const auto& varpi : c.k_fund_weights) row.coefs.push_back(inner(varpi, wxi));
      }
      row.bound = 2 * inner(c.rho, xi) - 2 * inner(c.rho_c, wxi);
      sys.rows.push_back(std::move(row));
    }
  }
  return sys;
}

namespace {

mpz_class gcd_of(const std::vector<mpz_class>& v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

InequalityRow normalize(const InequalityRow& r) {
  mpz_class den = 1;
  for (const auto& c : r.coefs) den = lcm(den, c.get_den());
  std::vector<mpz_class> ints;
  for (const auto& c : r.coefs) ints.push_back(mpz_class(c * den));
  mpz_class g = gcd_of(ints);
  if (g == 0) return r;
  InequalityRow out;
  for (const auto& x : ints) out.coefs.push_back(Rational(x / g));
  Rational b = r.bound * den / g;
  // integer points only: floor the bound
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  out.bound = Rational(fl);
  return out;
}

// r implies s on the nonnegative orthant: c_s * b_r <= c_r * b_s componentwise.
bool implies(const InequalityRow& r, const InequalityRow& s) {
  if (r.bound <= 0 || s.bound < 0) return false;
  for (std::size_t i = 0; i < r.coefs.size(); ++i) {
    if (r.coefs[i] < 0 || s.coefs[i] < 0) return false;
    if (s.coefs[i] * r.bound > r.coefs[i] * s.bound) return false;
  }
  return true;
}

InequalitySystem printed_system(const Json& rows) {
  InequalitySystem sys;
  for (const auto& r : rows) {
    InequalityRow row;
    for (const auto& x : r[0]) row.coefs.push_back(Rational(x.get<long>()));
    row.bound = Rational(r[1].get<long>());
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

}  // namespace

InequalitySystem usmall_system(const CaseData& c) {
  if (c.k_has_center) return printed_system(golden()["usmall_systems"]["SP4R"]);
  std::vector<InequalityRow> rows;
  for (const auto& r : lemma_system(c).rows) {
    InequalityRow n = normalize(r);
    bool zero = std::all_of(n.coefs.begin(), n.coefs.end(), [](const Rational& x) { return x == 0; });
    if (zero && n.bound >= 0) continue;
    if (std::find(rows.begin(), rows.end(), n) == rows.end()) rows.push_back(std::move(n));
  }
  InequalitySystem sys;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    bool redundant = false;
    for (std::size_t r = 0; r < rows.size() && !redundant; ++r) {
      redundant = r != s && implies(rows[r], rows[s]);
    }
    if (!redundant) sys.rows.push_back(rows[s]);
  }
  return sys;
}

bool is_usmall(const CaseData& c, const KType& mu) { return UsmallFilter(c)(mu); }

UsmallFilter::UsmallFilter(const CaseData& c) : c_(c), sys_(usmall_system(c)) {}

bool UsmallFilter::operator()(const KType& mu) const {
  if (mu.size() != c_.ktype_dim() || !is_dominant_ktype(c_, mu)) {
    throw UsageError("is_usmall needs a dominant k-type");
  }
  return sys_.satisfied(mu);
}

namespace {

struct IntSystem {
  std::vector<std::vector<long long>> coefs;  // [row][coord]
  std::vector<long long> bounds;
};

IntSystem to_int(const InequalitySystem& sys) {
  IntSystem out;
  for (const auto& r : sys.rows) {
    std::vector<long long> cs;
    for (const auto& c : r.coefs) {
      if (c.get_den() != 1) throw ConstructionError("non-integral u-small row");
      cs.push_back(c.get_num().get_si());
    }
    out.coefs.push_back(std::move(cs));
    if (r.bound.get_den() != 1) throw ConstructionError("non-integral u-small bound");
    out.bounds.push_back(r.bound.get_num().get_si());
  }
  return out;
}

class Dfs {
 public:
  Dfs(const IntSystem& sys, std::vector<std::size_t> order)
      : sys_(sys), order_(std::move(order)), slack_(sys.bounds), mu_(order_.size(), 0) {
    for (const auto& row : sys_.coefs) {
      for (long long x : row) {
        if (x < 0) throw ConstructionError("u-small row with a negative coefficient");
      }
    }
  }

  // Counts completions from depth d with the current slack.
  std::uint64_t run(std::size_t d, const std::function<void(const KType&)>* visit) {
    if (d == order_.size()) {
      if (visit) (*visit)(mu_);
      return 1;
    }
    std::size_t coord = order_[d];
    std::uint64_t total = 0;
    std::vector<long long> saved = slack_;
    for (long long v = 0;; ++v) {
      if (v > 0) {
        bool ok = true;
        for (std::size_t r = 0; r < slack_.size(); ++r) {
          slack_[r] -= sys_.coefs[r][coord];
          ok = ok && slack_[r] >= 0;
        }
        if (!ok) break;
      } else if (!feasible()) {
        break;
      }
      mu_[coord] = v;
      total += run(d + 1, visit);
      if (unbounded(coord)) throw ConstructionError("u-small region is unbounded");
    }
    slack_ = std::move(saved);
    mu_[coord] = 0;
    return total;
  }

  void fix_first(long long v) {
    std::size_t coord = order_[0];
    for (std::size_t r = 0; r < slack_.size(); ++r) slack_[r] -= v * sys_.coefs[r][coord];
    mu_[coord] = v;
  }

  bool feasible() const {
    return std::all_of(slack_.begin(), slack_.end(), [](long long s) { return s >= 0; });
  }

  long long first_max() const {
    std::size_t coord = order_[0];
    long long best = -1;
    for (std::size_t r = 0; r < slack_.size(); ++r) {
      long long c = sys_.coefs[r][coord];
      if (c > 0) {
        long long m = slack_[r] / c;
        best = best < 0 ? m : std::min(best, m);
      }
    }
    if (best < 0) throw ConstructionError("u-small region is unbounded");
    return best;
  }

 private:
  bool unbounded(std::size_t coord) const {
    for (const auto& row : sys_.coefs) {
      if (row[coord] > 0) return false;
    }
    return true;
  }

  const IntSystem& sys_;
  std::vector<std::size_t> order_;
  std::vector<long long> slack_;
  KType mu_;
};

std::vector<std::size_t> scan_order(std::size_t n, bool reverse) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = reverse ? n - 1 - i : i;
  return order;
}

// SP4R: integer pairs p >= q inside the bundled rows.
std::uint64_t scan_center_case(const CaseData& c, const std::function<void(const KType&)>* visit) {
  InequalitySystem sys = usmall_system(c);
  // p <= P from the row (1,0); q >= -Q from the row (0,-1)
  long long pmax = 0, qmin = 0;
  bool have_p = false, have_q = false;
  for (const auto& r : sys.rows) {
    if (r.coefs == std::vector<Rational>{1, 0}) {
      pmax = r.bound.get_num().get_si();
      have_p = true;
    }
    if (r.coefs == std::vector<Rational>{0, -1}) {
      qmin = -r.bound.get_num().get_si();
      have_q = true;
    }
  }
  if (!have_p || !have_q) throw ConstructionError("cannot read a scan box off the SP4R rows");
  std::uint64_t n = 0;
  for (long long p = qmin; p <= pmax; ++p) {
    for (long long q = qmin; q <= p; ++q) {
      KType mu{p, q};
      if (!sys.satisfied(mu)) continue;
      ++n;
      if (visit) (*visit)(mu);
    }
  }
  return n;
}

}  // namespace

std::uint64_t count_usmall(const CaseData& c, const EnumerateOptions& opts) {
  if (c.k_has_center) return scan_center_case(c, nullptr);
  IntSystem sys = to_int(usmall_system(c));
  auto order = scan_order(c.ktype_dim(), opts.reverse);
  long long top = Dfs(sys, order).first_max();
  unsigned jobs = std::max(1u, opts.jobs);
  std::atomic<long long> next{0};
  std::vector<std::uint64_t> partial(jobs, 0);
  auto worker = [&](unsigned id) {
    for (long long v = next++; v <= top; v = next++) {
      Dfs dfs(sys, order);
      dfs.fix_first(v);
      if (dfs.feasible()) partial[id] += dfs.run(1, nullptr);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

void for_each_usmall(const CaseData& c, const std::function<void(const KType&)>& visit) {
  if (c.k_has_center) {
    scan_center_case(c, &visit);
    return;
  }
  IntSystem sys = to_int(usmall_system(c));
  Dfs(sys, scan_order(c.ktype_dim(), false)).run(0, &visit);
}

}  // namespace liecheck
