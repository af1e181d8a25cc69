#include "liecheck/pencil.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "liecheck/checkpoint.hpp"
#include "liecheck/errors.hpp"
#include "liecheck/fast_case.hpp"
#include "liecheck/golden.hpp"
#include "liecheck/spin.hpp"
#include "liecheck/usmall.hpp"

namespace liecheck {

// ---------------------------------------------------------------- boxes

std::uint64_t Box::size() const {
  std::uint64_t n = 1;
  for (const auto& [lo, hi] : ranges) {
    if (hi < lo) return 0;
    auto len = static_cast<std::uint64_t>(hi - lo + 1);
    if (n > std::numeric_limits<std::uint64_t>::max() / len) return std::numeric_limits<std::uint64_t>::max();
    n *= len;
  }
  return n;
}

bool Box::contains(const KType& mu) const {
  if (mu.size() != ranges.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < ranges[i].first || mu[i] > ranges[i].second) return false;
  }
  return true;
}

std::string Box::str(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    if (i > 0) out += ',';
    out += (i < names.size() ? names[i] : "x" + std::to_string(i + 1)) + ":" +
           std::to_string(ranges[i].first) + ".." + std::to_string(ranges[i].second);
  }
  return out;
}

namespace {

long long parse_ll(std::string_view s, std::string_view context) {
  std::string t(s);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (t.empty() || pos != t.size()) throw UsageError("bad integer '" + t + "' in box entry '" + std::string(context) + "'");
  return v;
}

}  // namespace

Box parse_box(const CaseData& c, std::string_view text) {
  const auto& names = c.coord_names;
  Box box;
  box.ranges.assign(names.size(), {0, -1});
  std::vector<bool> seen(names.size(), false);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    std::size_t colon = item.find(':');
    std::size_t dots = item.find("..");
    if (colon == std::string_view::npos || dots == std::string_view::npos || dots < colon) {
      throw UsageError("box entry '" + std::string(item) + "' is not of the form name:lo..hi");
    }
    std::string name(item.substr(0, colon));
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw UsageError("unknown coordinate '" + name + "' for " + c.id.str());
    auto idx = static_cast<std::size_t>(it - names.begin());
    if (seen[idx]) throw UsageError("coordinate '" + name + "' given twice");
    seen[idx] = true;
    long long lo = parse_ll(item.substr(colon + 1, dots - colon - 1), item);
    long long hi = parse_ll(item.substr(dots + 2), item);
    if (lo > hi) throw UsageError("empty range for coordinate '" + name + "'");
    if (!c.k_has_center && lo < 0) throw UsageError("coordinate '" + name + "' must be nonnegative");
    box.ranges[idx] = {lo, hi};
    start = end + 1;
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!seen[i]) throw UsageError("box does not give a range for coordinate '" + names[i] + "'");
  }
  return box;
}

DefaultBox default_box(const CaseData& c) {
  if (c.id.family == Family::SP4R) throw UsageError("SP4R has no verification box");
  DefaultBox out;
  if (is_classical(c.id.family)) {
    long long n = *c.id.n;
    out.box.ranges.assign(c.ktype_dim(), {0, 2 * n + 2});
    out.sanity_only = true;
    return out;
  }
  for (const auto& r : golden().at("default_boxes").at(family_name(c.id.family))) {
    out.box.ranges.emplace_back(r.at(0).get<long long>(), r.at(1).get<long long>());
  }
  return out;
}

// ---------------------------------------------------------------- single steps

namespace {

KType shifted(const CaseData& c, const KType& mu, long long n, std::size_t which_beta) {
  if (mu.size() != c.ktype_dim()) {
    throw UsageError("k-type for " + c.id.str() + " needs " + std::to_string(c.ktype_dim()) + " coordinates");
  }
  KType b = beta_ktype(c, which_beta);
  KType out = mu;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += n * b[i];
  return out;
}

std::string ktype_str(const KType& mu) {
  std::string s = "[";
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s + "]";
}

void require_step(const CaseData& c, const KType& mu, std::size_t which_beta) {
  if (which_beta >= c.betas.size()) throw UsageError("beta index out of range");
  if (!is_dominant_ktype(c, mu)) throw PreconditionError("mu = " + ktype_str(mu) + " is not dominant");
  KType lower = shifted(c, mu, -1, which_beta);
  if (!is_dominant_ktype(c, lower)) {
    throw PreconditionError("mu - beta = " + ktype_str(lower) + " is not dominant");
  }
}

}  // namespace

KType pencil_member(const CaseData& c, const KType& mu, long long n, std::size_t which_beta) {
  if (which_beta >= c.betas.size()) throw UsageError("beta index out of range");
  KType out = shifted(c, mu, n, which_beta);
  if (c.k_has_center) {
    if (out[0] < out[1]) {
      throw RangeError("pencil member " + ktype_str(out) + " violates " + c.coord_names[0] + " >= " +
                       c.coord_names[1]);
    }
    return out;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0) {
      throw RangeError("pencil member " + ktype_str(out) + " has negative coordinate " + c.coord_names[i]);
    }
  }
  return out;
}

Rational step_margin_sq(const CaseData& c, const KType& mu, std::size_t which_beta) {
  require_step(c, mu, which_beta);
  return spin_norm_sq(c, mu) - spin_norm_sq(c, shifted(c, mu, -1, which_beta));
}

StepDecomposition decompose_step(const CaseData& c, const KType& mu, std::size_t j, std::size_t which_beta) {
  if (j >= c.s()) {
    throw UsageError("variant index " + std::to_string(j) + " out of range (s = " + std::to_string(c.s()) + ")");
  }
  require_step(c, mu, which_beta);
  RationalVector x = ktype_to_ambient(c, mu) - c.rho_n_variants[j];
  RationalVector y = x - c.betas[which_beta];
  StepDecomposition out;
  out.delta = to_dominant(x, c.k_system).vector - to_dominant(y, c.k_system).vector;
  out.term_i = 2 * inner(c.rho_c, out.delta);
  out.term_ii = norm_sq(x) - norm_sq(y);
  return out;
}

Rational parabolic_bound(const CaseData& c, int k) {
  int rank = static_cast<int>(c.k_system.rank());
  if (k < 1 || k > rank) {
    throw UsageError("parabolic index " + std::to_string(k) + " outside 1.." + std::to_string(rank));
  }
  WeylWord w = parabolic_longest(c.k_system, k - 1);
  return 2 * inner(c.rho_c, apply_word(w, c.beta(), c.k_system));
}

std::vector<Rational> parabolic_bounds(const CaseData& c) {
  std::vector<Rational> out;
  for (int k = 1; k <= static_cast<int>(c.k_system.rank()); ++k) out.push_back(parabolic_bound(c, k));
  return out;
}

Rational naive_bound(const CaseData& c) { return -2 * inner(c.rho_c, c.beta()); }

// ---------------------------------------------------------------- totals

void ScanTotals::merge(ScanTotals other) {
  scanned += other.scanned;
  filtered += other.filtered;
  violation_count += other.violation_count;
  if (other.min_margin_sq && (!min_margin_sq || *other.min_margin_sq < *min_margin_sq)) {
    min_margin_sq = other.min_margin_sq;
  }
  if (!other.violations.empty()) {
    violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
    std::sort(violations.begin(), violations.end());
    violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
    if (violations.size() > kMaxStoredViolations) violations.resize(kMaxStoredViolations);
  }
}

// ---------------------------------------------------------------- box scans

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Coordinates ordered for scanning: the first `unit_dims` are fixed per work unit,
// the last one is walked incrementally.
struct Layout {
  std::vector<int> order;
  int unit_dims = 0;
  std::size_t units = 1;
};

Layout make_layout(const Box& box) {
  int r = static_cast<int>(box.dim());
  std::vector<int> rest(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) rest[static_cast<std::size_t>(i)] = i;
  auto width = [&](int i) { return box.ranges[static_cast<std::size_t>(i)].second - box.ranges[static_cast<std::size_t>(i)].first; };
  auto take_widest = [&]() {
    auto it = std::max_element(rest.begin(), rest.end(), [&](int a, int b) { return width(a) < width(b); });
    int v = *it;
    rest.erase(it);
    return v;
  };
  Layout l;
  l.unit_dims = std::min(2, r - 1);
  for (int u = 0; u < l.unit_dims; ++u) l.order.push_back(take_widest());
  int inner = rest.empty() ? -1 : take_widest();
  l.order.insert(l.order.end(), rest.begin(), rest.end());
  if (inner >= 0) l.order.push_back(inner);
  for (int u = 0; u < l.unit_dims; ++u) l.units *= static_cast<std::size_t>(width(l.order[static_cast<std::size_t>(u)]) + 1);
  return l;
}

// Fixes the unit coordinates of `mu` for unit index `unit` (mixed radix, first coordinate slowest).
template <typename T>
void place_unit(const Box& box, const Layout& l, std::size_t unit, T* mu) {
  for (int u = l.unit_dims - 1; u >= 0; --u) {
    auto k = static_cast<std::size_t>(l.order[static_cast<std::size_t>(u)]);
    auto len = static_cast<std::size_t>(box.ranges[k].second - box.ranges[k].first + 1);
    mu[k] = static_cast<T>(box.ranges[k].first + static_cast<long long>(unit % len));
    unit /= len;
  }
}

// Visits every assignment of the middle coordinates (between the unit block and the
// innermost coordinate) in odometer order.
template <typename T, typename F>
void for_each_middle(const Box& box, const Layout& l, T* mu, F&& line) {
  std::size_t first = static_cast<std::size_t>(l.unit_dims);
  std::size_t last = l.order.size() - 1;  // innermost
  for (std::size_t p = first; p < last; ++p) {
    auto k = static_cast<std::size_t>(l.order[p]);
    mu[k] = static_cast<T>(box.ranges[k].first);
  }
  while (true) {
    line();
    bool advanced = false;
    for (std::size_t p = last; p > first && !advanced;) {
      --p;
      auto k = static_cast<std::size_t>(l.order[p]);
      if (mu[k] < box.ranges[k].second) {
        ++mu[k];
        advanced = true;
      } else {
        mu[k] = static_cast<T>(box.ranges[k].first);
      }
    }
    if (!advanced) return;
  }
}

void record_violation(ScanTotals& t, KType mu) {
  ++t.violation_count;
  t.violations.push_back(std::move(mu));
  if (t.violations.size() > 2 * ScanTotals::kMaxStoredViolations) {
    std::sort(t.violations.begin(), t.violations.end());
    t.violations.resize(ScanTotals::kMaxStoredViolations);
  }
}

void finish_unit(ScanTotals& t) {
  std::sort(t.violations.begin(), t.violations.end());
  if (t.violations.size() > ScanTotals::kMaxStoredViolations) t.violations.resize(ScanTotals::kMaxStoredViolations);
}

// Integer scan for semisimple k. Per line along the innermost coordinate the
// quadratic parts of every variant norm are updated incrementally; the lower
// bounds L_j = D |x_j + rho_c|^2 (x_j before dominance) decide which variants
// need the exact reflection walk.
class FastScanner {
 public:
  FastScanner(const FastCase& fc, bool shortcut) : fc_(fc), shortcut_(shortcut) {
    r_ = fc.rank();
    s_ = fc.variants();
    const auto& beta = fc.beta();
    std::int64_t bgb = 0;
    for (int i = 0; i < r_; ++i) {
      std::int64_t gb = 0;
      for (int k = 0; k < r_; ++k) gb += fc.gram_at(i, k) * beta[static_cast<std::size_t>(k)];
      gbeta_.push_back(gb);
      bgb += gb * beta[static_cast<std::size_t>(i)];
    }
    for (std::size_t j = 0; j < s_; ++j) {
      const auto& rn = fc.rho_n(j);
      std::int64_t kj = 0, bu = 0;
      for (int i = 0; i < r_; ++i) {
        std::int64_t ui = 0;
        for (int k = 0; k < r_; ++k) ui += fc.gram_at(i, k) * (1 - rn[static_cast<std::size_t>(k)]);
        u_.push_back(ui);
        kj += ui * (1 - rn[static_cast<std::size_t>(i)]);
        bu += ui * beta[static_cast<std::size_t>(i)];
      }
      k_.push_back(kj);
      p_.push_back(bgb - 2 * bu);
    }
    for (const auto& row : fc.usmall_coefs()) {
      for (auto x : row) {
        if (x < 0) throw ConstructionError("u-small system has a negative coefficient");
      }
    }
  }

  ScanTotals run(const Box& box, const Layout& l, std::size_t unit) {
    ScanTotals t;
    int mu[16] = {};
    place_unit(box, l, unit, mu);
    std::int64_t mstar = kInf;
    std::vector<std::int64_t> lv(s_);
    const auto& rows = fc_.usmall_coefs();
    const auto& bounds = fc_.usmall_bounds();
    std::vector<std::int64_t> rowsum(rows.size());
    const auto& beta = fc_.beta();
    const int k = l.order.back();
    const auto ku = static_cast<std::size_t>(k);
    const std::int64_t gkk = fc_.gram_at(k, k);
    std::size_t hint_b = 0, hint_m = 0;
    // per-step change of each variant bound along the innermost coordinate, minus dm
    std::vector<std::int64_t> du(s_);
    for (std::size_t j = 0; j < s_; ++j) du[j] = 2 * u_[j * static_cast<std::size_t>(r_) + ku];

    for_each_middle(box, l, mu, [&]() {
      long long lo = box.ranges[ku].first, hi = box.ranges[ku].second;
      t.scanned += static_cast<std::uint64_t>(hi - lo + 1);
      for (int i = 0; i < r_; ++i) {
        if (i != k && mu[i] < beta[static_cast<std::size_t>(i)]) return;
      }
      long long start = std::max<long long>(lo, beta[ku]);
      if (start > hi) return;
      mu[k] = static_cast<int>(start);

      std::int64_t m = 0, gk = 0, bmu = 0;
      for (int i = 0; i < r_; ++i) {
        std::int64_t gi = 0;
        for (int q = 0; q < r_; ++q) gi += fc_.gram_at(i, q) * mu[q];
        m += gi * mu[i];
        if (i == k) gk = gi;
        bmu += gbeta_[static_cast<std::size_t>(i)] * mu[i];
      }
      for (std::size_t j = 0; j < s_; ++j) {
        std::int64_t dot = 0;
        const std::int64_t* uj = &u_[j * static_cast<std::size_t>(r_)];
        for (int i = 0; i < r_; ++i) dot += uj[i] * mu[i];
        lv[j] = m + 2 * dot + k_[j];
      }
      for (std::size_t q = 0; q < rows.size(); ++q) {
        std::int64_t sum = 0;
        for (int i = 0; i < r_; ++i) sum += rows[q][static_cast<std::size_t>(i)] * mu[i];
        rowsum[q] = sum;
      }
      bool small = true;
      for (long long a = start;; ++a) {
        if (small) {
          for (std::size_t q = 0; q < rows.size() && small; ++q) small = rowsum[q] <= bounds[q];
        }
        if (!small) {
          ++t.filtered;
          std::int64_t margin = 0;
          if (evaluate(mu, lv, -2 * bmu, mstar, hint_b, hint_m, margin)) {
            mstar = std::min(mstar, margin);
            if (margin <= 0) record_violation(t, KType(mu, mu + r_));
          }
        }
        if (a == hi) break;
        ++mu[k];
        std::int64_t dm = 2 * gk + gkk;
        m += dm;
        gk += gkk;
        bmu += gbeta_[ku];
        for (std::size_t j = 0; j < s_; ++j) lv[j] += dm + du[j];
        for (std::size_t q = 0; q < rows.size(); ++q) rowsum[q] += rows[q][ku];
      }
    });
    if (mstar < kInf) t.min_margin_sq = fc_.unscale(mstar);
    finish_unit(t);
    return t;
  }

 private:
  std::int64_t exact(const int* mu, bool minus_beta, std::size_t j, std::int64_t bound) const {
    int x[16];
    const auto& rn = fc_.rho_n(j);
    const auto& beta = fc_.beta();
    for (int i = 0; i < r_; ++i) {
      x[i] = mu[i] - rn[static_cast<std::size_t>(i)] - (minus_beta ? beta[static_cast<std::size_t>(i)] : 0);
    }
    return bound + fc_.dominate(x);
  }

  // Returns false when the margin is known to be at least max(mstar, 1) without
  // finishing the exact computation; otherwise stores the exact margin.
  // The lower bound for mu - beta is lv[j] + shift + p_[j].
  bool evaluate(const int* mu, const std::vector<std::int64_t>& lv, std::int64_t shift, std::int64_t mstar,
                std::size_t& hint_b, std::size_t& hint_m, std::int64_t& margin) const {
    const std::int64_t* l = lv.data();
    const std::int64_t* p = p_.data();
    if (!shortcut_) {
      std::int64_t nb = kInf, nm = kInf;
      for (std::size_t j = 0; j < s_; ++j) {
        nb = std::min(nb, exact(mu, true, j, l[j] + shift + p[j]));
        nm = std::min(nm, exact(mu, false, j, l[j]));
      }
      margin = nm - nb;
      return true;
    }
    // N(mu - beta): lower bounds prune variants that cannot beat the best so far
    std::int64_t nb = exact(mu, true, hint_b, l[hint_b] + shift + p[hint_b]);
    std::int64_t thr = nb - shift;
    for (std::size_t j = 0; j < s_; ++j) {
      if (l[j] + p[j] < thr && j != hint_b) {
        std::int64_t v = exact(mu, true, j, l[j] + shift + p[j]);
        if (v < nb) {
          nb = v;
          thr = nb - shift;
          hint_b = j;
        }
      }
    }
    // N(mu) only matters below nb + max(mstar, 1)
    std::int64_t cut = nb + std::max<std::int64_t>(mstar, 1);
    std::int64_t best = cut;
    if (l[hint_m] < best) best = std::min(best, exact(mu, false, hint_m, l[hint_m]));
    for (std::size_t j = 0; j < s_; ++j) {
      if (l[j] < best && j != hint_m) {
        std::int64_t v = exact(mu, false, j, l[j]);
        if (v < best) {
          best = v;
          hint_m = j;
        }
      }
    }
    if (best >= cut) return false;
    margin = best - nb;
    return true;
  }

  const FastCase& fc_;
  bool shortcut_;
  int r_ = 0;
  std::size_t s_ = 0;
  std::vector<std::int64_t> gbeta_;
  std::vector<std::int64_t> u_;  // s x r, u_j = G (rho_c - rho_n^(j)) in labels
  std::vector<std::int64_t> k_;  // |rho_c - rho_n^(j)|^2
  std::vector<std::int64_t> p_;  // |beta|^2 - 2 <beta, u_j>
};

// Rational scan; used for k with center and as a reference engine.
ScanTotals exact_unit(const CaseData& c, const Box& box, const Layout& l, std::size_t unit, std::size_t which_beta) {
  ScanTotals t;
  KType mu(box.dim());
  place_unit(box, l, unit, mu.data());
  KType b = beta_ktype(c, which_beta);
  UsmallFilter usmall(c);
  auto k = static_cast<std::size_t>(l.order.back());
  for_each_middle(box, l, mu.data(), [&]() {
    for (long long a = box.ranges[k].first; a <= box.ranges[k].second; ++a) {
      mu[k] = a;
      ++t.scanned;
      if (!is_dominant_ktype(c, mu)) continue;
      KType lower = mu;
      for (std::size_t i = 0; i < lower.size(); ++i) lower[i] -= b[i];
      if (!is_dominant_ktype(c, lower) || usmall(mu)) continue;
      ++t.filtered;
      Rational margin = spin_norm_sq(c, mu) - spin_norm_sq(c, lower);
      if (!t.min_margin_sq || margin < *t.min_margin_sq) t.min_margin_sq = margin;
      if (margin <= 0) record_violation(t, mu);
    }
  });
  finish_unit(t);
  return t;
}

}  // namespace

PencilReport verify_box(const CaseData& c, const Box& box, const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  if (box.dim() != c.ktype_dim()) throw UsageError("box dimension does not match " + c.id.str());
  for (const auto& [lo, hi] : box.ranges) {
    if (lo > hi) throw UsageError("box has an empty range");
    if (!c.k_has_center && lo < 0) throw UsageError("box has a negative lower bound");
  }
  if (opts.which_beta >= c.betas.size()) throw UsageError("beta index out of range");

  PencilReport rep;
  rep.case_name = c.id.str();
  rep.box = box;
  rep.box_text = box.str(c.coord_names);

  Layout layout = make_layout(box);
  bool fast = opts.engine == Engine::Auto && !c.k_has_center && c.k_system.rank() <= 16;
  std::optional<FastCase> fc;
  if (fast) fc.emplace(c);

  CheckpointState state;
  state.case_name = rep.case_name;
  state.box_text = rep.box_text;
  state.shortcut = opts.shortcut;
  state.which_beta = opts.which_beta;
  state.done.assign(layout.units, false);
  if (!opts.checkpoint.empty()) {
    if (auto loaded = load_checkpoint(opts.checkpoint)) {
      bool same = loaded->case_name == state.case_name && loaded->box_text == state.box_text &&
                  loaded->shortcut == state.shortcut && loaded->which_beta == state.which_beta &&
                  loaded->done.size() == layout.units;
      if (!same) throw UsageError("checkpoint " + opts.checkpoint.string() + " belongs to a different run");
      state = std::move(*loaded);
      rep.resumed = true;
    }
  }

  std::vector<std::size_t> todo;
  for (std::size_t u = 0; u < layout.units; ++u) {
    if (!state.done[u]) todo.push_back(u);
  }
  std::size_t units_done = layout.units - todo.size();

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::uint64_t since_save = 0;
  std::exception_ptr failure;

  auto worker = [&]() {
    try {
      std::optional<FastScanner> scanner;
      if (fast) scanner.emplace(*fc, opts.shortcut);
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= todo.size()) return;
        std::size_t unit = todo[i];
        ScanTotals part = fast ? scanner->run(box, layout, unit) : exact_unit(c, box, layout, unit, opts.which_beta);
        std::lock_guard lock(mu);
        since_save += part.scanned;
        state.totals.merge(std::move(part));
        state.done[unit] = true;
        ++units_done;
        if (!opts.checkpoint.empty() && since_save >= opts.checkpoint_every && units_done < layout.units) {
          save_checkpoint(opts.checkpoint, state);
          since_save = 0;
        }
        if (opts.progress) opts.progress(units_done, layout.units, state.totals.scanned);
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      next.store(todo.size());
    }
  };

  unsigned jobs = std::max(1u, opts.jobs);
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, todo.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (!opts.checkpoint.empty()) std::filesystem::remove(opts.checkpoint);

  rep.scanned = state.totals.scanned;
  rep.filtered = state.totals.filtered;
  rep.violation_count = state.totals.violation_count;
  rep.violations = std::move(state.totals.violations);
  rep.min_margin_sq = state.totals.min_margin_sq;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// ---------------------------------------------------------------- Sp(4,R)

namespace {

const Json& family_json(Sp4rFamily f) {
  return golden().at("sp4r_families").at(f == Sp4rFamily::Descending ? "descending" : "ascending");
}

const CaseData& sp4r_case() {
  static const CaseData c = build_case(make_case_id("SP4R"));
  return c;
}

bool member_ok(long long m, Sp4rFamily f) {
  const CaseData& c = sp4r_case();
  KType mu = sp4r_member(m, f);
  if (!is_dominant_ktype(c, mu) || is_usmall(c, mu)) return false;
  for (std::size_t b = 0; b < c.betas.size(); ++b) {
    if (!is_dominant_ktype(c, shifted(c, mu, -1, b))) return false;
  }
  return true;
}

}  // namespace

std::string sp4r_family_name(Sp4rFamily f) { return f == Sp4rFamily::Descending ? "descending" : "ascending"; }

KType sp4r_member(long long m, Sp4rFamily f) {
  KType mu;
  for (const auto& row : family_json(f).at("mu")) mu.push_back(row.at(0).get<long long>() * m + row.at(1).get<long long>());
  return mu;
}

long long sp4r_threshold(Sp4rFamily f) {
  // the u-small region is bounded, so members far out are always admissible
  long long thr = 0;
  for (long long m = 0; m <= 64; ++m) {
    if (!member_ok(m, f)) thr = m + 1;
  }
  return thr;
}

Sp4rTriple sp4r_family(long long m, Sp4rFamily f) {
  long long thr = sp4r_threshold(f);
  if (m < thr) {
    throw PreconditionError(sp4r_family_name(f) + " family needs m >= " + std::to_string(thr) + ", got " +
                            std::to_string(m));
  }
  const CaseData& c = sp4r_case();
  const Json& fam = family_json(f);
  Sp4rTriple out;
  out.mu = sp4r_member(m, f);
  out.middle = spin_norm_sq(c, out.mu);
  out.good = spin_norm_sq(c, pencil_member(c, out.mu, -1, fam.at("beta_good").get<std::size_t>()));
  out.bad = spin_norm_sq(c, pencil_member(c, out.mu, -1, fam.at("beta_bad").get<std::size_t>()));
  return out;
}

}  // namespace liecheck
