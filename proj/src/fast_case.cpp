#include "liecheck/fast_case.hpp"

#include <limits>

#include "liecheck/errors.hpp"
#include "liecheck/usmall.hpp"

namespace liecheck {

namespace {

int to_int(const Rational& q, const char* what) {
  if (q.get_den() != 1 || !q.get_num().fits_sint_p()) {
    throw ConstructionError(std::string("non-integral ") + what + ": " + to_string(q));
  }
  return static_cast<int>(q.get_num().get_si());
}

}  // namespace

FastCase::FastCase(const CaseData& c) {
  if (c.k_has_center) throw UsageError(c.id.str() + ": the integer engine needs semisimple k");
  const auto& k = c.k_system;
  rank_ = static_cast<int>(k.rank());
  if (rank_ > 16) throw UsageError(c.id.str() + ": rank above 16 is not supported by the integer engine");
  const auto r = static_cast<std::size_t>(rank_);

  mpz_class d = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) d = lcm(d, inner(c.k_fund_weights[i], c.k_fund_weights[j]).get_den());
    d = lcm(d, norm_sq(k.simple_root(i)).get_den());
  }
  if (!d.fits_slong_p()) throw ConstructionError("scale does not fit in 64 bits");
  scale_ = d.get_si();

  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      gram_.push_back(to_int(inner(c.k_fund_weights[i], c.k_fund_weights[j]) * d, "gram entry"));
      cartan_.push_back(to_int(coroot_pairing(k.simple_root(i), k.simple_root(j)), "cartan entry"));
    }
  }
  neighbors_.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && cartan_[i * r + j] != 0) neighbors_[i].push_back(static_cast<int>(j));
    }
    root_weight_.push_back(to_int(norm_sq(k.simple_root(i)) * d, "root weight"));
  }
  for (const auto& v : c.rho_n_variants) {
    std::vector<int> labels;
    for (const auto& x : k.dynkin_labels(v)) labels.push_back(to_int(x, "rho_n label"));
    rho_n_.push_back(std::move(labels));
  }
  for (const auto& x : k.dynkin_labels(c.beta())) beta_.push_back(to_int(x, "beta label"));

  for (const auto& row : usmall_system(c).rows) {
    std::vector<std::int64_t> coefs;
    for (const auto& x : row.coefs) coefs.push_back(to_int(x, "u-small coefficient"));
    usmall_coefs_.push_back(std::move(coefs));
    usmall_bounds_.push_back(to_int(row.bound, "u-small bound"));
  }
}

std::int64_t FastCase::shifted_norm(const int* x) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) {
    std::int64_t xi = x[i] + 1;
    std::int64_t row = 0;
    for (int j = 0; j < rank_; ++j) row += gram_[static_cast<std::size_t>(i * rank_ + j)] * (x[j] + 1);
    s += xi * row;
  }
  return s;
}

std::int64_t FastCase::dominate(int* x) const {
  std::int64_t gain = 0;
  int i = 0;
  while (i < rank_) {
    if (x[i] >= 0) {
      ++i;
      continue;
    }
    // s_i: x_j -= x_i * <gamma_i, gamma_j^vee>
    int xi = x[i];
    gain -= static_cast<std::int64_t>(xi) * root_weight_[static_cast<std::size_t>(i)];
    x[i] = -xi;
    int lowest = rank_;
    for (int j : neighbors_[static_cast<std::size_t>(i)]) {
      x[j] -= xi * cartan_[static_cast<std::size_t>(i * rank_ + j)];
      if (x[j] < 0 && j < lowest) lowest = j;
    }
    // only neighbors can have turned negative; resume at the lowest candidate
    i = lowest < i ? lowest : i + 1;
  }
  return gain;
}

std::int64_t FastCase::variant_value(const int* mu, std::size_t j) const {
  int x[16];
  const auto& rn = rho_n_[j];
  for (int i = 0; i < rank_; ++i) x[i] = mu[i] - rn[static_cast<std::size_t>(i)];
  std::int64_t base = shifted_norm(x);
  return base + dominate(x);
}

std::int64_t FastCase::spin_norm(const int* mu) const {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t j = 0; j < rho_n_.size(); ++j) {
    std::int64_t v = variant_value(mu, j);
    if (v < best) best = v;
  }
  return best;
}

bool FastCase::usmall(const int* mu) const {
  for (std::size_t r = 0; r < usmall_coefs_.size(); ++r) {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += usmall_coefs_[r][static_cast<std::size_t>(i)] * mu[i];
    if (s > usmall_bounds_[r]) return false;
  }
  return true;
}

}  // namespace liecheck
