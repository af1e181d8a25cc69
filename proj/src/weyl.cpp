#include "liecheck/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "liecheck/errors.hpp"

namespace liecheck {

WeylWord WeylWord::inverse() const {
  WeylWord w{letters};
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

WeylWord WeylWord::times(int i) const {
  WeylWord w{letters};
  w.letters.push_back(i);
  return w;
}

std::string WeylWord::str() const {
  if (letters.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) os << ' ';
    os << 's' << letters[k] + 1;
  }
  return os.str();
}

RationalVector apply_word(const WeylWord& word, const RationalVector& v, const RootSystem& system) {
  RationalVector out = v;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    if (*it < 0 || static_cast<std::size_t>(*it) >= system.rank()) {
      throw UsageError("reflection index " + std::to_string(*it + 1) + " out of range");
    }
    out = reflect(out, system.simple_root(static_cast<std::size_t>(*it)));
  }
  return out;
}

Dominated to_dominant(const RationalVector& v, const RootSystem& system,
                      const std::vector<int>& allowed) {
  Dominated d{v, {}};
  std::vector<int> applied;
  while (true) {
    int hit = -1;
    for (int i : allowed) {
      if (inner(d.vector, system.simple_root(static_cast<std::size_t>(i))) < 0) {
        hit = i;
        break;
      }
    }
    if (hit < 0) break;
    d.vector = reflect(d.vector, system.simple_root(static_cast<std::size_t>(hit)));
    applied.push_back(hit);
  }
  // first reflection applied is the rightmost letter
  d.word.letters.assign(applied.rbegin(), applied.rend());
  return d;
}

Dominated to_dominant(const RationalVector& v, const RootSystem& system) {
  std::vector<int> all(system.rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return to_dominant(v, system, all);
}

namespace {

// Sum of the fundamental weights listed in `idx`; strictly dominant for that subsystem.
RationalVector regular_for(const RootSystem& system, const std::vector<int>& idx) {
  RationalVector s(system.ambient_dim());
  for (int i : idx) s += system.fundamental_weights()[static_cast<std::size_t>(i)];
  return s;
}

}  // namespace

WeylWord longest_element(const RootSystem& system) {
  std::vector<int> all(system.rank());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  // w0 sends -regular to regular; w0 is an involution so the word needs no inversion.
  return to_dominant(-regular_for(system, all), system, all).word;
}

WeylWord parabolic_longest(const RootSystem& system, int omit_index) {
  if (omit_index < 0 || static_cast<std::size_t>(omit_index) >= system.rank()) {
    throw UsageError("parabolic index " + std::to_string(omit_index + 1) + " out of range 1.." +
                     std::to_string(system.rank()));
  }
  std::vector<int> kept;
  for (std::size_t i = 0; i < system.rank(); ++i) {
    if (static_cast<int>(i) != omit_index) kept.push_back(static_cast<int>(i));
  }
  // Pairs to -1 with every kept simple root, so it is regular and antidominant for W_k.
  return to_dominant(-regular_for(system, kept), system, kept).word;
}

std::vector<WeylWord> minimal_coset_reps(const RootSystem& g, const RootSystem& k) {
  if (g.ambient_dim() != k.ambient_dim()) {
    throw ConstructionError("k and g systems live in different ambient spaces");
  }
  for (const auto& gamma : k.simple_roots()) {
    if (!g.is_root(gamma)) {
      throw ConstructionError("k simple root " + gamma.str() + " is not a root of g");
    }
  }
  // <gamma, w rho_g> > 0 for all simple gamma of k  <=>  w^{-1} gamma > 0
  RationalVector rho_g = g.rho();
  auto accepted = [&](const RationalVector& image) {
    for (const auto& gamma : k.simple_roots()) {
      if (inner(gamma, image) <= 0) return false;
    }
    return true;
  };

  std::vector<WeylWord> out;
  std::set<RationalVector> seen;
  std::deque<std::pair<WeylWord, RationalVector>> queue;
  queue.emplace_back(WeylWord{}, rho_g);
  seen.insert(rho_g);
  while (!queue.empty()) {
    auto [w, image] = std::move(queue.front());
    queue.pop_front();
    out.push_back(w);
    for (std::size_t i = 0; i < g.rank(); ++i) {
      WeylWord next = w.times(static_cast<int>(i));
      RationalVector img = apply_word(next, rho_g, g);
      if (seen.count(img) || !accepted(img)) continue;
      seen.insert(img);
      queue.emplace_back(std::move(next), std::move(img));
    }
  }
  return out;
}

RationalVector word_positive_root_sum(const WeylWord& word, const RootSystem& system) {
  RationalVector sum(system.ambient_dim());
  WeylWord prefix;
  for (int d : word.letters) {
    sum += apply_word(prefix, system.simple_root(static_cast<std::size_t>(d)), system);
    prefix.letters.push_back(d);
  }
  return sum;
}

}  // namespace liecheck
