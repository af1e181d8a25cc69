#pragma once

#include <string>
#include <vector>

#include "liecheck/rational_vector.hpp"
#include "liecheck/root_system.hpp"

namespace liecheck {

// A Weyl group element as a product of simple reflections s_{l0} s_{l1} ... s_{ln}.
// Letters are 0-based indices into a RootSystem's simple roots. When acting on a
// vector the rightmost letter is applied first.
struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  WeylWord inverse() const;
  // Right multiplication by s_i.
  WeylWord times(int i) const;
  // "e" for the identity, otherwise "s4 s3 s2" with 1-based indices.
  std::string str() const;
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

RationalVector apply_word(const WeylWord& word, const RationalVector& v, const RootSystem& system);

struct Dominated {
  RationalVector vector;
  // apply_word(word, input) == vector
  WeylWord word;
};

// Reflects at the lowest-index simple root with negative pairing until none is left.
Dominated to_dominant(const RationalVector& v, const RootSystem& system);
// Same, restricted to the simple reflections listed in `allowed` (a parabolic subgroup).
Dominated to_dominant(const RationalVector& v, const RootSystem& system,
                      const std::vector<int>& allowed);

WeylWord longest_element(const RootSystem& system);
// Longest element of the subgroup generated by every simple reflection except omit_index
// (0-based). Throws UsageError when omit_index is out of range.
WeylWord parabolic_longest(const RootSystem& system, int omit_index);

// Elements w of W(g) with w^{-1}(gamma) positive for every simple root gamma of k,
// found breadth-first by word length. The identity comes first.
std::vector<WeylWord> minimal_coset_reps(const RootSystem& g_system, const RootSystem& k_system);

// sum_k s_{d1} ... s_{d(k-1)} (d_k) over the letters d1..dn of `word`.
RationalVector word_positive_root_sum(const WeylWord& word, const RootSystem& system);

}  // namespace liecheck
