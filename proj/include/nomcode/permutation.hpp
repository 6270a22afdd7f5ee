#pragma once

// Permutations of [n] in one-line notation, their cycle structure, exceedance
// statistics and the nearest orbital minorant ("nom") of a position.
//
// Positions and values are 1-based at the API boundary; storage is 0-based.

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nomcode/errors.hpp"

namespace nomcode {

inline constexpr int kDefaultPermutationBound = 12;

class Permutation {
 public:
  Permutation() = default;
  /// Validates that `word` is a rearrangement of 1..word.size().
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  bool empty() const noexcept { return word_.empty(); }

  /// sigma(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  int at(int i) const;

  const std::vector<int>& word() const noexcept { return word_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

/// Product where the left factor acts first: result(i) = q(p(i)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

/// The transposition (a, b) on [n]; a == b gives the identity.
Permutation transposition(int n, int a, int b);

/// Disjoint cycles of a permutation. The canonical form rotates each cycle so
/// that its minimum comes first and sorts cycles by their minima; that is what
/// cycles() returns, so structural equality is equality of decompositions.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  std::size_t count() const noexcept { return cycles.size(); }
  bool operator==(const CycleDecomposition&) const = default;
};

CycleDecomposition cycles(const Permutation& p);
CycleDecomposition canonical(CycleDecomposition c);

/// Builds the permutation mapping each cycle entry to its successor. The
/// cycles need not be canonical, but must partition [n] for n = total length.
Permutation from_cycles(const CycleDecomposition& c);

/// Positions i with p(i) > i, ascending.
std::vector<int> exceedance_set(const Permutation& p);
/// Positions i with p(i) <= i, ascending.
std::vector<int> anti_exceedance_set(const Permutation& p);

/// Nearest orbital minorant: p^t(i) for the least t >= 1 with p^t(i) <= i.
int nom(const Permutation& p, int i);

/// A classical pattern of length 3.
class Pattern3 {
 public:
  explicit Pattern3(std::array<int, 3> word);
  /// Accepts "123", "132", "213", "231", "312" or "321".
  static Pattern3 parse(std::string_view text);

  const std::array<int, 3>& word() const noexcept { return word_; }
  std::string to_string() const;

  bool operator==(const Pattern3&) const = default;

 private:
  std::array<int, 3> word_;
};

/// The six patterns, lexicographically.
const std::array<Pattern3, 6>& all_patterns3();

/// True iff some i < j < k has (p(i), p(j), p(k)) order-isomorphic to pat.
bool contains_pattern(const Permutation& p, const Pattern3& pat);

/// Calls fn for each permutation of [n] in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn&& fn, int max_n = kDefaultPermutationBound);

/// All permutations of [n] in lexicographic order (materialized).
std::vector<Permutation> enumerate_permutations(
    int n, int max_n = kDefaultPermutationBound);

bool is_cyclic(const Permutation& p);

// Text forms: "2 3 1 5 4" and "(1,10,7,9,2,6,4,5)(3,8)".
std::string to_string(const Permutation& p);
std::string to_string(const CycleDecomposition& c);
/// Space-separated values; a single digit run like "23154" is read one value
/// per digit.
Permutation parse_permutation(std::string_view text);
CycleDecomposition parse_cycles(std::string_view text);

}  // namespace nomcode

#include <algorithm>
#include <numeric>

namespace nomcode {

template <class Fn>
void for_each_permutation(int n, Fn&& fn, int max_n) {
  check_bound("enumerate_permutations", n, max_n);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace nomcode
