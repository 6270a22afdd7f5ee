#pragma once

// The class of permutations whose nom code is non-decreasing. It has C_n
// members, and each member is determined by its anti-exceedance positions and
// values (a "Catalan tuple" of pairs).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nomcode/permutation.hpp"
#include "nomcode/subexceedant.hpp"

namespace nomcode {

/// True iff encode_nom(p) is non-decreasing.
bool is_nd_perm(const Permutation& p);

/// Structural test, independent of the code: the anti-exceedance letters
/// increase from left to right, and every class { i : nom(i) = v } is an
/// integer interval.
bool check_characterization(const Permutation& p);

/// Members of the class for size n, decoded from the non-decreasing codes in
/// lexicographic code order.
std::vector<Permutation> nd_permutations(int n, int max_n = kDefaultCodeBound);

/// Position/value pairs <(i_1,j_1), ..., (i_k,j_k)>.
struct AxPairs {
  std::vector<std::pair<int, int>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  /// i_k, the size of the permutation the pairs describe (0 if empty).
  int n() const noexcept { return pairs.empty() ? 0 : pairs.back().first; }
  bool operator==(const AxPairs&) const = default;
};

/// 1 <= k <= n; i_1 < ... < i_k = n; 1 = j_1 < ... < j_k; and
/// j_s <= i_{s-1} + 1 for 2 <= s <= k.
bool validate_ax_pairs(const AxPairs& pairs, int n);

/// Anti-exceedances of p with their letters, by position. Throws unless p has
/// a non-decreasing nom code.
AxPairs ax_pairs_of(const Permutation& p);

/// 1^{i_1} j_2^{i_2-i_1} ... j_k^{n-i_{k-1}}.
SubexceedantFunction sef_from_ax_pairs(const AxPairs& pairs);

/// All valid pair tuples for n, in lexicographic order of (i_1, j_1, ...).
std::vector<AxPairs> enumerate_ax_pair_sets(int n, int max_n = kDefaultCodeBound);

struct Reconstruction {
  Permutation perm;
  /// Largest t used when resolving sigma^{-t}(j_s) over all positions.
  int max_chain = 0;
};

/// Builds sigma directly from its pairs: sigma(i_s) = j_s, then for every
/// other position i, in decreasing order, with i_{s-1} < i < i_s, sets
/// sigma(i) = sigma^{-t}(j_s) for the least t >= 1 such that this value is not
/// yet an image. Preimages are read off the partial map built so far.
Reconstruction reconstruct_perm_traced(const AxPairs& pairs);
Permutation reconstruct_perm(const AxPairs& pairs);

/// sigma . (n, j) for sigma on [n-1]; i.e. sigma extended by n(n) = n, then
/// the letters n and j exchanged.
Permutation append_transposition(const Permutation& p, int j);

/// Checks that sigma . (n, j) is in the class. Requires p in the class on
/// [n-1] and p(n-1) <= j <= n; throws std::out_of_range otherwise.
bool append_extension_check(const Permutation& p, int j);

// Text: "(3,1)(4,2)(6,3)(9,5)".
std::string to_string(const AxPairs& pairs);
AxPairs parse_ax_pairs(std::string_view text);

}  // namespace nomcode
