#pragma once

// Length-3 pattern avoidance inside the non-decreasing-code class, and the
// code families that describe it: V_n (132), D_n and its blocks (132 without
// fixed points past 1, in bijection with partitions), flip (213), X_n (231),
// Y_n (312), and the exceedance criterion for 321.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nomcode/count.hpp"
#include "nomcode/permutation.hpp"
#include "nomcode/subexceedant.hpp"

namespace nomcode {

inline constexpr int kDefaultAvoidanceBound = 10;

/// Members of the class of size n avoiding pat, in code order.
std::vector<Permutation> avoiders(int n, const Pattern3& pat,
                                  int max_n = kDefaultAvoidanceBound);
Count count_avoiders(int n, const Pattern3& pat,
                     int max_n = kDefaultAvoidanceBound);

/// f = 1^k followed by a strictly increasing tail (plateaus only at height 1).
/// Throws if f is not non-decreasing.
bool in_V(const SubexceedantFunction& f);

/// |{ i : f_i = f_{i+1} = 1 }|
int plateau1_count(const SubexceedantFunction& f);

/// f is non-decreasing, has no fixed point i > 1, and phi(f) avoids 132.
bool in_D(const SubexceedantFunction& f);

/// Cut of a code without fixed points past 1: f = 1 | H_0 | H_1 | ... | H_s,
/// where H_0 = 1^{k_0} and the rest is split into maximal runs of +1 steps,
/// each run cut into blocks of the size of the block before it (the last
/// block of a run of length l taking ((l - 1) mod K) + 1 letters).
struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // H_0, H_1, ..., H_s
  std::vector<int> starts;               // 1-based position of each block

  std::vector<int> sizes() const;
};

/// Throws unless f is non-decreasing, non-empty and has no fixed point > 1.
BlockDecomposition decompose_blocks(const SubexceedantFunction& f);

/// Every block H_i, i >= 1, begins with the starting position of H_{i-1}.
/// On the domain of decompose_blocks this holds iff phi(f) avoids 132.
bool check_block_condition(const SubexceedantFunction& f);

/// For f in D with k height-1 plateaus: add 1 to values >= k + 2 and prepend
/// a 1. The result lies in D with one more plateau.
SubexceedantFunction lift1(const SubexceedantFunction& f);
/// For f in D with k = plateau1_count(f): add k to values > 1 and insert
/// 2, 3, ..., k+1 after the last 1.
SubexceedantFunction lift2(const SubexceedantFunction& f, int k);

/// d_{n,k} by brute force: members of D on [n] with k height-1 plateaus.
Count d_count(int n, int k, int max_n = 12);

/// Number of codes f on [n] with phi(f) avoiding 132 in the class, from
/// a_1 = 1 and a_n = a_{n-1} + p(n-1) for n >= 2. Requires n >= 1.
Count a_sequence(int n);

/// f'_i = n + 1 - (r_1 + ... + r_{n-i+1}). An involution on non-decreasing
/// codes; throws on other codes.
SubexceedantFunction flip(const SubexceedantFunction& f);

/// phi(flip(f)) == complement(reverse(inverse(phi(f)))).
bool flip_theorem_check(const SubexceedantFunction& f);

class IntegerPartition {
 public:
  IntegerPartition() = default;
  /// Parts must be positive and weakly decreasing.
  explicit IntegerPartition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  bool operator==(const IntegerPartition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Block sizes (k_0, ..., k_s) of f in D_n: a partition of n - 1.
IntegerPartition rho(const SubexceedantFunction& f);
/// From a partition of n - 1: a 1, then lambda_1 ones, then for i >= 2 the
/// lambda_i consecutive integers starting at 2 + lambda_1 + ... + lambda_{i-2}.
SubexceedantFunction rho_inverse(const IntegerPartition& lambda);

Count partitions_count(int n);
/// Partitions of n with largest part exactly k.
Count partitions_count_largest(int n, int k);
/// Partitions of n, parts weakly decreasing, in reverse lexicographic order
/// (n first, 1+1+...+1 last).
std::vector<IntegerPartition> enumerate_partitions(int n, int max_n = 40);

/// X_1 = {1}, X_2 = {11, 12}; X_n appends n-1 or n to members of X_{n-1}, and
/// (n-3)(n-3)(n-2) to members of X_{n-3} (n >= 4). Sorted, deduplicated.
std::vector<SubexceedantFunction> enumerate_X(int n, int max_n = kDefaultCodeBound);
int x_count(int n, int max_n = kDefaultCodeBound);
/// |X_n| from |X_n| = 2|X_{n-1}| + |X_{n-3}|, seeded with the generated sizes
/// 1, 2, 4 of X_1..X_3.
Count x_count_recurrence(int n);

/// f_i = i for every value i in the image of f. Throws on non-monotone f.
bool in_Y(const SubexceedantFunction& f);
/// Members of Y_n with exactly k distinct values (brute force).
Count y_count_by_ima(int n, int k, int max_n = kDefaultCodeBound);
/// All of Y_n in code order.
std::vector<SubexceedantFunction> enumerate_Y(int n, int max_n = kDefaultCodeBound);
/// All of V_n in code order.
std::vector<SubexceedantFunction> enumerate_V(int n, int max_n = kDefaultCodeBound);

/// Exceedance letters increase from left to right.
bool exceedance_letters_increasing(const Permutation& p);

struct Report321 {
  int n = 0;
  Count count;                     // |class_n(321)| by brute force
  bool criterion_holds = true;     // exceedance criterion == pattern search
  bool append_closed = true;       // appending n-1 or n keeps 321-avoidance
};

/// Brute-force 321 data for size n, with the two structural checks.
Report321 lower_bound_321(int n, int max_n = kDefaultAvoidanceBound);

// Text: "5+5+5+3+3+2+2+1"; the empty partition is "".
std::string to_string(const IntegerPartition& lambda);
IntegerPartition parse_partition(std::string_view text);

}  // namespace nomcode
