#pragma once

// Subexceedant functions f_1 ... f_n with 1 <= f_i <= i, their statistics,
// and the two encodings of the non-decreasing ones: occurrence vectors and
// N-E lattice paths.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nomcode/count.hpp"
#include "nomcode/errors.hpp"

namespace nomcode {

inline constexpr int kDefaultCodeBound = 14;

class SubexceedantFunction {
 public:
  SubexceedantFunction() = default;
  /// Rejects any i with f_i < 1 or f_i > i.
  explicit SubexceedantFunction(std::vector<int> word);

  static SubexceedantFunction identity(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  bool empty() const noexcept { return word_.empty(); }
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
  int at(int i) const;
  const std::vector<int>& word() const noexcept { return word_; }

  bool operator==(const SubexceedantFunction&) const = default;
  auto operator<=>(const SubexceedantFunction&) const = default;

 private:
  std::vector<int> word_;
};

/// Distinct values of f, ascending.
std::vector<int> image(const SubexceedantFunction& f);
/// Positions of the rightmost occurrence of each value, ascending.
std::vector<int> imrp(const SubexceedantFunction& f);
/// { i < n : f_i = f_{i+1} }
std::vector<int> plat_set(const SubexceedantFunction& f);
/// { i : f_i = i }
std::vector<int> fxdp_set(const SubexceedantFunction& f);
int ima(const SubexceedantFunction& f);

bool is_nondecreasing(const SubexceedantFunction& f);

/// Occurrence counts (r_1, ..., r_n) of a non-decreasing code.
class RVector {
 public:
  /// Requires 0 <= r_i <= n-i+1, r_1 >= 1 when n >= 1, and sum r_i = n.
  explicit RVector(std::vector<int> r);

  int size() const noexcept { return static_cast<int>(r_.size()); }
  int operator()(int i) const { return r_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& values() const noexcept { return r_; }

  bool operator==(const RVector&) const = default;

 private:
  std::vector<int> r_;
};

/// Throws std::invalid_argument unless f is non-decreasing.
RVector r_vector(const SubexceedantFunction& f);
SubexceedantFunction sef_from_r_vector(const RVector& r);

/// A word over {E, N} with as many of each letter and no prefix having more
/// N than E: a path from (0,0) to (n,n) that stays weakly below y = x.
class LatticePath {
 public:
  explicit LatticePath(std::string steps);

  int size() const noexcept { return static_cast<int>(steps_.size() / 2); }
  const std::string& steps() const noexcept { return steps_; }

  bool operator==(const LatticePath&) const = default;

 private:
  std::string steps_;
};

/// The path whose column heights are f_i - 1: N^{h_1} E N^{h_2-h_1} E ... E
/// N^{n-h_n}. Starts with E for n >= 1.
LatticePath to_lattice_path(const SubexceedantFunction& f);
SubexceedantFunction from_lattice_path(const LatticePath& w);

/// Visits all of F_n (n! codes) in lexicographic order.
template <class Fn>
void for_each_sef(int n, Fn&& fn, int max_n = kDefaultCodeBound);
/// Visits the non-decreasing codes of length n in lexicographic order.
template <class Fn>
void for_each_nondecreasing_sef(int n, Fn&& fn, int max_n = kDefaultCodeBound);

std::vector<SubexceedantFunction> enumerate_sefs(int n,
                                                 int max_n = kDefaultCodeBound);
std::vector<SubexceedantFunction> enumerate_nondecreasing_sefs(
    int n, int max_n = kDefaultCodeBound);

/// C_n from C_n = sum_{i=2}^{n+1} C_{i-2} C_{n-i+1}, C_0 = C_1 = 1.
Count catalan(int n);

/// Splits a non-decreasing code at its first fixed point i != 1 into
/// f_2 ... f_{i-1} (length i-2) and f_i ... f_n lowered by i-1 (length
/// n-i+1). Requires n >= 1.
std::pair<SubexceedantFunction, SubexceedantFunction> catalan_split(
    const SubexceedantFunction& f);

// Text: "1 1 2 1 3 4 5", compact "1121345" (values <= 9), paths "EENN...".
std::string to_string(const SubexceedantFunction& f);
std::string to_compact_string(const SubexceedantFunction& f);
std::string to_string(const LatticePath& w);
SubexceedantFunction parse_code(std::string_view text);
LatticePath parse_lattice_path(std::string_view text);

}  // namespace nomcode

namespace nomcode {

template <class Fn>
void for_each_sef(int n, Fn&& fn, int max_n) {
  check_bound("enumerate_sefs", n, max_n);
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  while (true) {
    fn(SubexceedantFunction(w));
    int i = n - 1;
    while (i >= 0 && w[i] == i + 1) w[i--] = 1;
    if (i < 0) return;
    ++w[i];
  }
}

template <class Fn>
void for_each_nondecreasing_sef(int n, Fn&& fn, int max_n) {
  check_bound("enumerate_nondecreasing_sefs", n, max_n);
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  while (true) {
    fn(SubexceedantFunction(w));
    // Rightmost position that can still grow; reset the suffix to its value.
    int i = n - 1;
    while (i >= 1 && w[i] == i + 1) --i;
    if (i < 1) return;
    ++w[i];
    for (int j = i + 1; j < n; ++j) w[j] = w[i];
  }
}

}  // namespace nomcode
