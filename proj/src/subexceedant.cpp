#include "nomcode/subexceedant.hpp"

#include <algorithm>
#include <stdexcept>

#include "text.hpp"

namespace nomcode {

SubexceedantFunction::SubexceedantFunction(std::vector<int> word)
    : word_(std::move(word)) {
  for (int i = 1; i <= size(); ++i) {
    const int v = word_[i - 1];
    if (v < 1 || v > i)
      throw std::invalid_argument("SubexceedantFunction: f_" +
                                  std::to_string(i) + " = " +
                                  std::to_string(v) + " outside [1, " +
                                  std::to_string(i) + "]");
  }
}

SubexceedantFunction SubexceedantFunction::identity(int n) {
  if (n < 0) throw std::invalid_argument("SubexceedantFunction: negative size");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return SubexceedantFunction(std::move(w));
}

int SubexceedantFunction::at(int i) const {
  if (i < 1 || i > size())
    throw std::out_of_range("SubexceedantFunction::at: position " +
                            std::to_string(i));
  return (*this)(i);
}

std::vector<int> image(const SubexceedantFunction& f) {
  std::vector<int> out(f.word());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> imrp(const SubexceedantFunction& f) {
  const int n = f.size();
  std::vector<int> rightmost(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) rightmost[f(i)] = i;
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (rightmost[v]) out.push_back(rightmost[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> plat_set(const SubexceedantFunction& f) {
  std::vector<int> out;
  for (int i = 1; i < f.size(); ++i)
    if (f(i) == f(i + 1)) out.push_back(i);
  return out;
}

std::vector<int> fxdp_set(const SubexceedantFunction& f) {
  std::vector<int> out;
  for (int i = 1; i <= f.size(); ++i)
    if (f(i) == i) out.push_back(i);
  return out;
}

int ima(const SubexceedantFunction& f) {
  return static_cast<int>(image(f).size());
}

bool is_nondecreasing(const SubexceedantFunction& f) {
  return std::is_sorted(f.word().begin(), f.word().end());
}

RVector::RVector(std::vector<int> r) : r_(std::move(r)) {
  const int n = size();
  int sum = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = r_[i - 1];
    if (v < 0 || v > n - i + 1)
      throw std::invalid_argument("RVector: r_" + std::to_string(i) +
                                  " out of range");
    sum += v;
  }
  if (sum != n) throw std::invalid_argument("RVector: entries must sum to n");
  if (n >= 1 && r_[0] == 0) throw std::invalid_argument("RVector: r_1 == 0");
}

RVector r_vector(const SubexceedantFunction& f) {
  if (!is_nondecreasing(f))
    throw std::invalid_argument("r_vector: code is not non-decreasing");
  std::vector<int> r(static_cast<std::size_t>(f.size()), 0);
  for (int v : f.word()) ++r[v - 1];
  return RVector(std::move(r));
}

SubexceedantFunction sef_from_r_vector(const RVector& r) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(r.size()));
  for (int v = 1; v <= r.size(); ++v) w.insert(w.end(), r(v), v);
  // The RVector bounds alone admit e.g. (1,0,2,1) -> 1334, which is not
  // subexceedant; the constructor rejects those.
  return SubexceedantFunction(std::move(w));
}

LatticePath::LatticePath(std::string steps) : steps_(std::move(steps)) {
  int e = 0, north = 0;
  for (char c : steps_) {
    if (c == 'E') {
      ++e;
    } else if (c == 'N') {
      if (++north > e)
        throw std::invalid_argument("LatticePath: prefix rises above y = x");
    } else {
      throw std::invalid_argument("LatticePath: letters must be E or N");
    }
  }
  if (e != north)
    throw std::invalid_argument("LatticePath: unequal numbers of E and N");
}

LatticePath to_lattice_path(const SubexceedantFunction& f) {
  if (!is_nondecreasing(f))
    throw std::invalid_argument("to_lattice_path: code is not non-decreasing");
  std::string s;
  int height = 0;
  for (int v : f.word()) {
    s.append(static_cast<std::size_t>(v - 1 - height), 'N');
    height = v - 1;
    s.push_back('E');
  }
  s.append(static_cast<std::size_t>(f.size() - height), 'N');
  return LatticePath(std::move(s));
}

SubexceedantFunction from_lattice_path(const LatticePath& w) {
  std::vector<int> f;
  int height = 0;
  for (char c : w.steps()) {
    if (c == 'N')
      ++height;
    else
      f.push_back(height + 1);
  }
  return SubexceedantFunction(std::move(f));
}

std::vector<SubexceedantFunction> enumerate_sefs(int n, int max_n) {
  std::vector<SubexceedantFunction> out;
  for_each_sef(n, [&](const SubexceedantFunction& f) { out.push_back(f); },
               max_n);
  return out;
}

std::vector<SubexceedantFunction> enumerate_nondecreasing_sefs(int n,
                                                               int max_n) {
  std::vector<SubexceedantFunction> out;
  for_each_nondecreasing_sef(
      n, [&](const SubexceedantFunction& f) { out.push_back(f); }, max_n);
  return out;
}

Count catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative argument");
  std::vector<Count> c(static_cast<std::size_t>(std::max(n, 1)) + 1);
  c[0] = 1;
  c[1] = 1;
  for (int m = 2; m <= n; ++m)
    for (int i = 2; i <= m + 1; ++i) c[m] += c[i - 2] * c[m - i + 1];
  return c[n];
}

std::pair<SubexceedantFunction, SubexceedantFunction> catalan_split(
    const SubexceedantFunction& f) {
  if (!is_nondecreasing(f) || f.empty())
    throw std::invalid_argument("catalan_split: needs a non-empty monotone code");
  const int n = f.size();
  int i = 2;
  while (i <= n && f(i) != i) ++i;
  // With no fixed point past 1, the second part is empty (i = n + 1).
  std::vector<int> first(f.word().begin() + 1, f.word().begin() + (i - 1));
  std::vector<int> second;
  for (int t = i; t <= n; ++t) second.push_back(f(t) - (i - 1));
  return {SubexceedantFunction(std::move(first)),
          SubexceedantFunction(std::move(second))};
}

std::string to_string(const SubexceedantFunction& f) {
  return detail::join(f.word(), " ");
}

std::string to_compact_string(const SubexceedantFunction& f) {
  std::string s;
  for (int v : f.word()) {
    if (v > 9)
      throw std::invalid_argument("to_compact_string: value above 9");
    s += static_cast<char>('0' + v);
  }
  return s;
}

std::string to_string(const LatticePath& w) { return w.steps(); }

SubexceedantFunction parse_code(std::string_view text) {
  return SubexceedantFunction(detail::parse_int_list(text, "parse_code"));
}

LatticePath parse_lattice_path(std::string_view text) {
  return LatticePath(std::string(detail::trim(text)));
}

}  // namespace nomcode
