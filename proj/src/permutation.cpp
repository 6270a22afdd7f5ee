#include "nomcode/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "text.hpp"

namespace nomcode {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("Permutation: value " + std::to_string(v) +
                                  " outside [1, " + std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: repeated value " +
                                  std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation::identity: negative size");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

int Permutation::at(int i) const {
  if (i < 1 || i > size())
    throw std::out_of_range("Permutation::at: position " + std::to_string(i));
  return (*this)(i);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) w[i - 1] = q(p(i));
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> w(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) w[p(i) - 1] = i;
  return Permutation(std::move(w));
}

Permutation reverse(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w(p.word());
  for (int& v : w) v = n + 1 - v;
  return Permutation(std::move(w));
}

Permutation transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::out_of_range("transposition: point outside [1, n]");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[a - 1], w[b - 1]);
  return Permutation(std::move(w));
}

CycleDecomposition cycles(const Permutation& p) {
  const int n = p.size();
  CycleDecomposition c;
  std::vector<bool> done(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    if (done[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !done[x]; x = p(x)) {
      done[x] = true;
      cycle.push_back(x);
    }
    c.cycles.push_back(std::move(cycle));
  }
  return c;
}

CycleDecomposition canonical(CycleDecomposition c) {
  for (auto& cycle : c.cycles)
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                cycle.end());
  std::sort(c.cycles.begin(), c.cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return c;
}

Permutation from_cycles(const CycleDecomposition& c) {
  std::size_t n = 0;
  for (const auto& cycle : c.cycles) {
    if (cycle.empty()) throw std::invalid_argument("from_cycles: empty cycle");
    n += cycle.size();
  }
  std::vector<int> w(n, 0);
  for (const auto& cycle : c.cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int x = cycle[k];
      if (x < 1 || static_cast<std::size_t>(x) > n)
        throw std::invalid_argument("from_cycles: element " +
                                    std::to_string(x) + " outside [1, n]");
      if (w[x - 1] != 0)
        throw std::invalid_argument("from_cycles: repeated element " +
                                    std::to_string(x));
      w[x - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(w));
}

std::vector<int> exceedance_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) > i) out.push_back(i);
  return out;
}

std::vector<int> anti_exceedance_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) <= i) out.push_back(i);
  return out;
}

int nom(const Permutation& p, int i) {
  if (i < 1 || i > p.size())
    throw std::out_of_range("nom: position " + std::to_string(i));
  int x = p(i);
  while (x > i) x = p(x);
  return x;
}

Pattern3::Pattern3(std::array<int, 3> word) : word_(word) {
  auto sorted = word;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3})
    throw std::invalid_argument("Pattern3: not a permutation of 123");
}

Pattern3 Pattern3::parse(std::string_view text) {
  text = detail::trim(text);
  if (text.size() != 3)
    throw std::invalid_argument("Pattern3: expected three digits");
  return Pattern3({text[0] - '0', text[1] - '0', text[2] - '0'});
}

std::string Pattern3::to_string() const {
  std::string s;
  for (int v : word_) s += static_cast<char>('0' + v);
  return s;
}

const std::array<Pattern3, 6>& all_patterns3() {
  static const std::array<Pattern3, 6> kAll = {
      Pattern3({1, 2, 3}), Pattern3({1, 3, 2}), Pattern3({2, 1, 3}),
      Pattern3({2, 3, 1}), Pattern3({3, 1, 2}), Pattern3({3, 2, 1})};
  return kAll;
}

bool contains_pattern(const Permutation& p, const Pattern3& pat) {
  const auto& w = p.word();
  const auto& q = pat.word();
  const std::size_t n = w.size();
  // Compare every pair of the triple the same way the pattern compares.
  const bool lt01 = q[0] < q[1], lt02 = q[0] < q[2], lt12 = q[1] < q[2];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((w[i] < w[j]) != lt01) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if ((w[i] < w[k]) == lt02 && (w[j] < w[k]) == lt12) return true;
    }
  return false;
}

std::vector<Permutation> enumerate_permutations(int n, int max_n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); },
                       max_n);
  return out;
}

bool is_cyclic(const Permutation& p) {
  return p.size() > 0 && cycles(p).count() == 1;
}

std::string to_string(const Permutation& p) {
  return detail::join(p.word(), " ");
}

std::string to_string(const CycleDecomposition& c) {
  std::string out;
  for (const auto& cycle : c.cycles) out += "(" + detail::join(cycle, ",") + ")";
  return out;
}

Permutation parse_permutation(std::string_view text) {
  return Permutation(detail::parse_int_list(text, "parse_permutation"));
}

CycleDecomposition parse_cycles(std::string_view text) {
  return CycleDecomposition{detail::parse_groups(text, "parse_cycles")};
}

}  // namespace nomcode
