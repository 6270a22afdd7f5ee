#include "nomcode/nondecreasing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nomcode/codec.hpp"
#include "text.hpp"

namespace nomcode {

bool is_nd_perm(const Permutation& p) {
  return is_nondecreasing(encode_nom(p));
}

bool check_characterization(const Permutation& p) {
  const int n = p.size();
  int last_letter = 0;
  for (int i = 1; i <= n; ++i) {
    if (p(i) > i) continue;
    if (p(i) < last_letter) return false;
    last_letter = p(i);
  }
  // Each nom class must be contiguous: once a value's run ends it never
  // reappears.
  std::vector<bool> closed(static_cast<std::size_t>(n) + 1, false);
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    const int v = nom(p, i);
    if (v != prev) {
      if (closed[v]) return false;
      if (prev) closed[prev] = true;
      prev = v;
    }
  }
  return true;
}

std::vector<Permutation> nd_permutations(int n, int max_n) {
  std::vector<Permutation> out;
  for_each_nondecreasing_sef(
      n, [&](const SubexceedantFunction& f) { out.push_back(phi(f)); }, max_n);
  return out;
}

bool validate_ax_pairs(const AxPairs& pairs, int n) {
  const auto& v = pairs.pairs;
  const int k = static_cast<int>(v.size());
  if (k < 1 || k > n) return false;
  if (v.back().first != n || v.front().first < 1 || v.front().second != 1)
    return false;
  for (int s = 1; s < k; ++s) {
    const auto [i_prev, j_prev] = v[s - 1];
    const auto [i, j] = v[s];
    if (i <= i_prev || j <= j_prev || j > i_prev + 1) return false;
  }
  return true;
}

AxPairs ax_pairs_of(const Permutation& p) {
  if (!is_nd_perm(p))
    throw std::invalid_argument("ax_pairs_of: nom code is not non-decreasing");
  AxPairs out;
  for (int i : anti_exceedance_set(p)) out.pairs.emplace_back(i, p(i));
  return out;
}

SubexceedantFunction sef_from_ax_pairs(const AxPairs& pairs) {
  if (!validate_ax_pairs(pairs, pairs.n()))
    throw std::invalid_argument("sef_from_ax_pairs: invalid pairs " +
                                to_string(pairs));
  std::vector<int> w;
  int prev = 0;
  for (auto [i, j] : pairs.pairs) {
    w.insert(w.end(), static_cast<std::size_t>(i - prev), j);
    prev = i;
  }
  return SubexceedantFunction(std::move(w));
}

std::vector<AxPairs> enumerate_ax_pair_sets(int n, int max_n) {
  check_bound("enumerate_ax_pair_sets", n, max_n);
  if (n < 1) throw std::invalid_argument("enumerate_ax_pair_sets: n < 1");
  std::vector<AxPairs> out;
  AxPairs current;
  std::function<void()> extend = [&] {
    const auto [i, j] = current.pairs.back();
    if (i == n) {
      out.push_back(current);
      return;
    }
    for (int next_i = i + 1; next_i <= n; ++next_i)
      for (int next_j = j + 1; next_j <= i + 1; ++next_j) {
        current.pairs.emplace_back(next_i, next_j);
        extend();
        current.pairs.pop_back();
      }
  };
  for (int first = 1; first <= n; ++first) {
    current.pairs = {{first, 1}};
    extend();
  }
  return out;
}

Reconstruction reconstruct_perm_traced(const AxPairs& pairs) {
  const int n = pairs.n();
  if (!validate_ax_pairs(pairs, n))
    throw std::invalid_argument("reconstruct_perm: invalid pairs " +
                                to_string(pairs));
  std::vector<int> image_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> preimage(static_cast<std::size_t>(n) + 1, 0);
  // block[i] = j_s for the s with i_{s-1} < i <= i_s.
  std::vector<int> block(static_cast<std::size_t>(n) + 1, 0);
  int prev = 0;
  for (auto [i, j] : pairs.pairs) {
    image_of[i] = j;
    preimage[j] = i;
    for (int x = prev + 1; x <= i; ++x) block[x] = j;
    prev = i;
  }
  Reconstruction result;
  for (int i = n; i >= 1; --i) {
    if (image_of[i]) continue;
    const int target = block[i];
    int v = target;
    int t = 0;
    do {
      // v is an image already, so its preimage is defined.
      v = preimage[v];
      ++t;
      if (v == 0 || v == target || t > n)
        throw std::logic_error("reconstruct_perm: preimage chain failed at " +
                               std::to_string(i));
    } while (preimage[v] != 0);
    image_of[i] = v;
    preimage[v] = i;
    result.max_chain = std::max(result.max_chain, t);
  }
  result.perm = Permutation(
      std::vector<int>(image_of.begin() + 1, image_of.end()));
  return result;
}

Permutation reconstruct_perm(const AxPairs& pairs) {
  return reconstruct_perm_traced(pairs).perm;
}

Permutation append_transposition(const Permutation& p, int j) {
  const int n = p.size() + 1;
  if (j < 1 || j > n)
    throw std::out_of_range("append_transposition: j outside [1, n]");
  std::vector<int> w = p.word();
  w.push_back(n);
  for (int& v : w) {
    if (v == n)
      v = j;
    else if (v == j)
      v = n;
  }
  return Permutation(std::move(w));
}

bool append_extension_check(const Permutation& p, int j) {
  const int n = p.size() + 1;
  if (p.empty())
    throw std::invalid_argument("append_extension_check: empty permutation");
  if (!is_nd_perm(p))
    throw std::invalid_argument(
        "append_extension_check: permutation is not in the class");
  if (j < p(n - 1) || j > n)
    throw std::out_of_range("append_extension_check: j outside [p(n-1), n]");
  return is_nd_perm(append_transposition(p, j));
}

std::string to_string(const AxPairs& pairs) {
  std::string out;
  for (auto [i, j] : pairs.pairs)
    out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  return out;
}

AxPairs parse_ax_pairs(std::string_view text) {
  AxPairs out;
  for (const auto& g : detail::parse_groups(text, "parse_ax_pairs")) {
    if (g.size() != 2)
      throw std::invalid_argument("parse_ax_pairs: groups must be pairs");
    out.pairs.emplace_back(g[0], g[1]);
  }
  return out;
}

}  // namespace nomcode
