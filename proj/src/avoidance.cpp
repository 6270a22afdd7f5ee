#include "nomcode/avoidance.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "nomcode/codec.hpp"
#include "text.hpp"

namespace nomcode {

namespace {

const Pattern3 k132({1, 3, 2});
const Pattern3 k321({3, 2, 1});

void require_nondecreasing(const SubexceedantFunction& f, const char* what) {
  if (!is_nondecreasing(f))
    throw std::invalid_argument(std::string(what) +
                                ": code is not non-decreasing");
}

bool has_fixed_point_past_one(const SubexceedantFunction& f) {
  for (int i = 2; i <= f.size(); ++i)
    if (f(i) == i) return true;
  return false;
}

// q[m][k]: partitions of m with largest part exactly k.
std::vector<std::vector<Count>> largest_part_table(int n) {
  std::vector<std::vector<Count>> q(static_cast<std::size_t>(n) + 1,
                                    std::vector<Count>(n + 1, 0));
  q[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) q[m][k] = q[m - 1][k - 1] + q[m - k][k];
  return q;
}

}  // namespace

std::vector<Permutation> avoiders(int n, const Pattern3& pat, int max_n) {
  check_bound("avoiders", n, max_n);
  std::vector<Permutation> out;
  for_each_nondecreasing_sef(
      n,
      [&](const SubexceedantFunction& f) {
        Permutation p = phi(f);
        if (!contains_pattern(p, pat)) out.push_back(std::move(p));
      },
      max_n);
  return out;
}

Count count_avoiders(int n, const Pattern3& pat, int max_n) {
  return Count(avoiders(n, pat, max_n).size());
}

bool in_V(const SubexceedantFunction& f) {
  require_nondecreasing(f, "in_V");
  for (int i = 1; i < f.size(); ++i)
    if (f(i) == f(i + 1) && f(i) != 1) return false;
  return true;
}

int plateau1_count(const SubexceedantFunction& f) {
  int k = 0;
  for (int i = 1; i < f.size(); ++i)
    if (f(i) == 1 && f(i + 1) == 1) ++k;
  return k;
}

bool in_D(const SubexceedantFunction& f) {
  if (!is_nondecreasing(f) || has_fixed_point_past_one(f)) return false;
  return !contains_pattern(phi(f), k132);
}

std::vector<int> BlockDecomposition::sizes() const {
  std::vector<int> out;
  for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
  return out;
}

BlockDecomposition decompose_blocks(const SubexceedantFunction& f) {
  if (f.empty() || !is_nondecreasing(f) || has_fixed_point_past_one(f))
    throw std::invalid_argument(
        "decompose_blocks: needs a non-empty monotone code without fixed "
        "points past 1");
  const int n = f.size();
  BlockDecomposition d;
  int pos = 2;
  std::vector<int> h0;
  while (pos <= n && f(pos) == 1) h0.push_back(f(pos++));
  d.blocks.push_back(h0);
  d.starts.push_back(2);

  int block_size = static_cast<int>(h0.size());
  while (pos <= n) {
    int run_end = pos;
    while (run_end < n && f(run_end + 1) == f(run_end) + 1) ++run_end;
    const int run_length = run_end - pos + 1;
    // block_size >= 1 here: f_2 = 1 whenever n >= 2.
    const int last = (run_length - 1) % block_size + 1;
    for (int left = run_length; left > 0;) {
      const int take = left > last ? block_size : last;
      d.starts.push_back(pos);
      d.blocks.emplace_back(f.word().begin() + (pos - 1),
                            f.word().begin() + (pos - 1 + take));
      pos += take;
      left -= take;
    }
    block_size = last;
  }
  return d;
}

bool check_block_condition(const SubexceedantFunction& f) {
  const auto d = decompose_blocks(f);
  for (std::size_t i = 1; i < d.blocks.size(); ++i)
    if (d.blocks[i].front() != d.starts[i - 1]) return false;
  return true;
}

SubexceedantFunction lift1(const SubexceedantFunction& f) {
  if (!in_D(f)) throw std::invalid_argument("lift1: code is not in D");
  const int k = plateau1_count(f);
  std::vector<int> w{1};
  for (int v : f.word()) w.push_back(v >= k + 2 ? v + 1 : v);
  return SubexceedantFunction(std::move(w));
}

SubexceedantFunction lift2(const SubexceedantFunction& f, int k) {
  if (!in_D(f)) throw std::invalid_argument("lift2: code is not in D");
  if (k != plateau1_count(f))
    throw std::invalid_argument("lift2: k must equal the height-1 plateaus");
  std::vector<int> w;
  for (int v : f.word()) {
    w.push_back(v > 1 ? v + k : v);
    if (v == 1 && static_cast<int>(w.size()) == k + 1)
      for (int x = 2; x <= k + 1; ++x) w.push_back(x);
  }
  return SubexceedantFunction(std::move(w));
}

Count d_count(int n, int k, int max_n) {
  Count total = 0;
  for_each_nondecreasing_sef(
      n,
      [&](const SubexceedantFunction& f) {
        if (plateau1_count(f) == k && in_D(f)) ++total;
      },
      max_n);
  return total;
}

Count a_sequence(int n) {
  if (n < 1) throw std::invalid_argument("a_sequence: n must be >= 1");
  Count a = 1;
  for (int m = 2; m <= n; ++m) a += partitions_count(m - 1);
  return a;
}

SubexceedantFunction flip(const SubexceedantFunction& f) {
  const RVector r = r_vector(f);
  const int n = f.size();
  std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int m = 1; m <= n; ++m) prefix[m] = prefix[m - 1] + r(m);
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[i - 1] = n + 1 - prefix[n - i + 1];
  return SubexceedantFunction(std::move(w));
}

bool flip_theorem_check(const SubexceedantFunction& f) {
  return phi(flip(f)) == complement(reverse(inverse(phi(f))));
}

IntegerPartition::IntegerPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (std::size_t t = 0; t < parts_.size(); ++t) {
    if (parts_[t] < 1)
      throw std::invalid_argument("IntegerPartition: parts must be positive");
    if (t > 0 && parts_[t] > parts_[t - 1])
      throw std::invalid_argument("IntegerPartition: parts must not increase");
    weight_ += parts_[t];
  }
}

IntegerPartition rho(const SubexceedantFunction& f) {
  if (!in_D(f)) throw std::invalid_argument("rho: code is not in D");
  std::vector<int> parts;
  for (int k : decompose_blocks(f).sizes())
    if (k > 0) parts.push_back(k);
  return IntegerPartition(std::move(parts));
}

SubexceedantFunction rho_inverse(const IntegerPartition& lambda) {
  const auto& parts = lambda.parts();
  std::vector<int> w{1};
  if (!parts.empty()) w.insert(w.end(), static_cast<std::size_t>(parts[0]), 1);
  int start = 2;  // 2 + lambda_1 + ... + lambda_{i-2}
  for (std::size_t i = 1; i < parts.size(); ++i) {
    for (int x = 0; x < parts[i]; ++x) w.push_back(start + x);
    start += parts[i - 1];
  }
  return SubexceedantFunction(std::move(w));
}

Count partitions_count(int n) {
  if (n < 0) return 0;
  const auto q = largest_part_table(n);
  Count total = 0;
  for (int k = 0; k <= n; ++k) total += q[n][k];
  return total;
}

Count partitions_count_largest(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return largest_part_table(n)[n][k];
}

std::vector<IntegerPartition> enumerate_partitions(int n, int max_n) {
  check_bound("enumerate_partitions", n, max_n);
  std::vector<IntegerPartition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
      parts.push_back(part);
      rec(left - part, part);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<SubexceedantFunction> enumerate_X(int n, int max_n) {
  check_bound("enumerate_X", n, max_n);
  if (n < 1) throw std::invalid_argument("enumerate_X: n must be >= 1");
  std::vector<std::set<std::vector<int>>> levels(static_cast<std::size_t>(n) + 1);
  levels[1] = {{1}};
  for (int m = 2; m <= n; ++m) {
    for (const auto& w : levels[m - 1])
      for (int tail : {m - 1, m}) {
        auto v = w;
        v.push_back(tail);
        levels[m].insert(std::move(v));
      }
    if (m >= 4)
      for (const auto& w : levels[m - 3]) {
        auto v = w;
        v.insert(v.end(), {m - 3, m - 3, m - 2});
        levels[m].insert(std::move(v));
      }
  }
  std::vector<SubexceedantFunction> out;
  for (const auto& w : levels[n]) out.emplace_back(w);
  return out;
}

int x_count(int n, int max_n) {
  return static_cast<int>(enumerate_X(n, max_n).size());
}

Count x_count_recurrence(int n) {
  if (n < 1) throw std::invalid_argument("x_count_recurrence: n must be >= 1");
  std::vector<Count> x{0, 1, 2, 4};
  for (int m = 4; m <= n; ++m) x.push_back(2 * x[m - 1] + x[m - 3]);
  return x[n];
}

bool in_Y(const SubexceedantFunction& f) {
  require_nondecreasing(f, "in_Y");
  for (int v : image(f))
    if (f(v) != v) return false;
  return true;
}

std::vector<SubexceedantFunction> enumerate_Y(int n, int max_n) {
  std::vector<SubexceedantFunction> out;
  for_each_nondecreasing_sef(
      n,
      [&](const SubexceedantFunction& f) {
        if (in_Y(f)) out.push_back(f);
      },
      max_n);
  return out;
}

std::vector<SubexceedantFunction> enumerate_V(int n, int max_n) {
  std::vector<SubexceedantFunction> out;
  for_each_nondecreasing_sef(
      n,
      [&](const SubexceedantFunction& f) {
        if (in_V(f)) out.push_back(f);
      },
      max_n);
  return out;
}

Count y_count_by_ima(int n, int k, int max_n) {
  Count total = 0;
  for (const auto& f : enumerate_Y(n, max_n))
    if (ima(f) == k) ++total;
  return total;
}

bool exceedance_letters_increasing(const Permutation& p) {
  int last = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) <= i) continue;
    if (p(i) < last) return false;
    last = p(i);
  }
  return true;
}

Report321 lower_bound_321(int n, int max_n) {
  check_bound("lower_bound_321", n, max_n);
  Report321 report;
  report.n = n;
  std::set<std::vector<int>> avoiding_codes;
  for_each_nondecreasing_sef(
      n,
      [&](const SubexceedantFunction& f) {
        const Permutation p = phi(f);
        const bool avoids = !contains_pattern(p, k321);
        if (avoids != exceedance_letters_increasing(p))
          report.criterion_holds = false;
        if (avoids) {
          ++report.count;
          avoiding_codes.insert(f.word());
        }
      },
      max_n);
  if (n >= 2) {
    for (const auto& p : avoiders(n - 1, k321, max_n)) {
      const auto code = encode_nom(p).word();
      for (int tail : {n - 1, n}) {
        auto w = code;
        w.push_back(tail);
        if (!avoiding_codes.count(w)) report.append_closed = false;
      }
    }
  }
  return report;
}

std::string to_string(const IntegerPartition& lambda) {
  return detail::join(lambda.parts(), "+");
}

IntegerPartition parse_partition(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) return IntegerPartition();
  std::string spaced(text);
  std::replace(spaced.begin(), spaced.end(), '+', ' ');
  // "55533221" is read one part per digit.
  return IntegerPartition(detail::parse_int_list(spaced, "parse_partition"));
}

}  // namespace nomcode
