// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nomcode/avoidance.hpp"
#include "nomcode/codec.hpp"
#include "nomcode/count.hpp"
#include "nomcode/forest.hpp"
#include "nomcode/nondecreasing.hpp"
#include "nomcode/permutation.hpp"
#include "nomcode/subexceedant.hpp"

using namespace nomcode;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what());
    failed_ += !ok;
  }
  void note(std::string line) { notes_.push_back(std::move(line)); }

  bool passed() const { return failed_ == 0; }
  long checks() const { return checks_; }
  long failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  long checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
};

template <class T>
std::string str(const T& v) {
  using nomcode::to_string;
  if constexpr (std::is_same_v<T, Count>)
    return v.str();
  else
    return to_string(v);
}

Permutation P(std::string_view s) { return parse_permutation(s); }
SubexceedantFunction F(std::string_view s) { return parse_code(s); }

// AC1: encode/decode bijection with all decoders and encoders agreeing.
void codec_bijection(Criterion& c) {
  for (int n = 0; n <= 8; ++n) {
    std::set<std::vector<int>> images;
    for_each_sef(n, [&](const SubexceedantFunction& f) {
      const auto p = decode_transpositions(f);
      c.expect(decode_insertion(f) == p && decode_cycle_insertion(f) == p,
               [&] { return "decoders disagree on " + str(f); });
      c.expect(encode_nom(p) == f && encode_selection_sort(p) == f,
               [&] { return "encode(decode(f)) != f for " + str(f); });
      images.insert(p.word());
    });
    c.expect(Count(images.size()) == factorial(n),
             [&] { return "decoder not injective at n = " + std::to_string(n); });
    for_each_permutation(n, [&](const Permutation& p) {
      const auto f = encode_nom(p);
      c.expect(encode_selection_sort(p) == f,
               [&] { return "encoders disagree on " + str(p); });
      c.expect(decode_transpositions(f) == p && decode_insertion(f) == p &&
                   decode_cycle_insertion(f) == p,
               [&] { return "decode(encode(p)) != p for " + str(p); });
    });
  }
}

// AC2: worked examples, exact.
void worked_examples(Criterion& c) {
  auto same = [&](const auto& got, const auto& want, const std::string& label) {
    c.expect(got == want, [&] { return label + ": got " + str(got); });
  };
  same(phi(F("1121345")), P("7621345"), "phi(1121345)");
  same(phi_inverse(P("23154")), F("11144"), "code of 23154");
  same(phi_inverse(P("10 6 8 5 1 4 9 3 2 7")), F("1 1 3 1 1 4 2 3 2 7"),
       "code of 10 6 8 5 1 4 9 3 2 7");
  same(phi_inverse(P("54136287")), F("11132277"), "code of 54136287");
  c.expect(to_string(cycles(phi(F("1132532")))) == "(1,4,7,2)(3,6)(5)",
           [&] { return "cycles of phi(1132532): " + str(cycles(phi(F("1132532")))); });
  const AxPairs pairs{{{3, 1}, {4, 2}, {6, 3}, {9, 5}}};
  same(reconstruct_perm(pairs), P("471263895"), "reconstruction");
  same(sef_from_ax_pairs(pairs), F("111233555"), "code from pairs");
  same(phi_inverse(reconstruct_perm(pairs)), F("111233555"), "code of reconstruction");
}

// AC3: Catalan counts through independent pipelines.
void catalan_counts(Criterion& c) {
  for (int n = 0; n <= 12; ++n) {
    Count codes = 0;
    for_each_nondecreasing_sef(n, [&](const SubexceedantFunction&) { ++codes; });
    Count filtered = 0;
    for_each_sef(n, [&](const SubexceedantFunction& f) { filtered += is_nondecreasing(f); });
    c.expect(codes == catalan(n) && filtered == catalan(n),
             [&] { return "non-decreasing codes at n = " + std::to_string(n); });
  }
  for (int n = 0; n <= 8; ++n) {
    Count members = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      members += is_nondecreasing(encode_nom(p));
    });
    c.expect(members == catalan(n),
             [&] { return "filtered class size at n = " + std::to_string(n); });
  }
  for (int n = 1; n <= 10; ++n)
    c.expect(Count(enumerate_ax_pair_sets(n).size()) == catalan(n),
             [&] { return "pair tuples at n = " + std::to_string(n); });

  std::set<std::vector<int>> codes, perms, want_codes, want_perms;
  for (const char* w : {"1111", "1112", "1113", "1122", "1222", "1123", "1114",
                        "1223", "1133", "1124", "1134", "1224", "1233", "1234"})
    want_codes.insert(F(w).word());
  for (const char* w : {"2341", "4312", "2413", "3142", "1342", "4123", "2314",
                        "1423", "2143", "3124", "2134", "1324", "1243", "1234"})
    want_perms.insert(P(w).word());
  for (const auto& f : enumerate_nondecreasing_sefs(4)) codes.insert(f.word());
  for (const auto& p : nd_permutations(4)) perms.insert(p.word());
  c.expect(codes == want_codes, [] { return std::string("n = 4 code set"); });
  c.expect(perms == want_perms, [] { return std::string("n = 4 permutation set"); });
}

// AC4: forest statistics against the Eulerian table.
void eulerian_checks(Criterion& c) {
  const EulerianTable table(7);
  for (int n = 1; n <= 7; ++n) {
    std::vector<Count> leaves(n + 1, 0), roots(n + 2, 0);
    for_each_permutation(n, [&](const Permutation& p) {
      const auto forest = forest_from_permutation(p);
      ++leaves[leaf_count(forest)];
      ++roots[internal_or_singleton_root_count(forest)];
    });
    for (int k = 0; k < n; ++k) {
      c.expect(leaves[k] == table.at(n, k) && count_forests_by_leaves(n, k) == table.at(n, k),
               [&] { return "forests by leaves (" + std::to_string(n) + "," +
                            std::to_string(k) + ")"; });
      c.expect(roots[k + 1] == table.at(n, k),
               [&] { return "forests by internal nodes (" + std::to_string(n) + "," +
                            std::to_string(k) + ")"; });
    }
  }
  for (int m = 2; m <= 7; ++m) {
    std::vector<Count> internal(m + 1, 0);
    for_each_permutation(m, [&](const Permutation& p) {
      if (is_cyclic(p)) ++internal[internal_count(forest_from_permutation(p))];
    });
    for (int k = 1; k < m; ++k)
      c.expect(internal[k] == table.at(m - 1, k - 1),
               [&] { return "trees by internal nodes (" + std::to_string(m) + "," +
                            std::to_string(k) + ")"; });
  }
}

// AC5: postorder spells the cycles; Stanley's tree correspondence.
void postorder_and_stanley(Criterion& c) {
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      CycleDecomposition d;
      d.cycles = postorder_by_tree(forest_from_permutation(p));
      c.expect(from_cycles(d) == p, [&] { return "postorder of " + str(p); });
    });
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      c.expect(canonical_form(stanley_tree(w)) ==
                   canonical_form(nom_tree_of_reversed_cycle(w)),
               [&] { return "Stanley tree of " + str(w); });
    });
}

// AC6: pattern tables.
void pattern_tables(Criterion& c) {
  const Pattern3 p123({1, 2, 3}), p132({1, 3, 2}), p213({2, 1, 3}),
      p231({2, 3, 1}), p312({3, 1, 2});
  const std::vector<int> want123{1, 2, 4, 4, 3, 0, 0, 0, 0};
  for (int n = 1; n <= 9; ++n)
    c.expect(count_avoiders(n, p123) == want123[n - 1],
             [&] { return "123 count at n = " + std::to_string(n); });
  for (int n = 1; n <= 10; ++n) {
    const Count a = count_avoiders(n, p132);
    if (n >= 2)
      c.expect(a - count_avoiders(n - 1, p132) == partitions_count(n - 1),
               [&] { return "132 increment at n = " + std::to_string(n); });
    c.expect(count_avoiders(n, p213) == a,
             [&] { return "213 vs 132 at n = " + std::to_string(n); });
    c.expect(count_avoiders(n, p312) == (Count(1) << (n - 1)),
             [&] { return "312 count at n = " + std::to_string(n); });
    std::vector<Count> by_ima(n + 1, 0);
    for (const auto& p : avoiders(n, p312)) ++by_ima[ima(encode_nom(p))];
    for (int k = 1; k <= n; ++k)
      c.expect(by_ima[k] == binomial(n - 1, k - 1),
               [&] { return "312 by image size (" + std::to_string(n) + "," +
                            std::to_string(k) + ")"; });
  }
  for (int n = 1; n <= 10; ++n) {
    std::set<std::vector<int>> codes;
    for (const auto& p : avoiders(n, p231)) codes.insert(encode_nom(p).word());
    const auto xs = enumerate_X(n);
    for (const auto& f : xs)
      c.expect(codes.count(f.word()) == 1, [&] { return "X member " + str(f) + " not 231-avoiding"; });
    c.expect(Count(xs.size()) == x_count_recurrence(n),
             [&] { return "X recurrence at n = " + std::to_string(n); });
  }
  Count previous = 0;
  for (int n = 1; n <= 10; ++n) {
    const auto r = lower_bound_321(n);
    const Count lower = Count(1) << (n - 1);
    std::ostringstream line;
    line << "321 n=" << n << " count=" << r.count << " 2^(n-1)=" << lower
         << " 2^n=" << (lower * 2);
    if (n >= 2) {
      line << " ratio=" << static_cast<double>(r.count) / static_cast<double>(previous);
      c.expect(r.count >= 2 * previous,
               [&] { return "321 ratio below 2 at n = " + std::to_string(n); });
    }
    line << (r.count >= lower * 2 ? " (>= 2^n)" : " (< 2^n)");
    c.note(line.str());
    c.expect(r.count >= lower && r.criterion_holds && r.append_closed,
             [&] { return "321 data at n = " + std::to_string(n); });
    previous = r.count;
  }
  c.note("321 lower bound: 2^(n-1) holds for every n; 2^n fails at small n");
}

// AC7: flip theorem and involution.
void flip_theorem(Criterion& c) {
  for (int n = 0; n <= 9; ++n)
    for_each_nondecreasing_sef(n, [&](const SubexceedantFunction& f) {
      const auto g = flip(f);
      c.expect(flip(g) == f, [&] { return "flip not an involution at " + str(f); });
      c.expect(phi(g) == complement(reverse(inverse(phi(f)))),
               [&] { return "flip theorem fails at " + str(f); });
    });
}

// AC8: partition bijection.
void partition_bijection(Criterion& c) {
  for (int n = 1; n <= 12; ++n) {
    std::vector<Count> by_largest(n + 1, 0);
    std::set<std::vector<int>> seen;
    for_each_nondecreasing_sef(n, [&](const SubexceedantFunction& f) {
      if (!in_D(f)) return;
      const auto lambda = rho(f);
      c.expect(lambda.weight() == n - 1 && rho_inverse(lambda) == f,
               [&] { return "rho round trip at " + str(f); });
      ++by_largest[plateau1_count(f)];
      seen.insert(lambda.parts());
    });
    const auto all = enumerate_partitions(n - 1);
    c.expect(seen.size() == all.size(),
             [&] { return "rho not onto at n = " + std::to_string(n); });
    for (const auto& lambda : all)
      c.expect(rho(rho_inverse(lambda)) == lambda,
               [&] { return "rho_inverse round trip at " + to_string(lambda); });
    for (int k = 0; k <= n; ++k)
      c.expect(by_largest[k] == partitions_count_largest(n - 1, k) &&
                   d_count(n, k) == by_largest[k],
               [&] { return "d(" + std::to_string(n) + "," + std::to_string(k) + ")"; });
  }
  const auto f = rho_inverse(parse_partition("5+5+5+3+3+2+2+1"));
  c.expect(to_string(f) ==
               "1 1 1 1 1 1 2 3 4 5 6 7 8 9 10 11 12 13 14 17 18 19 20 21 23 24 25",
           [&] { return "55533221 gives " + str(f); });
}

// AC9: reconstruction from pairs.
void reconstruction(Criterion& c) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& pairs : enumerate_ax_pair_sets(n)) {
      const auto r = reconstruct_perm_traced(pairs);
      c.expect(r.perm == phi(sef_from_ax_pairs(pairs)),
               [&] { return "reconstruction of " + to_string(pairs); });
      c.expect(r.max_chain <= n, [&] {
        return "search of " + std::to_string(r.max_chain) + " steps for " + to_string(pairs);
      });
    }
}

}  // namespace

int main() {
  struct Entry {
    const char* id;
    const char* title;
    void (*run)(Criterion&);
  };
  const Entry entries[] = {
      {"AC1", "codec bijection, n <= 8", codec_bijection},
      {"AC2", "worked examples", worked_examples},
      {"AC3", "Catalan counts", catalan_counts},
      {"AC4", "Eulerian cross-checks, n <= 7", eulerian_checks},
      {"AC5", "postorder n <= 7, Stanley tree n <= 6", postorder_and_stanley},
      {"AC6", "pattern tables", pattern_tables},
      {"AC7", "flip theorem and involution, n <= 9", flip_theorem},
      {"AC8", "partition bijection, n <= 12", partition_bijection},
      {"AC9", "reconstruction from pairs, n <= 8", reconstruction},
  };

  int failed = 0;
  for (const auto& e : entries) {
    Criterion c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c);
    } catch (const std::exception& ex) {
      c.expect(false, [&] { return std::string("exception: ") + ex.what(); });
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.passed() ? "[PASS] " : "[FAIL] ") << e.id << ' ' << e.title
              << " (" << c.checks() - c.failed() << '/' << c.checks() << " checks, "
              << secs << " s)\n";
    for (const auto& n : c.notes()) std::cout << "       " << n << '\n';
    for (const auto& f : c.failures()) std::cout << "       failure: " << f << '\n';
    failed += !c.passed();
  }
  std::cout << (std::size(entries) - failed) << '/' << std::size(entries)
            << " criteria passed\n";
  return failed ? 1 : 0;
}
