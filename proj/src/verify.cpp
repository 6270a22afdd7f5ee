#include "nomcode/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

#include "nomcode/avoidance.hpp"
#include "nomcode/codec.hpp"
#include "nomcode/forest.hpp"
#include "nomcode/nondecreasing.hpp"
#include "nomcode/permutation.hpp"
#include "nomcode/subexceedant.hpp"

namespace nomcode {

namespace {

// Verification loops may be asked for any size the caller allows; the
// caller is responsible for bounding max_n.
constexpr int kNoBound = 1 << 20;

class Check {
 public:
  Check(std::vector<CheckResult>& out, std::string suite, std::string name)
      : out_(out), index_(out.size()) {
    out.push_back(CheckResult{std::move(suite), std::move(name), true, {}});
  }

  // Records the first failure only.
  void expect(bool ok, const std::function<std::string()>& context) {
    CheckResult& r = out_[index_];
    if (ok || !r.passed) return;
    r.passed = false;
    r.detail = context();
  }
  bool failed() const { return !out_[index_].passed; }

 private:
  std::vector<CheckResult>& out_;
  std::size_t index_;
};

std::string at(int n, const std::string& what) {
  return "n=" + std::to_string(n) + " " + what;
}

std::string show(const Permutation& p) { return "[" + to_string(p) + "]"; }
std::string show(const SubexceedantFunction& f) {
  return "[" + to_string(f) + "]";
}

bool shares_cycle(const Permutation& p, int a, int b) {
  int v = a;
  do {
    if (v == b) return true;
    v = p(v);
  } while (v != a);
  return false;
}

std::vector<int> cycle_minima(const Permutation& p) {
  std::vector<int> out;
  for (const auto& c : cycles(p).cycles) out.push_back(c.front());
  return out;
}

// ---------------------------------------------------------------- codec

void codec_suite(int max_n, std::vector<CheckResult>& out) {
  const std::string s = "codec";
  {
    Check c(out, s, "three decoders agree");
    for (int n = 1; n <= max_n && !c.failed(); ++n)
      for_each_sef(
          n,
          [&](const SubexceedantFunction& f) {
            const auto a = decode_transpositions(f);
            c.expect(a == decode_insertion(f) && a == decode_cycle_insertion(f),
                     [&] { return at(n, show(f)); });
          },
          kNoBound);
  }
  {
    Check c(out, s, "two encoders agree");
    for (int n = 1; n <= max_n && !c.failed(); ++n)
      for_each_permutation(
          n,
          [&](const Permutation& p) {
            c.expect(encode_selection_sort(p) == encode_nom(p),
                     [&] { return at(n, show(p)); });
          },
          kNoBound);
  }
  {
    Check c(out, s, "code to permutation to code");
    for (int n = 1; n <= max_n && !c.failed(); ++n)
      for_each_sef(
          n,
          [&](const SubexceedantFunction& f) {
            c.expect(phi_inverse(phi(f)) == f, [&] { return at(n, show(f)); });
          },
          kNoBound);
  }
  {
    Check c(out, s, "permutation to code to permutation");
    for (int n = 1; n <= max_n && !c.failed(); ++n)
      for_each_permutation(
          n,
          [&](const Permutation& p) {
            c.expect(phi(phi_inverse(p)) == p, [&] { return at(n, show(p)); });
          },
          kNoBound);
  }
  {
    Check rightmost(out, s, "rightmost occurrences are the anti-exceedances");
    Check letters(out, s, "code letter equals image exactly at anti-exceedances");
    Check differ(out, s, "code and permutation differ exactly on exceedances");
    for (int n = 1; n <= max_n; ++n)
      for_each_sef(
          n,
          [&](const SubexceedantFunction& f) {
            const auto p = phi(f);
            const auto ax = anti_exceedance_set(p);
            rightmost.expect(imrp(f) == ax, [&] { return at(n, show(f)); });
            std::vector<int> same, diff;
            for (int i = 1; i <= n; ++i) (f(i) == p(i) ? same : diff).push_back(i);
            letters.expect(same == ax, [&] { return at(n, show(f)); });
            differ.expect(diff == exceedance_set(p),
                          [&] { return at(n, show(f)); });
          },
          kNoBound);
  }
  {
    Check minima(out, s, "fixed points of the code are cycle minima");
    Check count(out, s, "cycle count equals fixed point count");
    Check shared(out, s, "equal code values lie in one cycle");
    for (int n = 1; n <= max_n; ++n)
      for_each_sef(
          n,
          [&](const SubexceedantFunction& f) {
            const auto p = phi(f);
            minima.expect(fxdp_set(f) == cycle_minima(p),
                          [&] { return at(n, show(f)); });
            count.expect(
                static_cast<std::size_t>(cycles(p).count()) == fxdp_set(f).size(),
                [&] { return at(n, show(f)); });
            bool ok = true;
            for (int i = 1; i <= n && ok; ++i)
              for (int j = i + 1; j <= n && ok; ++j)
                if (f(i) == f(j)) ok = shares_cycle(p, i, j);
            shared.expect(ok, [&] { return at(n, show(f)); });
          },
          kNoBound);
  }
  {
    Check enc(out, s, "grid encoding yields the code graph");
    Check dec(out, s, "grid decoding yields the permutation graph");
    for (int n = 1; n <= max_n; ++n)
      for_each_permutation(
          n,
          [&](const Permutation& p) {
            const auto f = encode_nom(p);
            enc.expect(grid_encode(GridPointSet::graph_of(p)) ==
                           GridPointSet::graph_of(f),
                       [&] { return at(n, show(p)); });
            dec.expect(grid_decode(GridPointSet::graph_of(f)) ==
                           GridPointSet::graph_of(p),
                       [&] { return at(n, show(f)); });
          },
          kNoBound);
  }
}

// ---------------------------------------------------------------- trees

void trees_suite(int max_n, std::vector<CheckResult>& out) {
  const std::string s = "trees";
  {
    Check roots(out, s, "forest roots are the cycle minima");
    Check leaves(out, s, "leaves are exceedance letters");
    for (int n = 1; n <= max_n; ++n)
      for_each_permutation(
          n,
          [&](const Permutation& p) {
            const auto forest = forest_from_permutation(p);
            std::vector<int> root_labels;
            for (const auto& t : forest.trees) root_labels.push_back(t.label);
            roots.expect(root_labels == cycle_minima(p) &&
                             forest.node_count() == static_cast<std::size_t>(n),
                         [&] { return at(n, show(p)); });
            // A leaf i is a letter i = p(x) with x < i.
            std::set<int> exceedance_letters;
            for (int x : exceedance_set(p)) exceedance_letters.insert(p(x));
            std::vector<int> leaf_labels;
            std::function<void(const TreeNode&, bool)> walk =
                [&](const TreeNode& t, bool is_root) {
                  if (t.children.empty() && !is_root)
                    leaf_labels.push_back(t.label);
                  for (const auto& ch : t.children) walk(ch, false);
                };
            for (const auto& t : forest.trees) walk(t, true);
            bool ok = true;
            for (int v : leaf_labels) ok = ok && exceedance_letters.count(v);
            leaves.expect(ok, [&] { return at(n, show(p)); });
          },
          kNoBound);
  }
  {
    Check c(out, s, "postorder of each tree is its cycle");
    for (int n = 1; n <= max_n && !c.failed(); ++n)
      for_each_permutation(
          n,
          [&](const Permutation& p) {
            CycleDecomposition d;
            d.cycles = postorder_by_tree(forest_from_permutation(p));
            c.expect(from_cycles(d) == p, [&] { return at(n, show(p)); });
          },
          kNoBound);
  }
  {
    Check c(out, s, "adding a maximal node as a last child");
    for (int n = 2; n <= max_n && !c.failed(); ++n)
      for_each_permutation(
          n - 1,
          [&](const Permutation& p) {
            if (!is_cyclic(p)) return;
            const auto base = forest_from_permutation(p);
            auto grown = p.word();
            grown.push_back(n);
            const Permutation q(grown);
            for (int i = 1; i < n; ++i)
              c.expect(extend_with_max(base, i) ==
                           forest_from_permutation(
                               compose(q, transposition(n, i, n))),
                       [&] { return at(n, show(p) + " i=" + std::to_string(i)); });
          },
          kNoBound);
  }
  {
    Check c(out, s, "Stanley tree equals the tree of the reversed cycle");
    for (int n = 1; n <= max_n && !c.failed(); ++n)
      for_each_permutation(
          n,
          [&](const Permutation& w) {
            c.expect(canonical_form(stanley_tree(w)) ==
                         canonical_form(nom_tree_of_reversed_cycle(w)),
                     [&] { return at(n, show(w)); });
          },
          kNoBound);
  }
  const EulerianTable table(max_n + 1);
  {
    Check c(out, s, "trees by internal nodes give Eulerian numbers");
    for (int n = 1; n + 1 <= max_n && !c.failed(); ++n)
      for (int k = 1; k <= n; ++k)
        c.expect(count_trees_by_internal_nodes(n + 1, k, kNoBound) ==
                     table.at(n, k - 1),
                 [&] { return at(n, "k=" + std::to_string(k)); });
  }
  {
    Check c(out, s, "forests by leaves give Eulerian numbers");
    for (int n = 1; n <= max_n && !c.failed(); ++n)
      for (int k = 0; k < n; ++k)
        c.expect(count_forests_by_leaves(n, k, kNoBound) == table.at(n, k),
                 [&] { return at(n, "k=" + std::to_string(k)); });
  }
  {
    Check c(out, s, "forests by internal nodes or singleton roots");
    for (int n = 1; n <= max_n && !c.failed(); ++n)
      for (int k = 1; k <= n; ++k)
        c.expect(count_forests_by_internal_or_singleton_roots(n, k, kNoBound) ==
                     table.at(n, k - 1),
                 [&] { return at(n, "k=" + std::to_string(k)); });
  }
}

// -------------------------------------------------------------- catalan

void catalan_suite(int max_n, std::vector<CheckResult>& out) {
  const std::string s = "catalan";
  {
    Check c(out, s, "non-decreasing codes are counted by Catalan numbers");
    for (int n = 0; n <= max_n; ++n)
      c.expect(Count(enumerate_nondecreasing_sefs(n, kNoBound).size()) ==
                       catalan(n) &&
                   catalan(n) == binomial(2 * n, n) / (n + 1),
               [&] { return at(n, ""); });
  }
  {
    Check count(out, s, "class size by filtering all permutations");
    Check characterization(out, s, "structural characterization of the class");
    for (int n = 1; n <= max_n; ++n) {
      Count members = 0;
      for_each_permutation(
          n,
          [&](const Permutation& p) {
            const bool in = is_nd_perm(p);
            if (in) ++members;
            characterization.expect(in == check_characterization(p),
                                    [&] { return at(n, show(p)); });
          },
          kNoBound);
      count.expect(members == catalan(n), [&] { return at(n, ""); });
    }
  }
  {
    Check paths(out, s, "lattice path and r-vector round trips");
    Check split(out, s, "splitting at the first fixed point past 1");
    Check pairs(out, s, "anti-exceedance pairs round trip");
    for (int n = 1; n <= max_n; ++n)
      for_each_nondecreasing_sef(
          n,
          [&](const SubexceedantFunction& f) {
            paths.expect(from_lattice_path(to_lattice_path(f)) == f &&
                             sef_from_r_vector(r_vector(f)) == f,
                         [&] { return at(n, show(f)); });
            const auto [left, right] = catalan_split(f);
            split.expect(is_nondecreasing(left) && is_nondecreasing(right) &&
                             left.size() + right.size() == n - 1,
                         [&] { return at(n, show(f)); });
            const auto ax = ax_pairs_of(phi(f));
            pairs.expect(validate_ax_pairs(ax, n) && sef_from_ax_pairs(ax) == f,
                         [&] { return at(n, show(f)); });
          },
          kNoBound);
  }
  {
    Check count(out, s, "pair tuples are counted by Catalan numbers");
    Check rebuild(out, s, "reconstruction from pairs matches decoding");
    for (int n = 1; n <= max_n; ++n) {
      const auto all = enumerate_ax_pair_sets(n, kNoBound);
      std::set<std::vector<int>> codes;
      for (const auto& pr : all) {
        const auto f = sef_from_ax_pairs(pr);
        codes.insert(f.word());
        const auto r = reconstruct_perm_traced(pr);
        rebuild.expect(r.perm == phi(f) && r.max_chain <= n &&
                           ax_pairs_of(r.perm) == pr,
                       [&] { return at(n, to_string(pr)); });
      }
      count.expect(Count(all.size()) == catalan(n) && codes.size() == all.size(),
                   [&] { return at(n, ""); });
    }
  }
  {
    Check c(out, s, "appending a transposition stays in the class");
    for (int n = 2; n <= max_n && !c.failed(); ++n)
      for (const auto& p : nd_permutations(n - 1, kNoBound))
        for (int j = p(n - 1); j <= n; ++j)
          c.expect(append_extension_check(p, j),
                   [&] { return at(n, show(p) + " j=" + std::to_string(j)); });
  }
}

// ----------------------------------------------------------------- flip

void flip_suite(int max_n, std::vector<CheckResult>& out) {
  const std::string s = "flip";
  Check involution(out, s, "flip is an involution");
  Check theorem(out, s, "flip mirrors reverse-complement of the inverse");
  Check plateaus(out, s, "flip starts with n - f_n plateaus of 1");
  Check append(out, s, "flip of a code with one more letter");
  Check counts(out, s, "213 and 132 avoiders are equinumerous");
  for (int n = 1; n <= max_n; ++n) {
    for_each_nondecreasing_sef(
        n,
        [&](const SubexceedantFunction& f) {
          const auto g = flip(f);
          involution.expect(is_nondecreasing(g) && flip(g) == f,
                            [&] { return at(n, show(f)); });
          theorem.expect(flip_theorem_check(f), [&] { return at(n, show(f)); });
          plateaus.expect(plateau1_count(g) == n - f(n),
                          [&] { return at(n, show(f)); });
          if (n >= 2) {
            const int j = f(n);
            const SubexceedantFunction prefix(
                std::vector<int>(f.word().begin(), f.word().end() - 1));
            auto w = flip(prefix).word();
            for (int t = 0; t < j - 1; ++t) ++w[w.size() - 1 - t];
            w.insert(w.begin(), 1);
            append.expect(SubexceedantFunction(w) == g,
                          [&] { return at(n, show(f)); });
          }
        },
        kNoBound);
    counts.expect(count_avoiders(n, Pattern3({2, 1, 3}), kNoBound) ==
                      count_avoiders(n, Pattern3({1, 3, 2}), kNoBound),
                  [&] { return at(n, ""); });
  }
}

// ------------------------------------------------------------- patterns

void patterns_suite(int max_n, std::vector<CheckResult>& out) {
  const std::string s = "patterns";
  const Pattern3 p123({1, 2, 3}), p132({1, 3, 2}), p231({2, 3, 1}),
      p312({3, 1, 2}), p321({3, 2, 1});
  {
    Check c(out, s, "123 avoiders: 1, 2, 4, 4, 3, then none");
    const std::vector<int> expected{1, 2, 4, 4, 3};
    for (int n = 1; n <= max_n; ++n) {
      const int want = n <= 5 ? expected[n - 1] : 0;
      c.expect(count_avoiders(n, p123, kNoBound) == want,
               [&] { return at(n, ""); });
    }
  }
  {
    Check diff(out, s, "132 avoider increments are partition numbers");
    Check inV(out, s, "132 avoiders have codes in V");
    Check vshape(out, s, "V codes: exceedances and trailing fixed points");
    Check blocks(out, s, "block criterion matches 132 avoidance");
    Check exc(out, s, "d(n,k) counts 132 avoiders by exceedances");
    Count prev = 0;
    for (int n = 1; n <= max_n; ++n) {
      const auto av = avoiders(n, p132, kNoBound);
      const Count a = av.size();
      diff.expect(a == a_sequence(n) && (n == 1 || a - prev == partitions_count(n - 1)),
                  [&] { return at(n, ""); });
      prev = a;
      std::vector<Count> by_exc(static_cast<std::size_t>(n) + 1, 0);
      for (const auto& p : av) {
        const auto f = encode_nom(p);
        inV.expect(in_V(f), [&] { return at(n, show(p)); });
        if (p(n) < n) ++by_exc[exceedance_set(p).size()];
      }
      // At n = 1 the identity is in D but has sigma(n) = n.
      for (int k = 0; k <= n && n >= 2; ++k)
        exc.expect(by_exc[k] == d_count(n, k, kNoBound),
                   [&] { return at(n, "k=" + std::to_string(k)); });
      for_each_nondecreasing_sef(
          n,
          [&](const SubexceedantFunction& f) {
            if (in_V(f)) {
              const int k = plateau1_count(f);
              std::vector<int> want;
              for (int i = 1; i <= k; ++i) want.push_back(i);
              bool tail = true;
              const auto fixed = fxdp_set(f);
              for (int i : fixed)
                if (i > 1)
                  for (int j = i; j <= n; ++j) tail = tail && f(j) == j;
              vshape.expect(exceedance_set(phi(f)) == want && tail,
                            [&] { return at(n, show(f)); });
            }
            bool fixed_past_one = false;
            for (int i = 2; i <= n; ++i) fixed_past_one |= f(i) == i;
            if (fixed_past_one) return;
            blocks.expect(check_block_condition(f) == !contains_pattern(phi(f), p132),
                          [&] { return at(n, show(f)); });
          },
          kNoBound);
    }
  }
  {
    Check trip(out, s, "rho is a bijection onto partitions");
    Check largest(out, s, "d(n,k) equals partitions by largest part");
    Check recur(out, s, "d(n,k) = d(n-1,k-1) + d(n-k,k)");
    Check lifts(out, s, "both lifts stay in D");
    std::vector<std::vector<Count>> d(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) {
      d[n].assign(static_cast<std::size_t>(n) + 1, 0);
      std::set<std::vector<int>> images;
      for_each_nondecreasing_sef(
          n,
          [&](const SubexceedantFunction& f) {
            if (!in_D(f)) return;
            const int k = plateau1_count(f);
            ++d[n][k];
            const auto lambda = rho(f);
            images.insert(lambda.parts());
            trip.expect(lambda.weight() == n - 1 && lambda.largest() == k &&
                            rho_inverse(lambda) == f &&
                            decompose_blocks(f).sizes().front() == k,
                        [&] { return at(n, show(f)); });
            const auto one = lift1(f);
            const auto two = lift2(f, k);
            lifts.expect(in_D(one) && plateau1_count(one) == k + 1 &&
                             in_D(two) && plateau1_count(two) == k &&
                             two.size() == n + k,
                         [&] { return at(n, show(f)); });
          },
          kNoBound);
      const auto parts = enumerate_partitions(n - 1);
      bool all_hit = images.size() == parts.size();
      for (const auto& lambda : parts) {
        all_hit = all_hit && images.count(lambda.parts());
        trip.expect(rho(rho_inverse(lambda)) == lambda,
                    [&] { return at(n, to_string(lambda)); });
      }
      trip.expect(all_hit, [&] { return at(n, "image"); });
      for (int k = 0; k <= n; ++k) {
        largest.expect(d[n][k] == partitions_count_largest(n - 1, k),
                       [&] { return at(n, "k=" + std::to_string(k)); });
        auto get = [&](int m, int j) -> Count {
          if (m < 1 || j < 0 || j > m) return 0;
          return d[m][j];
        };
        if (n >= 2 && k >= 1)
          recur.expect(d[n][k] == get(n - 1, k - 1) + get(n - k, k),
                       [&] { return at(n, "k=" + std::to_string(k)); });
      }
    }
  }
  {
    Check y(out, s, "312 avoiders are exactly the codes in Y");
    Check binom(out, s, "Y by image size is binomial");
    for (int n = 1; n <= max_n; ++n) {
      for_each_nondecreasing_sef(
          n,
          [&](const SubexceedantFunction& f) {
            y.expect(in_Y(f) == !contains_pattern(phi(f), p312),
                     [&] { return at(n, show(f)); });
          },
          kNoBound);
      Count total = 0;
      for (int k = 1; k <= n; ++k) {
        const Count c = y_count_by_ima(n, k, kNoBound);
        total += c;
        binom.expect(c == binomial(n - 1, k - 1),
                     [&] { return at(n, "k=" + std::to_string(k)); });
      }
      binom.expect(total == count_avoiders(n, p312, kNoBound) &&
                       total == Count(1) << (n - 1),
                   [&] { return at(n, "total"); });
    }
  }
  {
    Check subset(out, s, "X codes decode to 231 avoiders");
    Check recur(out, s, "X count recurrence");
    for (int n = 1; n <= max_n; ++n) {
      const auto xs = enumerate_X(n, kNoBound);
      for (const auto& f : xs)
        subset.expect(is_nondecreasing(f) && !contains_pattern(phi(f), p231),
                      [&] { return at(n, show(f)); });
      recur.expect(Count(xs.size()) == x_count_recurrence(n),
                   [&] { return at(n, ""); });
    }
  }
  {
    Check criterion(out, s, "321 avoidance by increasing exceedance letters");
    Check closed(out, s, "321 avoiders closed under appending n-1 or n");
    for (int n = 1; n <= max_n; ++n) {
      const auto r = lower_bound_321(n, kNoBound);
      criterion.expect(r.criterion_holds, [&] { return at(n, ""); });
      closed.expect(r.append_closed, [&] { return at(n, ""); });
    }
  }
  {
    Check c(out, s, "avoider counts agree with filtering all permutations");
    for (int n = 1; n <= max_n && !c.failed(); ++n) {
      std::array<Count, 6> filtered{};
      for_each_permutation(
          n,
          [&](const Permutation& p) {
            if (!is_nd_perm(p)) return;
            for (std::size_t t = 0; t < 6; ++t)
              if (!contains_pattern(p, all_patterns3()[t])) ++filtered[t];
          },
          kNoBound);
      for (std::size_t t = 0; t < 6; ++t)
        c.expect(filtered[t] == count_avoiders(n, all_patterns3()[t], kNoBound),
                 [&] { return at(n, all_patterns3()[t].to_string()); });
    }
  }
}

using SuiteFn = void (*)(int, std::vector<CheckResult>&);

SuiteFn lookup(std::string_view name) {
  if (name == "codec") return codec_suite;
  if (name == "trees") return trees_suite;
  if (name == "catalan") return catalan_suite;
  if (name == "flip") return flip_suite;
  if (name == "patterns") return patterns_suite;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"codec", "trees", "catalan",
                                              "flip", "patterns"};
  return names;
}

bool is_suite(std::string_view name) {
  return name == "all" || lookup(name) != nullptr;
}

std::vector<CheckResult> run_suite(std::string_view suite, int max_n) {
  if (max_n < 1) throw std::invalid_argument("verify: max_n must be >= 1");
  std::vector<CheckResult> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) lookup(name)(max_n, out);
    return out;
  }
  const SuiteFn fn = lookup(suite);
  if (!fn)
    throw std::invalid_argument("verify: unknown suite '" + std::string(suite) +
                                "'");
  fn(max_n, out);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace nomcode
