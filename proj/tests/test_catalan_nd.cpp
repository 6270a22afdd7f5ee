#include <doctest.h>

#include <set>

#include "nomcode/codec.hpp"
#include "nomcode/nondecreasing.hpp"

using namespace nomcode;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }
SubexceedantFunction F(std::string_view s) { return parse_code(s); }

AxPairs pairs(std::initializer_list<std::pair<int, int>> list) {
  return AxPairs{std::vector<std::pair<int, int>>(list)};
}

// Conditions checked one at a time on every pair list drawn from
// increasing position sets and increasing value sets.
std::size_t brute_force_pair_count(int n) {
  std::size_t count = 0;
  for (unsigned pos_mask = 1; pos_mask < (1u << n); ++pos_mask) {
    std::vector<int> pos;
    for (int b = 0; b < n; ++b)
      if (pos_mask >> b & 1) pos.push_back(b + 1);
    if (pos.back() != n) continue;
    for (unsigned val_mask = 1; val_mask < (1u << n); ++val_mask) {
      std::vector<int> val;
      for (int b = 0; b < n; ++b)
        if (val_mask >> b & 1) val.push_back(b + 1);
      if (val.size() != pos.size() || val.front() != 1) continue;
      bool ok = true;
      for (std::size_t s = 1; s < pos.size(); ++s)
        ok = ok && val[s] <= pos[s - 1] + 1;
      count += ok;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("the fourteen members for n = 4") {
  std::set<std::vector<int>> listed;
  for (const char* w : {"2341", "4312", "2413", "3142", "1342", "4123", "2314",
                        "1423", "2143", "3124", "2134", "1324", "1243", "1234"})
    listed.insert(P(w).word());
  std::set<std::vector<int>> got;
  for (const auto& p : nd_permutations(4)) got.insert(p.word());
  CHECK(got == listed);

  std::set<std::vector<int>> filtered;
  for_each_permutation(4, [&](const Permutation& p) {
    if (is_nd_perm(p)) filtered.insert(p.word());
  });
  CHECK(filtered == listed);
}

TEST_CASE("membership") {
  CHECK(is_nd_perm(Permutation::identity(6)));
  CHECK(is_nd_perm(P("132")));  // code 122
  CHECK_FALSE(is_nd_perm(P("321")));  // code 121
  CHECK(check_characterization(P("471263895")));
  CHECK(check_characterization(Permutation::identity(5)));
  CHECK_FALSE(check_characterization(P("321")));
}

TEST_CASE("class size and characterization, n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    Count members = 0;
    for_each_permutation(n, [&](const Permutation& p) {
      const bool in = is_nd_perm(p);
      members += in;
      CHECK(check_characterization(p) == in);
    });
    CHECK(members == catalan(n));
    CHECK(Count(nd_permutations(n).size()) == catalan(n));
  }
}

TEST_CASE("anti-exceedance pairs") {
  const auto sigma = P("471263895");
  CHECK(ax_pairs_of(sigma) == pairs({{3, 1}, {4, 2}, {6, 3}, {9, 5}}));
  CHECK(to_string(ax_pairs_of(sigma)) == "(3,1)(4,2)(6,3)(9,5)");
  CHECK(ax_pairs_of(Permutation::identity(3)) == pairs({{1, 1}, {2, 2}, {3, 3}}));
  CHECK_THROWS_AS(ax_pairs_of(P("321")), std::invalid_argument);

  CHECK(validate_ax_pairs(pairs({{2, 1}, {3, 3}}), 3));
  CHECK(validate_ax_pairs(pairs({{1, 1}, {2, 2}, {3, 3}}), 3));
  CHECK_FALSE(validate_ax_pairs(pairs({{1, 1}, {3, 3}}), 3));   // 3 > 1 + 1
  CHECK_FALSE(validate_ax_pairs(pairs({{2, 2}, {3, 3}}), 3));   // j_1 != 1
  CHECK_FALSE(validate_ax_pairs(pairs({{1, 1}, {2, 2}}), 3));   // i_k != n
  CHECK_FALSE(validate_ax_pairs(pairs({{2, 1}, {2, 2}}), 2));   // i not increasing
  CHECK_FALSE(validate_ax_pairs(pairs({{1, 1}, {2, 1}}), 2));   // j not increasing
  CHECK_FALSE(validate_ax_pairs(AxPairs{}, 0));
  CHECK(parse_ax_pairs("(3,1)(4,2)(6,3)(9,5)") == ax_pairs_of(sigma));
  CHECK_THROWS_AS(parse_ax_pairs("(3,1,2)"), std::invalid_argument);
}

TEST_CASE("codes from pairs") {
  CHECK(sef_from_ax_pairs(pairs({{3, 1}, {4, 2}, {6, 3}, {9, 5}})) == F("111233555"));
  CHECK(sef_from_ax_pairs(pairs({{5, 1}})) == F("11111"));
  CHECK_THROWS_AS(sef_from_ax_pairs(pairs({{1, 1}, {3, 3}})), std::invalid_argument);

  for (int n = 1; n <= 9; ++n)
    for_each_nondecreasing_sef(n, [n](const SubexceedantFunction& f) {
      const auto ax = ax_pairs_of(phi(f));
      CHECK(validate_ax_pairs(ax, n));
      CHECK(sef_from_ax_pairs(ax) == f);
    });
}

TEST_CASE("enumerating pair tuples") {
  CHECK(enumerate_ax_pair_sets(3).size() == 5);
  const auto one = enumerate_ax_pair_sets(1);
  REQUIRE(one.size() == 1);
  CHECK(one.front() == pairs({{1, 1}}));
  CHECK(enumerate_ax_pair_sets(8).size() == 1430);
  CHECK_THROWS_AS(enumerate_ax_pair_sets(0), std::invalid_argument);

  for (int n = 1; n <= 10; ++n) {
    const auto all = enumerate_ax_pair_sets(n);
    CHECK(Count(all.size()) == catalan(n));
    std::set<std::vector<int>> codes;
    for (const auto& pr : all) {
      CHECK(validate_ax_pairs(pr, n));
      codes.insert(sef_from_ax_pairs(pr).word());
    }
    CHECK(codes.size() == all.size());
    if (n <= 7) CHECK(all.size() == brute_force_pair_count(n));
  }
}

TEST_CASE("reconstruction from pairs") {
  const auto r = reconstruct_perm_traced(pairs({{3, 1}, {4, 2}, {6, 3}, {9, 5}}));
  CHECK(r.perm == P("471263895"));
  CHECK(r.max_chain == 8);
  CHECK(reconstruct_perm(pairs({{1, 1}, {2, 2}, {3, 3}, {4, 4}})) ==
        Permutation::identity(4));
  CHECK_THROWS_AS(reconstruct_perm(pairs({{1, 1}, {3, 3}})), std::invalid_argument);

  for (int n = 1; n <= 8; ++n)
    for (const auto& pr : enumerate_ax_pair_sets(n)) {
      const auto rec = reconstruct_perm_traced(pr);
      const auto f = sef_from_ax_pairs(pr);
      CHECK(rec.perm == phi(f));
      CHECK(rec.max_chain <= n);
      CHECK(is_nd_perm(rec.perm));
      CHECK(ax_pairs_of(rec.perm) == pr);
      CHECK(encode_nom(rec.perm) == f);
    }
}

TEST_CASE("appending a transposition") {
  CHECK(append_transposition(P("1234"), 5) == P("12345"));
  CHECK(append_transposition(P("2341"), 4) == P("23514"));
  CHECK(append_extension_check(P("1234"), 5));
  CHECK(append_extension_check(P("2341"), 4) == is_nd_perm(P("23514")));
  CHECK_THROWS_AS(append_extension_check(P("2341"), 0), std::out_of_range);
  CHECK_THROWS_AS(append_extension_check(P("2341"), 6), std::out_of_range);
  CHECK_THROWS_AS(append_extension_check(P("321"), 3), std::invalid_argument);
  CHECK_THROWS_AS(append_extension_check(Permutation(), 1), std::invalid_argument);

  bool below_bound_can_leave = false;
  for (int n = 2; n <= 8; ++n)
    for (const auto& p : nd_permutations(n - 1)) {
      // p(n-1) <= n-1, so n-1 is an anti-exceedance and p(n-1) = f_{n-1}.
      CHECK(p(n - 1) == encode_nom(p)(n - 1));
      for (int j = p(n - 1); j <= n; ++j) CHECK(append_extension_check(p, j));
      for (int j = 1; j < p(n - 1); ++j) {
        CHECK_THROWS_AS(append_extension_check(p, j), std::out_of_range);
        below_bound_can_leave |= !is_nd_perm(append_transposition(p, j));
      }
    }
  CHECK(below_bound_can_leave);
}
