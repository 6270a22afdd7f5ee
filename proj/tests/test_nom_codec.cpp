#include <doctest.h>

#include <set>

#include "nomcode/codec.hpp"
#include "nomcode/count.hpp"

using namespace nomcode;

namespace {

Permutation P(std::string_view s) { return parse_permutation(s); }
SubexceedantFunction F(std::string_view s) { return parse_code(s); }

// phi(f) as an explicit product of transposition permutations.
Permutation product_of_transpositions(const SubexceedantFunction& f) {
  const int n = f.size();
  Permutation acc = Permutation::identity(n);
  for (int i = 1; i <= n; ++i) acc = compose(acc, transposition(n, i, f(i)));
  return acc;
}

bool same_cycle(const Permutation& p, int a, int b) {
  int v = a;
  do {
    if (v == b) return true;
    v = p(v);
  } while (v != a);
  return false;
}

}  // namespace

TEST_CASE("decoders on worked examples") {
  for (auto decode : {decode_transpositions, decode_insertion,
                      decode_cycle_insertion}) {
    CHECK(decode(F("1121345")) == P("7 6 2 1 3 4 5"));
    CHECK(decode(F("11144")) == P("2 3 1 5 4"));
    CHECK(decode(F("1111")) == P("2 3 4 1"));
    CHECK(decode(F("1")) == P("1"));
    CHECK(decode(SubexceedantFunction::identity(6)) == Permutation::identity(6));
    CHECK(decode(SubexceedantFunction()).empty());
  }
}

TEST_CASE("insertion trace") {
  const std::vector<std::vector<int>> want{
      {1}, {2, 1}, {2, 3, 1}, {2, 3, 1, 4}, {2, 3, 1, 5, 4}};
  CHECK(insertion_trace(F("11144")) == want);
}

TEST_CASE("cycle insertion builds cycles in order") {
  const auto built = decode_cycle_insertion_cycles(F("1132532"));
  CHECK(to_string(built) == "(4,7,2,1)(6,3)(5)");
  CHECK(to_string(cycles(decode_cycle_insertion(F("1132532")))) ==
        "(1,4,7,2)(3,6)(5)");
  CHECK(decode_cycle_insertion_cycles(SubexceedantFunction::identity(4)).count() == 4);
}

TEST_CASE("encoders on worked examples") {
  for (auto encode : {encode_selection_sort, encode_nom}) {
    CHECK(encode(P("2 3 1 5 4")) == F("11144"));
    CHECK(encode(P("5 4 1 3 6 2 8 7")) == F("11132277"));
    CHECK(encode(P("10 6 8 5 1 4 9 3 2 7")) == F("1 1 3 1 1 4 2 3 2 7"));
    CHECK(encode(P("10 8 2 1 9 4 5 6 3 7")) == F("1 1 2 1 3 4 5 6 3 7"));
    CHECK(encode(Permutation::identity(5)) == SubexceedantFunction::identity(5));
  }
}

TEST_CASE("selection sort trace") {
  const auto steps = selection_sort_trace(P("2 3 1 5 4"));
  REQUIRE(steps.size() == 5);
  const std::vector<std::vector<int>> words{
      {2, 3, 1, 5, 4}, {2, 3, 1, 4, 5}, {2, 3, 1, 4, 5}, {2, 1, 3, 4, 5},
      {1, 2, 3, 4, 5}};
  const std::vector<int> values{4, 4, 1, 1, 1};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(steps[k].i == 5 - static_cast<int>(k));
    CHECK(steps[k].word == words[k]);
    CHECK(steps[k].code_value == values[k]);
  }
  // After step i the working word fixes every point >= i.
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [n](const Permutation& p) {
      const auto tr = selection_sort_trace(p);
      for (std::size_t k = 1; k < tr.size(); ++k)
        for (int x = tr[k].i + 1; x <= n; ++x) CHECK(tr[k].word[x - 1] == x);
    });
}

TEST_CASE("grid encoding of 54136287") {
  const auto g = GridPointSet::graph_of(P("5 4 1 3 6 2 8 7"));
  const auto trace = grid_encode_trace(g);
  REQUIRE(trace.size() == 8);
  CHECK(g.height(7) == 8);
  CHECK(trace[0].height(7) == 7);  // step i = 8
  CHECK(trace[1] == trace[0]);     // step i = 7 moves nothing
  CHECK(g.height(5) == 6);
  CHECK(trace[2].height(5) == 2);  // step i = 6
  CHECK(grid_encode(g) == GridPointSet::graph_of(F("11132277")));
  CHECK(to_string(grid_encode(g)) == "(1,1)(2,1)(3,1)(4,3)(5,2)(6,2)(7,7)(8,7)");
  CHECK(grid_decode(GridPointSet::graph_of(F("11132277"))) == g);
}

TEST_CASE("grid procedures: identity and malformed input") {
  const auto id = GridPointSet::graph_of(Permutation::identity(5));
  CHECK(grid_encode(id) == id);
  CHECK(grid_decode(id) == id);
  CHECK_THROWS_AS(grid_encode(GridPointSet({1, 1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(grid_decode(GridPointSet({2, 1})), std::invalid_argument);
  CHECK_THROWS_AS(GridPointSet({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GridPointSet({1, 3}), std::invalid_argument);
}

TEST_CASE("grid encoding states match the selection sort") {
  // After step i: columns < i hold the working permutation, columns >= i the
  // code.
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [n](const Permutation& p) {
      const auto f = encode_nom(p);
      const auto grid = grid_encode_trace(GridPointSet::graph_of(p));
      const auto sort = selection_sort_trace(p);
      for (int k = 0; k < n; ++k) {
        const int i = n - k;
        std::vector<int> working = k + 1 < n ? sort[k + 1].word : std::vector<int>(n, 0);
        for (int x = 1; x <= n; ++x) {
          if (x >= i)
            CHECK(grid[k].height(x) == f(x));
          else
            CHECK(grid[k].height(x) == working[x - 1]);
        }
      }
      CHECK(grid_decode(GridPointSet::graph_of(f)) == GridPointSet::graph_of(p));
    });
}

TEST_CASE("three decoders agree with an explicit product, n <= 8") {
  for (int n = 0; n <= 8; ++n)
    for_each_sef(n, [n](const SubexceedantFunction& f) {
      const auto a = decode_transpositions(f);
      CHECK(a == decode_insertion(f));
      CHECK(a == decode_cycle_insertion(f));
      if (n <= 6) CHECK(a == product_of_transpositions(f));
    });
}

TEST_CASE("encoders agree and invert the decoders, n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      const auto f = encode_nom(p);
      CHECK(encode_selection_sort(p) == f);
      CHECK(phi(f) == p);
    });
    std::set<std::vector<int>> images;
    for_each_sef(n, [&](const SubexceedantFunction& f) {
      CHECK(phi_inverse(phi(f)) == f);
      images.insert(phi(f).word());
    });
    CHECK(Count(images.size()) == factorial(n));
  }
}

TEST_CASE("anti-exceedances are read off the code, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for_each_sef(n, [n](const SubexceedantFunction& f) {
      const auto p = phi(f);
      const auto ax = anti_exceedance_set(p);
      CHECK(imrp(f) == ax);
      for (int i = 1; i <= n; ++i) {
        const bool is_ax = p(i) <= i;
        CHECK((f(i) == p(i)) == is_ax);
      }
    });
}

TEST_CASE("fixed points of the code and cycles of the permutation, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for_each_sef(n, [n](const SubexceedantFunction& f) {
      const auto p = phi(f);
      const auto c = cycles(p);
      std::vector<int> minima;
      for (const auto& cyc : c.cycles) minima.push_back(cyc.front());
      CHECK(fxdp_set(f) == minima);
      CHECK(static_cast<std::size_t>(c.count()) == fxdp_set(f).size());
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (f(i) == f(j)) CHECK(same_cycle(p, i, j));
    });
}
