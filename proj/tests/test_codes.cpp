#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "circode/codes.hpp"
#include "circode/errors.hpp"
#include "circode/tiling.hpp"
#include "fixtures.hpp"

using namespace circode;

namespace {

CodeRecipe zero_recipe(const ResidueSet& s0, Elem p, int ell) {
  CodeRecipe out;
  enumerate_recipes(s0, p, ell, [&](const CodeRecipe& r) {
    out = r;
    return false;
  });
  return out;
}

}  // namespace

TEST_CASE("recipe construction on the running example") {
  ResidueSet s0 = fixtures::ex90_s0();
  CodeRecipe zero = zero_recipe(s0, 3, 2);
  REQUIRE(zero.taus.size() == 1);
  CHECK(zero.taus[0] == std::vector<Elem>{0, 0});
  CHECK_FALSE(zero.tau_final.has_value());

  // all-zero tau: D_0 = {0,3}, J_1 = {0,18,36,54,72}
  CHECK(build_code(s0, zero) == fixtures::ex90_d());

  // tau_1(3) = 6 shifts the second base point onto the subgroup code
  CodeRecipe shifted = zero;
  shifted.taus[0][1] = 6;
  CHECK(build_code(s0, shifted) == subgroup_set(make_subgroup(90, 9)));

  // tau_1(3) = 12 gives the third code of the family
  shifted.taus[0][1] = 12;
  CHECK(build_code(s0, shifted) == ResidueSet(90, {0, 15, 18, 33, 36, 51, 54, 69, 72, 87}));

  // out-of-range or misaligned tau values are rejected
  shifted.taus[0][1] = 9;
  CHECK_THROWS_AS(build_code(s0, shifted), error);
  shifted.taus[0][1] = 18;
  CHECK_THROWS_AS(build_code(s0, shifted), error);
  shifted.taus[0] = {0, 6, 0};
  CHECK_THROWS_AS(build_code(s0, shifted), error);
}

TEST_CASE("recipes of the running example enumerate three distinct codes") {
  ResidueSet s0 = fixtures::ex90_s0();
  auto codes = enumerate_constructed_codes(s0, 3, 2);
  REQUIRE(codes.size() == 3);
  std::set<std::string> seen;
  for (const ResidueSet& d : codes) {
    CHECK(d.contains(0));
    CHECK(d.size() == 10);
    CHECK(is_perfect_code(fixtures::ex90_s(), d));
    seen.insert(to_text(d));
  }
  CHECK(seen.size() == 3);

  // all constructed codes appear in the oracle enumeration
  auto oracle = enumerate_perfect_codes(fixtures::ex90_s());
  for (const ResidueSet& d : codes)
    CHECK(std::find(oracle.begin(), oracle.end(), d) != oracle.end());
}

TEST_CASE("t = 1 gives exactly the subgroup code") {
  // S_0 = {0,1,8} in Z_9 is aperiodic with the length-2 series through <3>
  ResidueSet s0(9, {0, 1, 8});
  REQUIRE(is_pyramidal(s0, 3, 1));
  auto codes = enumerate_constructed_codes(s0, 3, 1);
  REQUIRE(codes.size() == 1);
  CHECK(codes[0] == subgroup_set(make_subgroup(9, 3)));
}

TEST_CASE("periodic wreath instance builds its three codes") {
  ResidueSet s0(18, {0, 1, 5, 6, 7, 11, 12, 13, 17});
  CodeRecipe zero = zero_recipe(s0, 3, 2);
  CHECK(zero.taus.empty());
  REQUIRE(zero.tau_final.has_value());
  CHECK(*zero.tau_final == std::vector<Elem>{0, 0});

  auto codes = enumerate_constructed_codes(s0, 3, 2);
  REQUIRE(codes.size() == 3);
  std::vector<ResidueSet> expected{ResidueSet(18, {0, 3}), ResidueSet(18, {0, 9}),
                                   ResidueSet(18, {0, 15})};
  for (const ResidueSet& d : expected)
    CHECK(std::find(codes.begin(), codes.end(), d) != codes.end());
  ResidueSet s(18, {1, 5, 6, 7, 11, 12, 13, 17});
  for (const ResidueSet& d : codes) CHECK(is_perfect_code(s, d));
  // the subgroup <9> is among them
  CHECK(std::find(codes.begin(), codes.end(), subgroup_set(make_subgroup(18, 9))) != codes.end());
}

TEST_CASE("figure set has 81 recipe codes") {
  ResidueSet s0 = fixtures::fig90_s0();
  auto series = longest_series(s0, 3, 2);
  REQUIRE(series.has_value());
  CHECK(lower_bound(*series) == 81);
  CHECK(recipe_count(*series) == 81);

  auto codes = enumerate_constructed_codes(s0, 3, 2);
  REQUIRE(codes.size() == 81);
  std::set<std::string> seen;
  ResidueSet s(90, {1, 15, 16, 31, 59, 74, 75, 89});
  for (const ResidueSet& d : codes) {
    CHECK(d.size() == 10);
    CHECK(is_perfect_code(s, d));
    seen.insert(to_text(d));
  }
  CHECK(seen.size() == 81);
}

TEST_CASE("lower bound values") {
  CHECK(lower_bound(*longest_series(fixtures::ex90_s0(), 3, 2)) == 3);
  CHECK(lower_bound(*longest_series(fixtures::fig90_s0(), 3, 2)) == 81);
  CHECK(lower_bound(*longest_series(ResidueSet(9, {0, 1, 8}), 3, 1)) == 1);
  CHECK(lower_bound(*longest_series(ResidueSet(18, {0, 1, 5, 6, 7, 11, 12, 13, 17}), 3, 2)) == 3);
  // the 2430 instance: bound = recipe count, computed two ways
  auto big = longest_series(fixtures::ex2430_s0(), 3, 3);
  CHECK(lower_bound(*big) == recipe_count(*big));
}

TEST_CASE("bound is attained or exceeded by the oracle") {
  for (const ResidueSet& s0 : {fixtures::ex90_s0(), fixtures::fig90_s0()}) {
    auto series = longest_series(s0, 3, 2);
    std::vector<Elem> s(s0.elements().begin() + 1, s0.elements().end());
    auto oracle = enumerate_perfect_codes(ResidueSet(s0.modulus(), std::move(s)));
    CHECK(BigInt(oracle.size()) >= lower_bound(*series));
  }
}

TEST_CASE("recipes stream in lexicographic tau order") {
  ResidueSet s0 = fixtures::fig90_s0();
  std::vector<std::vector<Elem>> flattened;
  enumerate_recipes(s0, 3, 2, [&](const CodeRecipe& recipe) {
    std::vector<Elem> flat;
    for (const auto& tau : recipe.taus) flat.insert(flat.end(), tau.begin(), tau.end());
    if (recipe.tau_final) flat.insert(flat.end(), recipe.tau_final->begin(), recipe.tau_final->end());
    flattened.push_back(std::move(flat));
    return true;
  });
  REQUIRE(flattened.size() == 81);
  CHECK(flattened.front() == std::vector<Elem>(flattened.front().size(), 0));
  CHECK(std::is_sorted(flattened.begin(), flattened.end()));
}

TEST_CASE("subgroup-code dichotomy over a small sweep") {
  // with the residues of S_0 distinct mod p^l the subgroup <p^l> is among
  // the codes; otherwise no code is a subgroup
  struct Case {
    Elem n, p;
    int ell;
  };
  int seen = 0;
  for (const Case& c : {Case{12, 2, 2}, Case{16, 2, 2}, Case{20, 2, 2}, Case{18, 3, 2},
                        Case{27, 3, 2}, Case{36, 3, 2}}) {
    Elem pl = ipow(c.p, c.ell);
    ResidueSet h = subgroup_set(make_subgroup(c.n, pl));
    // inverse-closed connection sets via pair choices
    std::vector<Elem> half;
    for (Elem x = 1; 2 * x < c.n; ++x) half.push_back(x);
    Elem pairs = (pl - 1) / 2;
    bool need_half = (pl - 1) % 2 == 1;
    std::vector<std::size_t> idx(static_cast<std::size_t>(pairs));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    while (true) {
      std::vector<Elem> members;
      for (std::size_t i : idx) {
        members.push_back(half[i]);
        members.push_back(c.n - half[i]);
      }
      if (need_half) members.push_back(c.n / 2);
      ResidueSet s(c.n, std::move(members));
      if (static_cast<Elem>(s.size()) == pl - 1 && generates(s)) {
        auto codes = enumerate_perfect_codes(s);
        if (!codes.empty()) {
          ++seen;
          bool subgroup_in = std::find(codes.begin(), codes.end(), h) != codes.end();
          std::vector<Elem> ext(s.elements());
          ext.push_back(0);
          CHECK(subgroup_in == distinct_mod(ResidueSet(c.n, std::move(ext)), pl));
          // the only subgroup of the right order is <p^l> itself
          for (const ResidueSet& d : codes)
            if (d != h) CHECK(d != subgroup_set(make_subgroup(c.n, c.n / static_cast<Elem>(d.size()))));
        }
      }
      std::size_t j = idx.size();
      while (j > 0 && idx[j - 1] == half.size() - (idx.size() - (j - 1))) --j;
      if (j == 0) break;
      ++idx[j - 1];
      for (std::size_t k2 = j; k2 < idx.size(); ++k2) idx[k2] = idx[k2 - 1] + 1;
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("recipe validation") {
  ResidueSet s0 = fixtures::ex90_s0();
  CodeRecipe recipe = zero_recipe(s0, 3, 2);
  // wrong series: the short admissible series is not the longest
  recipe.series = make_series(90, 3, 2, std::vector<Elem>{90, 9, 1});
  CHECK_THROWS_AS(build_code(s0, recipe), error);
  // a recipe for a different set
  CHECK_THROWS_AS(build_code(fixtures::fig90_s0(), zero_recipe(s0, 3, 2)), error);
  CHECK_THROWS_AS(enumerate_recipes(ResidueSet(16, {0, 2, 4, 6}), 2, 2,
                                    [](const CodeRecipe&) { return true; }),
                  error);  // not pyramidal
}
