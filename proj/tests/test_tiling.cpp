#include <doctest.h>

#include <algorithm>
#include <random>

#include "circode/errors.hpp"
#include "circode/tiling.hpp"
#include "fixtures.hpp"

using namespace circode;

namespace {

// Brute unique-representation check, the reference semantics of A (+) B.
bool direct_sum_brute(const ResidueSet& a, const ResidueSet& b) {
  Elem n = a.modulus();
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (Elem x : a.elements())
    for (Elem y : b.elements()) ++hits[static_cast<std::size_t>((x + y) % n)];
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

ResidueSet random_subset(std::mt19937& rng, Elem n, Elem size) {
  std::vector<Elem> pool(static_cast<std::size_t>(n));
  for (Elem i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(size));
  return ResidueSet(n, std::move(pool));
}

}  // namespace

TEST_CASE("tiling construction enforces the normalisation") {
  Tiling t = make_tiling(fixtures::ex90_s0(), fixtures::ex90_d());
  CHECK(t.group_modulus == 90);
  CHECK(static_cast<Elem>(t.left.size()) * static_cast<Elem>(t.right.size()) == 90);
  CHECK_THROWS_AS(make_tiling(fixtures::ex90_s(), fixtures::ex90_d()), error);  // 0 not in left
  CHECK_THROWS_AS(make_tiling(fixtures::ex90_s0(), ResidueSet(90, {0, 1})), error);
}

TEST_CASE("direct sum worked instances") {
  CHECK(is_direct_sum(fixtures::ex90_s0(), subgroup_set(make_subgroup(90, 9))));
  CHECK(is_direct_sum(fixtures::ex90_s0(), fixtures::ex90_d()));
  CHECK(is_direct_sum(full_set(6), ResidueSet(6, {0})));
  CHECK_FALSE(is_direct_sum(full_set(6), ResidueSet(6, {0, 3})));
  CHECK_THROWS_AS(is_direct_sum(full_set(6), full_set(5)), error);
}

TEST_CASE("perfect code verification") {
  CHECK(is_perfect_code(fixtures::ex90_s(), subgroup_set(make_subgroup(90, 9))));
  CHECK(is_perfect_code(fixtures::ex90_s(), fixtures::ex90_d()));
  CHECK(is_perfect_code(fixtures::ex2430_s(), fixtures::ex2430_d()));
  // complete graph: every singleton is a perfect code
  CHECK(is_perfect_code(ResidueSet(6, {1, 2, 3, 4, 5}), ResidueSet(6, {2})));
  CHECK_THROWS_AS(is_perfect_code(ResidueSet(6, {0, 1, 5}), ResidueSet(6, {0})), error);
  CHECK_THROWS_AS(is_perfect_code(ResidueSet(10, {1, 2, 4, 5}), ResidueSet(10, {0})), error);
}

TEST_CASE("find_perfect_code") {
  auto code = find_perfect_code(fixtures::ex90_s());
  REQUIRE(code.has_value());
  CHECK(code->contains(0));
  CHECK(is_perfect_code(fixtures::ex90_s(), *code));

  // divisibility obstruction: |S_0| = 3 does not divide 8
  CHECK_FALSE(find_perfect_code(ResidueSet(8, {1, 7})).has_value());

  // {0,1,2,4,5} does not tile Z_10 (checked exhaustively by the search)
  CHECK_FALSE(find_tiling_complement(ResidueSet(10, {0, 1, 2, 4, 5})).has_value());
  CHECK(find_tiling_complement(ResidueSet(16, {0, 2, 4, 6})).has_value());
}

TEST_CASE("enumerate_perfect_codes") {
  auto codes = enumerate_perfect_codes(fixtures::ex90_s());
  ResidueSet h9 = subgroup_set(make_subgroup(90, 9));
  CHECK(std::find(codes.begin(), codes.end(), h9) != codes.end());
  CHECK(std::find(codes.begin(), codes.end(), fixtures::ex90_d()) != codes.end());
  for (const ResidueSet& d : codes) {
    CHECK(d.contains(0));
    CHECK(is_perfect_code(fixtures::ex90_s(), d));
  }
  CHECK(std::is_sorted(codes.begin(), codes.end(), [](const ResidueSet& x, const ResidueSet& y) {
    return x.elements() < y.elements();
  }));

  // complete graph on 9 vertices: the only code containing 0 is {0}
  auto complete = enumerate_perfect_codes(ResidueSet(9, {1, 2, 3, 4, 5, 6, 7, 8}));
  REQUIRE(complete.size() == 1);
  CHECK(complete[0] == ResidueSet(9, {0}));

  auto fig = enumerate_perfect_codes(ResidueSet(90, {1, 15, 16, 31, 59, 74, 75, 89}));
  CHECK(fig.size() >= 3);

  // the found code is always part of the enumeration
  auto found = find_perfect_code(fixtures::ex90_s());
  CHECK(std::find(codes.begin(), codes.end(), *found) != codes.end());
}

TEST_CASE("translation invariance") {
  std::mt19937 rng(3);
  ResidueSet s = fixtures::ex90_s();
  ResidueSet d = fixtures::ex90_d();
  for (int i = 0; i < 20; ++i) {
    Elem g = static_cast<Elem>(rng() % 90);
    CHECK(is_perfect_code(s, translate(d, g)));
  }
  CHECK_FALSE(is_perfect_code(s, translate(ResidueSet(90, {0, 2}), 1)));
}

TEST_CASE("difference-set criterion matches unique representation") {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 300) {
    Elem n = 4 + static_cast<Elem>(rng() % 21);
    for (Elem sa : divisors(n)) {
      if (sa == 1 || sa == n) continue;
      ResidueSet a = random_subset(rng, n, sa);
      ResidueSet b = random_subset(rng, n, n / sa);
      CHECK(is_direct_sum(a, b) == direct_sum_brute(a, b));
      ++checked;
    }
  }
}

TEST_CASE("prime-power tilings have a periodic factor") {
  // every tiling Z_n = A (+) B with |A| = p^l has A or B periodic
  for (Elem n : {12, 16, 18, 24, 27}) {
    for (Elem pl : {4, 8, 9}) {
      if (n % pl != 0) continue;
      std::mt19937 rng(static_cast<unsigned>(n * 100 + pl));
      for (int trial = 0; trial < 40; ++trial) {
        ResidueSet a = random_subset(rng, n, pl);
        if (!a.contains(0)) continue;
        for (const ResidueSet& b : enumerate_tiling_complements(a, 8)) {
          bool a_periodic = !subgroup_of_periods(a).trivial();
          bool b_periodic = !subgroup_of_periods(b).trivial();
          CHECK((a_periodic || b_periodic));
        }
      }
    }
  }
}

TEST_CASE("periodic-factor quotient equivalence") {
  // For A periodic with period subgroup H: Z_n = A (+) B iff the quotient
  // tiling holds and (B - B) meets H only at 0.
  std::mt19937 rng(23);
  int interesting = 0;
  while (interesting < 60) {
    Elem n = 8 + static_cast<Elem>(rng() % 29);
    ResidueSet base = random_subset(rng, n, 1 + static_cast<Elem>(rng() % (n / 2)));
    for (Elem d : divisors(n)) {
      if (d == n || d == 1) continue;
      // build an <d>-periodic A from the base
      std::vector<Elem> v;
      for (Elem e : base.elements())
        for (Elem h = 0; h < n; h += d) v.push_back(e + h);
      ResidueSet a(n, std::move(v));
      Subgroup periods = subgroup_of_periods(a);
      if (periods.trivial()) continue;
      if (n % static_cast<Elem>(a.size()) != 0) continue;
      ResidueSet b = random_subset(rng, n, n / static_cast<Elem>(a.size()));
      Subgroup h = periods;
      bool lhs = is_direct_sum(a, b);
      bool quotient_ok = is_direct_sum(project(a, h), project(b, h));
      bool b_transversal = intersect(difference_set(b), subgroup_set(h)) == ResidueSet(n, {0});
      CHECK(lhs == (quotient_ok && b_transversal));
      ++interesting;
    }
  }
}

TEST_CASE("quotient tilings lift") {
  // |A/H| = |A| and Z_n/H = A/H (+) B/H imply Z_n = A (+) (B + H)
  std::mt19937 rng(29);
  int hits = 0;
  while (hits < 50) {
    Elem n = 8 + static_cast<Elem>(rng() % 25);
    for (Elem d : divisors(n)) {
      if (d == 1 || d == n) continue;
      Subgroup h = make_subgroup(n, d);
      ResidueSet a = random_subset(rng, n, [&] {
        auto ds = divisors(d);
        return ds[rng() % ds.size()];
      }());
      ResidueSet aq = project(a, h);
      if (aq.size() != a.size()) continue;
      if (d % static_cast<Elem>(aq.size()) != 0) continue;
      ResidueSet bq = random_subset(rng, d, d / static_cast<Elem>(aq.size()));
      if (!is_direct_sum(aq, bq)) continue;
      ResidueSet b_lift = sumset(ResidueSet(n, std::vector<Elem>(bq.elements())), subgroup_set(h));
      CHECK(is_direct_sum(a, b_lift));
      ++hits;
    }
  }
}

TEST_CASE("coprime-order factors swap with subgroups") {
  // Z_n = A (+) B with gcd(|A|, |B|) = 1 gives Z_n = H (+) B = A (+) K for
  // the subgroups of those orders.
  for (Elem n : {12, 15, 20, 45}) {
    std::mt19937 rng(static_cast<unsigned>(n));
    for (Elem sa : divisors(n)) {
      if (sa == 1 || sa == n || gcd(sa, n / sa) != 1) continue;
      for (int trial = 0; trial < 200; ++trial) {
        ResidueSet a = random_subset(rng, n, sa);
        if (!a.contains(0)) continue;
        auto bs = enumerate_tiling_complements(a, 4);
        for (const ResidueSet& b : bs) {
          Subgroup h = make_subgroup(n, n / sa);  // |H| = |A|
          Subgroup k = make_subgroup(n, sa);      // |K| = |B|
          CHECK(is_direct_sum(subgroup_set(h), b));
          CHECK(is_direct_sum(a, subgroup_set(k)));
        }
      }
    }
  }
}
