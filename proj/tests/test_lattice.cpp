#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fixcalc/lattice.hpp"

using namespace fixcalc;

TEST_CASE("universe size bounds") {
  CHECK_THROWS_AS(Universe(0), std::invalid_argument);
  CHECK_THROWS_AS(Universe(64), std::invalid_argument);
  CHECK(Universe(63).size() == 63);
  CHECK(Universe(1).full_mask() == 1);
  CHECK(Universe(5).full_mask() == 0b11111);
}

TEST_CASE("complement examples") {
  Universe u5(5);
  CHECK(complement(Subset::empty(u5)) == Subset::full(u5));
  CHECK(complement(Subset::full(u5)) == Subset::empty(u5));

  // Oracle: membership-by-membership set difference.
  Subset s = Subset::of(u5, {0, 2});
  std::set<int> expect;
  for (int m = 0; m < 5; ++m) {
    if (!s.contains(m)) expect.insert(m);
  }
  CHECK(expect == std::set<int>{1, 3, 4});
  CHECK(complement(s) == Subset::of(u5, {1, 3, 4}));
}

TEST_CASE("leq examples") {
  Universe u5(5);
  CHECK(leq(Subset::empty(u5), Subset::of(u5, {3})));
  CHECK(leq(Subset::of(u5, {1, 2}), Subset::of(u5, {1, 2})));
  CHECK_FALSE(leq(Subset::of(u5, {1, 3}), Subset::of(u5, {1, 2})));

  Universe u3(3);
  CHECK_THROWS_AS(leq(Subset::empty(u5), Subset::empty(u3)), std::invalid_argument);
}

TEST_CASE("join and meet examples") {
  Universe u5(5);
  CHECK(join(Subset::of(u5, {0}), Subset::of(u5, {1})) == Subset::of(u5, {0, 1}));
  CHECK(meet(Subset::of(u5, {0, 1}), Subset::of(u5, {1, 2})) == Subset::of(u5, {1}));
  for (const Subset& s : enumerate_subsets(u5)) {
    CHECK(meet(s, complement(s)) == Subset::empty(u5));
  }
}

TEST_CASE("lattice laws, exhaustive over size 6") {
  Universe u(6);
  std::vector<Subset> all = enumerate_subsets(u);
  for (const Subset& a : all) {
    CHECK(join(a, a) == a);
    CHECK(meet(a, a) == a);
    CHECK(complement(complement(a)) == a);
    for (const Subset& b : all) {
      CHECK(leq(a, join(a, b)));
      CHECK(leq(meet(a, b), a));
      CHECK(join(a, b) == join(b, a));
      CHECK(meet(a, b) == meet(b, a));
      // Complement is an order anti-isomorphism.
      CHECK(leq(a, b) == leq(complement(b), complement(a)));
      // lub/glb characterization against every candidate bound.
      if (leq(a, b)) {
        CHECK(join(a, b) == b);
        CHECK(meet(a, b) == a);
      }
    }
  }
}

TEST_CASE("lattice laws, randomized at size 32") {
  Universe u(32);
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    Subset a(u, rng() & u.full_mask());
    Subset b(u, rng() & u.full_mask());
    Subset c(u, rng() & u.full_mask());
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
    CHECK(leq(a, b) == leq(complement(b), complement(a)));
  }
}

TEST_CASE("powerset enumeration") {
  Universe u2(2);
  std::vector<Subset> all = enumerate_subsets(u2);
  REQUIRE(all.size() == 4);
  CHECK(all[0] == Subset::empty(u2));
  CHECK(all[1] == Subset::of(u2, {0}));
  CHECK(all[2] == Subset::of(u2, {1}));
  CHECK(all[3] == Subset::of(u2, {0, 1}));

  CHECK(enumerate_subsets(Universe(1)).size() == 2);
  CHECK(enumerate_subsets(Universe(4)).size() == 16);

  // Bijection: no duplicates, count 2^n.
  Universe u(10);
  std::set<std::uint64_t> seen;
  for (const Subset& s : enumerate_subsets(u)) seen.insert(s.bits());
  CHECK(seen.size() == 1024);

  CHECK_THROWS_AS(enumerate_subsets(Universe(21)), std::domain_error);
}

TEST_CASE("subset text grammar") {
  Universe u(10);
  CHECK(Subset::empty(u).to_string() == "{}");
  CHECK(Subset::of(u, {5, 0, 2}).to_string() == "{0,2,5}");
  CHECK(Subset::parse(u, "{0,2,5}") == Subset::of(u, {0, 2, 5}));
  CHECK(Subset::parse(u, "{}") == Subset::empty(u));
  CHECK(Subset::parse(u, " { 1 , 2 } ") == Subset::of(u, {1, 2}));

  CHECK_THROWS_AS(Subset::parse(u, "{1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Subset::parse(u, "1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Subset::parse(u, "{10}"), std::invalid_argument);
  CHECK_THROWS_AS(Subset::parse(u, "{1,,2}"), std::invalid_argument);

  // Round trip over random subsets.
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Subset s(u, rng() & u.full_mask());
    CHECK(Subset::parse(u, s.to_string()) == s);
  }
}

TEST_CASE("subset membership bounds") {
  Universe u(4);
  CHECK_THROWS_AS(Subset::of(u, {4}), std::invalid_argument);
  CHECK_THROWS_AS(Subset(u, 0x10), std::invalid_argument);
  CHECK(Subset::range(u, 0, 3) == Subset::full(u));
  CHECK(Subset::range(u, 2, 1) == Subset::empty(u));
}
