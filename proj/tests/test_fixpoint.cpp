#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixcalc/fixpoint.hpp"
#include "fixcalc/generator.hpp"
#include "fixcalc/lattice.hpp"

using namespace fixcalc;

namespace {

// Test-side oracle: smallest fixed point by scanning the whole powerset,
// independent of both Kleene iteration and the library's brute-force path.
Subset oracle_least_fixed(const Generator& g) {
  const Universe& u = g.universe();
  std::uint64_t best = u.full_mask();
  int best_count = u.size() + 1;
  for (std::uint64_t x = 0; x <= u.full_mask(); ++x) {
    if (g.apply_bits(x) == x && __builtin_popcountll(x) < best_count) {
      best = x;
      best_count = __builtin_popcountll(x);
    }
  }
  return Subset(u, best);
}

Generator intersect_with_zero(const Universe& u) {
  return Generator("meet0", u, [](std::uint64_t b) { return b & 1; }, true);
}

}  // namespace

TEST_CASE("lfp of peano is the full truncated carrier") {
  Universe u16(16);
  IterationResult r = lfp_iterate(peano_successor(u16));
  CHECK(r.value == Subset::full(u16));
  // Trace grows one atom per step from {} to U, then repeats once.
  REQUIRE(r.trace.size() == 18);
  for (int k = 0; k <= 16; ++k) CHECK(r.trace[k] == Subset::range(u16, 0, k - 1));
  CHECK(r.trace[17] == r.trace[16]);
}

TEST_CASE("lfp of simple generators") {
  Universe u3(3);
  CHECK(lfp_iterate(constant_generator(u3, Subset::of(u3, {1}))).value == Subset::of(u3, {1}));
  CHECK(lfp_iterate(identity_generator(u3)).value == Subset::empty(u3));
}

TEST_CASE("gfp of peano equals its lfp") {
  Universe u16(16);
  Generator f = peano_successor(u16);
  IterationResult r = gfp_iterate(f);
  CHECK(r.value == Subset::full(u16));
  CHECK(r.value == lfp_iterate(f).value);
}

TEST_CASE("gfp of simple generators") {
  Universe u3(3);
  CHECK(gfp_iterate(identity_generator(u3)).value == Subset::full(u3));
  CHECK(gfp_iterate(intersect_with_zero(u3)).value == Subset::of(u3, {0}));
}

TEST_CASE("knaster-tarski brute force") {
  Universe u10(10);
  CHECK(knaster_tarski_lfp_bruteforce(peano_successor(u10)) == Subset::full(u10));
  CHECK(knaster_tarski_gfp_bruteforce(peano_successor(u10)) == Subset::full(u10));

  Universe u3(3);
  Generator c1 = constant_generator(u3, Subset::of(u3, {1}));
  CHECK(knaster_tarski_lfp_bruteforce(c1) == Subset::of(u3, {1}));
  CHECK(knaster_tarski_gfp_bruteforce(intersect_with_zero(u3)) == Subset::of(u3, {0}));
  CHECK(knaster_tarski_gfp_bruteforce(identity_generator(u3)) == Subset::full(u3));

  CHECK_THROWS_AS(knaster_tarski_lfp_bruteforce(peano_successor(Universe(13))),
                  std::domain_error);
  CHECK_THROWS_AS(knaster_tarski_gfp_bruteforce(peano_successor(Universe(13))),
                  std::domain_error);
}

TEST_CASE("iteration agrees with brute force and the fixed-point scan oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Universe u(8);
    Generator g = additive_random_generator(u, seed);
    Subset mu = lfp_iterate(g).value;
    Subset nu = gfp_iterate(g).value;
    CHECK(mu == knaster_tarski_lfp_bruteforce(g));
    CHECK(nu == knaster_tarski_gfp_bruteforce(g));
    CHECK(mu == oracle_least_fixed(g));
    CHECK(leq(mu, nu));
    CHECK(classify_subset(g, mu) == PointClass::Fixed);
    CHECK(classify_subset(g, nu) == PointClass::Fixed);
  }
}

TEST_CASE("trace shape") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Universe u(7);
    Generator g = additive_random_generator(u, seed);
    IterationResult r = lfp_iterate(g);
    REQUIRE(r.trace.size() >= 2);
    CHECK(r.trace.size() <= static_cast<std::size_t>(u.size()) + 2);
    for (std::size_t i = 0; i + 2 < r.trace.size(); ++i) {
      CHECK(leq(r.trace[i], r.trace[i + 1]));
      CHECK(r.trace[i] != r.trace[i + 1]);
    }
    CHECK(r.trace[r.trace.size() - 1] == r.trace[r.trace.size() - 2]);
    CHECK(r.trace.back() == r.value);
  }
}

TEST_CASE("non-monotone generators are refused without the override") {
  Universe u1(1);
  Generator flip = table_generator(u1, {{0b0, 0b1}, {0b1, 0b0}});
  CHECK_THROWS_AS(lfp_iterate(flip), std::invalid_argument);

  // Under the override the 2-cycle hits the step cap and reports its trace.
  try {
    lfp_iterate(flip, IterationPolicy::Override);
    FAIL("expected NonConvergenceError");
  } catch (const NonConvergenceError& e) {
    CHECK(e.trace.size() >= 3);
    CHECK(e.trace[0] == Subset::empty(u1));
    CHECK(e.trace[1] == Subset::full(u1));
    CHECK(e.trace[2] == Subset::empty(u1));
  }
}

TEST_CASE("classify_subset") {
  Universe u20(20);
  Generator f = peano_successor(u20);
  CHECK(classify_subset(f, Subset::full(u20)) == PointClass::Fixed);

  // X = {0..9}: F(X) = {0..10} is a strict superset, so X is proper post-fixed.
  Subset x = Subset::range(u20, 0, 9);
  CHECK(f.apply(x) == Subset::range(u20, 0, 10));
  CHECK(classify_subset(f, x) == PointClass::ProperPostFixed);

  Generator id = identity_generator(u20);
  for (std::uint64_t bits : {std::uint64_t{0}, std::uint64_t{0b1011}, u20.full_mask()}) {
    CHECK(classify_subset(id, Subset(u20, bits)) == PointClass::Fixed);
  }

  Universe u3(3);
  CHECK_THROWS_AS(classify_subset(f, Subset::empty(u3)), std::invalid_argument);
}

TEST_CASE("classify_all tables") {
  SECTION("identity: everything fixed") {
    Universe u2(2);
    ClassificationTable t = classify_all(identity_generator(u2));
    REQUIRE(t.rows.size() == 4);
    CHECK(t.counts[static_cast<int>(PointClass::Fixed)] == 4);
  }
  SECTION("constant {1} on U2") {
    Universe u2(2);
    ClassificationTable t = classify_all(constant_generator(u2, Subset::of(u2, {1})));
    REQUIRE(t.rows.size() == 4);
    // {} <= {1}: proper post-fixed. {0} vs {1}: incomparable. {1}: fixed.
    // {0,1} >= {1}: proper pre-fixed.
    CHECK(t.rows[0].second == PointClass::ProperPostFixed);
    CHECK(t.rows[1].second == PointClass::Neither);
    CHECK(t.rows[2].second == PointClass::Fixed);
    CHECK(t.rows[3].second == PointClass::ProperPreFixed);
  }
  SECTION("peano on U3 has exactly one fixed subset") {
    Universe u3(3);
    ClassificationTable t = classify_all(peano_successor(u3));
    int fixed = 0;
    for (const auto& [subset, cls] : t.rows) {
      if (cls == PointClass::Fixed) {
        ++fixed;
        CHECK(subset == Subset::full(u3));
      }
    }
    CHECK(fixed == 1);
    CHECK(t.counts[static_cast<int>(PointClass::Fixed)] == 1);
  }
  SECTION("classes are mutually exclusive and exhaustive") {
    Universe u(6);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      ClassificationTable t = classify_all(additive_random_generator(u, seed));
      std::uint64_t total = 0;
      for (std::uint64_t c : t.counts) total += c;
      CHECK(total == u.subset_count());
      CHECK(t.rows.size() == u.subset_count());
    }
  }
}

TEST_CASE("partition_universe") {
  Universe u16(16);
  UniversePartition p = partition_universe(peano_successor(u16));
  CHECK(p.mu == Subset::full(u16));
  CHECK(p.nu_minus_mu == Subset::empty(u16));
  CHECK(p.outside == Subset::empty(u16));

  Universe u3(3);
  UniversePartition pc = partition_universe(constant_generator(u3, Subset::of(u3, {1})));
  CHECK(pc.mu == Subset::of(u3, {1}));
  CHECK(pc.nu_minus_mu == Subset::empty(u3));
  CHECK(pc.outside == Subset::of(u3, {0, 2}));

  Universe u2(2);
  UniversePartition pm = partition_universe(intersect_with_zero(u2));
  CHECK(pm.mu == Subset::empty(u2));
  CHECK(pm.nu_minus_mu == Subset::of(u2, {0}));
  CHECK(pm.outside == Subset::of(u2, {1}));

  // Parts are pairwise disjoint and union to U, for random monotone inputs.
  Universe u(8);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    UniversePartition part = partition_universe(additive_random_generator(u, seed));
    CHECK(meet(part.mu, part.nu_minus_mu) == Subset::empty(u));
    CHECK(meet(part.mu, part.outside) == Subset::empty(u));
    CHECK(meet(part.nu_minus_mu, part.outside) == Subset::empty(u));
    CHECK(join(join(part.mu, part.nu_minus_mu), part.outside) == Subset::full(u));
  }
}

TEST_CASE("check_closed and check_consistent") {
  Universe u20(20);
  Generator f = peano_successor(u20);
  CHECK(check_closed(f, Subset::full(u20)));
  // P = {n | 2^n > n} restricted to the carrier is all of {0,...,19}.
  std::uint64_t bits = 0;
  for (int n = 0; n < 20; ++n) {
    if ((1ULL << n) > static_cast<std::uint64_t>(n)) bits |= 1ULL << n;
  }
  Subset p(u20, bits);
  CHECK(p == Subset::full(u20));
  CHECK(check_closed(f, p));

  CHECK_FALSE(check_closed(f, Subset::range(u20, 0, 9)));
  CHECK(check_consistent(f, Subset::range(u20, 0, 9)));
  CHECK(check_consistent(f, Subset::empty(u20)));
}

TEST_CASE("prove_by_induction") {
  Universe u20(20);
  Generator f = peano_successor(u20);

  InductionCheck ok = prove_by_induction(f, Subset::full(u20));
  CHECK(ok.base_holds);
  CHECK(ok.closed_holds);
  CHECK(ok.conclusion_holds);
  CHECK_FALSE(ok.counterexample.has_value());

  InductionCheck bad = prove_by_induction(f, Subset::range(u20, 0, 9));
  CHECK_FALSE(bad.closed_holds);
  CHECK_FALSE(bad.conclusion_holds);
  REQUIRE(bad.counterexample.has_value());
  CHECK(*bad.counterexample >= 10);
  CHECK(*bad.counterexample <= 19);

  Universe u3(3);
  InductionCheck c = prove_by_induction(constant_generator(u3, Subset::of(u3, {1})),
                                        Subset::of(u3, {1, 2}));
  CHECK(c.closed_holds);
  CHECK(c.conclusion_holds);
}

TEST_CASE("induction principle soundness over random generators") {
  Universe u(7);
  std::mt19937_64 rng(99);
  int closed_seen = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Generator g = additive_random_generator(u, seed);
    Subset mu = lfp_iterate(g).value;
    for (int i = 0; i < 20; ++i) {
      Subset p(u, rng() & u.full_mask());
      if (check_closed(g, p)) {
        ++closed_seen;
        CHECK(leq(mu, p));
      }
    }
  }
  CHECK(closed_seen > 0);
}

TEST_CASE("compute_fixpoints report") {
  Universe u(8);
  Generator g = additive_random_generator(u, 7);
  FixpointReport r = compute_fixpoints(g);
  CHECK(r.generator_name == "additive:7");
  CHECK(r.lfp == knaster_tarski_lfp_bruteforce(g));
  CHECK(r.gfp == knaster_tarski_gfp_bruteforce(g));
  CHECK(r.lfp_trace.back() == r.lfp);
  CHECK(r.gfp_trace.back() == r.gfp);
  CHECK(r.partition.mu == r.lfp);
}
