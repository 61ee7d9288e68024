#pragma once

// Least/greatest fixed points by Kleene iteration, brute-force oracles over
// the full powerset, pre-/post-/fixed classification, induction checking,
// and the three-way partition of the universe.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fixcalc/generator.hpp"
#include "fixcalc/lattice.hpp"

namespace fixcalc {

enum class PointClass { ProperPreFixed, ProperPostFixed, Fixed, Neither };

inline const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::ProperPreFixed: return "proper-pre-fixed";
    case PointClass::ProperPostFixed: return "proper-post-fixed";
    case PointClass::Fixed: return "fixed";
    case PointClass::Neither: return "neither";
  }
  return "?";
}

// Thrown when iteration under the non-monotone override hits its step cap.
class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(std::string what, std::vector<Subset> trace)
      : std::runtime_error(std::move(what)), trace(std::move(trace)) {}
  std::vector<Subset> trace;
};

enum class IterationPolicy {
  // Verify monotonicity before iterating; refuse non-monotone generators.
  VerifyMonotone,
  // Admit unverified generators under a 2^n + 1 step cap.
  Override,
};

struct IterationResult {
  Subset value;
  // Every iterate from the start element through the stabilizing repeat.
  std::vector<Subset> trace;
};

namespace detail {

inline void require_monotone(const Generator& g) {
  MonotonicityVerdict v = check_monotone(g);
  if (!v.holds) {
    throw std::invalid_argument("generator '" + g.name() +
                                "' is not monotone; pass IterationPolicy::Override to iterate "
                                "anyway (counterexample " +
                                v.counterexample->first.to_string() + " <= " +
                                v.counterexample->second.to_string() + ")");
  }
}

inline IterationResult kleene_iterate(const Generator& g, std::uint64_t start,
                                      IterationPolicy policy) {
  const Universe& u = g.universe();
  if (policy == IterationPolicy::VerifyMonotone) require_monotone(g);
  // Monotone iteration stabilizes within n+1 steps; the override cap admits
  // any trajectory through the 2^n distinct subsets plus one repeat.
  std::uint64_t cap = policy == IterationPolicy::Override
                          ? (u.size() >= 62 ? ~std::uint64_t{0} : u.subset_count() + 1)
                          : static_cast<std::uint64_t>(u.size()) + 2;
  std::vector<Subset> trace;
  std::uint64_t current = start;
  trace.emplace_back(u, current);
  for (std::uint64_t step = 0; step < cap; ++step) {
    std::uint64_t next = g.apply_bits(current);
    trace.emplace_back(u, next);
    if (next == current) {
      return IterationResult{Subset(u, current), std::move(trace)};
    }
    current = next;
  }
  throw NonConvergenceError("iteration of '" + g.name() + "' did not converge within " +
                                std::to_string(cap) + " steps",
                            std::move(trace));
}

}  // namespace detail

// mu_F from the bottom element.
inline IterationResult lfp_iterate(const Generator& g,
                                   IterationPolicy policy = IterationPolicy::VerifyMonotone) {
  return detail::kleene_iterate(g, 0, policy);
}

// nu_F from the top element.
inline IterationResult gfp_iterate(const Generator& g,
                                   IterationPolicy policy = IterationPolicy::VerifyMonotone) {
  return detail::kleene_iterate(g, g.universe().full_mask(), policy);
}

namespace detail {
inline void require_bruteforce_size(const Universe& u) {
  if (u.size() > 12) {
    throw std::domain_error("brute-force fixed-point oracle capped at size 12");
  }
}
}  // namespace detail

// Intersection of all closed sets X (F(X) <= X): mu_F by Knaster-Tarski.
inline Subset knaster_tarski_lfp_bruteforce(const Generator& g) {
  const Universe& u = g.universe();
  detail::require_bruteforce_size(u);
  std::uint64_t acc = u.full_mask();
  for (std::uint64_t x = 0; x <= u.full_mask(); ++x) {
    if ((g.apply_bits(x) & ~x) == 0) acc &= x;
  }
  return Subset(u, acc);
}

// Union of all consistent sets X (X <= F(X)): nu_F by Knaster-Tarski.
inline Subset knaster_tarski_gfp_bruteforce(const Generator& g) {
  const Universe& u = g.universe();
  detail::require_bruteforce_size(u);
  std::uint64_t acc = 0;
  for (std::uint64_t x = 0; x <= u.full_mask(); ++x) {
    if ((x & ~g.apply_bits(x)) == 0) acc |= x;
  }
  return Subset(u, acc);
}

// One generator application decides the verdict.
inline PointClass classify_subset(const Generator& g, const Subset& x) {
  Subset fx = g.apply(x);
  if (fx == x) return PointClass::Fixed;
  if (leq(fx, x)) return PointClass::ProperPreFixed;
  if (leq(x, fx)) return PointClass::ProperPostFixed;
  return PointClass::Neither;
}

struct ClassificationTable {
  std::vector<std::pair<Subset, PointClass>> rows;  // enumeration order
  // Indexed by static_cast<int>(PointClass).
  std::array<std::uint64_t, 4> counts{};
};

inline ClassificationTable classify_all(const Generator& g) {
  const Universe& u = g.universe();
  detail::require_bruteforce_size(u);
  ClassificationTable table;
  table.rows.reserve(u.subset_count());
  for (std::uint64_t bits = 0; bits <= u.full_mask(); ++bits) {
    Subset x(u, bits);
    PointClass c = classify_subset(g, x);
    table.rows.emplace_back(std::move(x), c);
    ++table.counts[static_cast<int>(c)];
  }
  return table;
}

// (mu_F, nu_F - mu_F, U - nu_F): the finitely-consistent, infinitely-
// consistent, and inconsistent elements.
struct UniversePartition {
  Subset mu;
  Subset nu_minus_mu;
  Subset outside;
};

inline UniversePartition partition_universe(
    const Generator& g, IterationPolicy policy = IterationPolicy::VerifyMonotone) {
  Subset mu = lfp_iterate(g, policy).value;
  Subset nu = gfp_iterate(g, policy).value;
  return UniversePartition{mu, difference(nu, mu), complement(nu)};
}

struct FixpointReport {
  std::string generator_name;
  Subset lfp;
  Subset gfp;
  std::vector<Subset> lfp_trace;
  std::vector<Subset> gfp_trace;
  UniversePartition partition;
};

inline FixpointReport compute_fixpoints(const Generator& g,
                                        IterationPolicy policy = IterationPolicy::VerifyMonotone) {
  IterationResult lo = lfp_iterate(g, policy);
  IterationResult hi = gfp_iterate(g, policy);
  UniversePartition partition{lo.value, difference(hi.value, lo.value), complement(hi.value)};
  return FixpointReport{g.name(),        lo.value,            hi.value,
                        std::move(lo.trace), std::move(hi.trace), std::move(partition)};
}

// F(p) <= p: p is F-closed.
inline bool check_closed(const Generator& g, const Subset& p) {
  return leq(g.apply(p), p);
}

// p <= F(p): p is F-consistent.
inline bool check_consistent(const Generator& g, const Subset& p) {
  return leq(p, g.apply(p));
}

struct InductionCheck {
  Subset property_set;
  bool base_holds;
  bool closed_holds;
  bool conclusion_holds;  // mu_F <= P
  std::optional<int> counterexample;  // an atom in mu_F - P when the conclusion fails
};

// Checks the proof-by-induction obligations for P against an independently
// computed least fixed point.
inline InductionCheck prove_by_induction(const Generator& g, const Subset& p) {
  Subset base = g.apply(Subset::empty(g.universe()));
  bool base_holds = leq(base, p);
  bool closed_holds = check_closed(g, p);
  Subset mu = lfp_iterate(g).value;
  bool conclusion = leq(mu, p);
  std::optional<int> witness;
  if (!conclusion) {
    witness = difference(mu, p).members().front();
  }
  return InductionCheck{p, base_holds, closed_holds, conclusion, witness};
}

}  // namespace fixcalc
