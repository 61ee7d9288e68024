#pragma once

// The induction/coinduction duality nu_F = ~mu_{~F~}: computes both sides of
// the identity by independent code paths and compares them.

#include <string>

#include "fixcalc/fixpoint.hpp"
#include "fixcalc/generator.hpp"
#include "fixcalc/lattice.hpp"

namespace fixcalc {

struct DualityReport {
  std::string generator_name;
  Subset gfp_direct;       // nu_F by downward Kleene iteration
  Subset rejected;         // mu_{F^d}
  Subset gfp_via_duality;  // ~rejected
  bool agrees;
};

namespace detail {
inline void require_verified_monotone(const Generator& g) {
  MonotonicityVerdict v = check_monotone(g);
  if (!v.holds) {
    throw std::invalid_argument("generator '" + g.name() +
                                "' is not monotone; the duality identity is stated for "
                                "monotone operators only");
  }
}
}  // namespace detail

// mu_{F^d}: the elements with a finite reason not to belong to nu_F.
inline Subset rejected_elements(const Generator& g) {
  detail::require_verified_monotone(g);
  return lfp_iterate(dual(g)).value;
}

inline DualityReport verify_duality(const Generator& g) {
  detail::require_verified_monotone(g);
  // The two sides share no iteration state: one runs downward on g, the
  // other upward on the dual.
  Subset direct = gfp_iterate(g).value;
  Subset rejected = lfp_iterate(dual(g)).value;
  Subset via_duality = complement(rejected);
  return DualityReport{g.name(), direct, rejected, via_duality, direct == via_duality};
}

}  // namespace fixcalc
