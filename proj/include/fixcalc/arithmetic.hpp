#pragma once

// Sum-of-smaller-divisors and the deficient/perfect/abundant trichotomy:
// proper-pre-fixed, fixed, and proper-post-fixed points of sd on the
// totally ordered positive integers.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fixcalc {

enum class NumberClass { Deficient, Perfect, Abundant };

inline const char* to_string(NumberClass c) {
  switch (c) {
    case NumberClass::Deficient: return "deficient";
    case NumberClass::Perfect: return "perfect";
    case NumberClass::Abundant: return "abundant";
  }
  return "?";
}

namespace detail {
constexpr std::uint64_t kSdMax = 1'000'000'000'000ULL;  // trial division up to sqrt(p)

inline void require_sd_range(std::uint64_t p) {
  if (p < 1 || p > kSdMax) {
    throw std::domain_error("sd defined for 1 <= p <= 10^12, got " + std::to_string(p));
  }
}
}  // namespace detail

struct DivisorProfile {
  std::uint64_t n;
  std::vector<std::uint64_t> proper_divisors;  // ascending, all d with 1 <= d < n
  std::uint64_t sd;                            // their sum; 0 for n = 1
};

inline DivisorProfile divisor_profile(std::uint64_t p) {
  detail::require_sd_range(p);
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= p; ++d) {
    if (p % d != 0) continue;
    if (d < p) small.push_back(d);
    std::uint64_t q = p / d;
    if (q != d && q < p) large.push_back(q);
  }
  // `large` was collected in descending order of d, hence ascending by value
  // when reversed.
  small.insert(small.end(), large.rbegin(), large.rend());
  std::uint64_t sum = 0;
  for (std::uint64_t d : small) sum += d;
  return DivisorProfile{p, std::move(small), sum};
}

// Sum of the divisors of p strictly smaller than p; sd(1) = 0 (empty sum).
inline std::uint64_t sd(std::uint64_t p) {
  detail::require_sd_range(p);
  std::uint64_t sum = 0;
  for (std::uint64_t d = 1; d * d <= p; ++d) {
    if (p % d != 0) continue;
    if (d < p) sum += d;
    std::uint64_t q = p / d;
    if (q != d && q < p) sum += q;
  }
  return sum;
}

inline NumberClass classify_number(std::uint64_t p) {
  std::uint64_t s = sd(p);
  if (s < p) return NumberClass::Deficient;
  if (s == p) return NumberClass::Perfect;
  return NumberClass::Abundant;
}

struct ClassCensus {
  std::uint64_t limit;
  std::uint64_t deficient = 0;
  std::uint64_t perfect = 0;
  std::uint64_t abundant = 0;
  std::vector<std::uint64_t> perfect_numbers;  // ascending
};

// Sieve of proper-divisor sums for 1..limit.
inline std::vector<std::uint64_t> sd_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> sums(limit + 1, 0);
  for (std::uint64_t d = 1; 2 * d <= limit; ++d) {
    for (std::uint64_t m = 2 * d; m <= limit; m += d) sums[m] += d;
  }
  return sums;
}

inline ClassCensus enumerate_classes(std::uint64_t limit) {
  if (limit < 1 || limit > 10'000'000) {
    throw std::domain_error("class enumeration capped at 10^7");
  }
  ClassCensus census;
  census.limit = limit;
  // The sieve wins well below 10^5; per-number trial division below keeps
  // the small case on an independent code path.
  std::vector<std::uint64_t> sums;
  if (limit > 100'000) sums = sd_sieve(limit);
  for (std::uint64_t p = 1; p <= limit; ++p) {
    std::uint64_t s = sums.empty() ? sd(p) : sums[p];
    if (s < p) {
      ++census.deficient;
    } else if (s == p) {
      ++census.perfect;
      census.perfect_numbers.push_back(p);
    } else {
      ++census.abundant;
    }
  }
  return census;
}

}  // namespace fixcalc
