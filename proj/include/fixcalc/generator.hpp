#pragma once

// Generators: named endofunctions on a powerset lattice, intended (but not
// required) to be monotone. Built-ins, lookup tables, seeded random monotone
// instances, the complement-conjugated dual, and monotonicity checking.

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "fixcalc/lattice.hpp"

namespace fixcalc {

class Generator {
 public:
  // The rule operates on raw characteristic vectors; it must be total and
  // deterministic and must stay inside the universe mask.
  using Rule = std::function<std::uint64_t(std::uint64_t)>;

  Generator(std::string name, Universe universe, Rule rule, bool monotone_claimed)
      : name_(std::move(name)),
        universe_(std::move(universe)),
        rule_(std::move(rule)),
        monotone_claimed_(monotone_claimed) {}

  const std::string& name() const { return name_; }
  const Universe& universe() const { return universe_; }
  bool monotone_claimed() const { return monotone_claimed_; }

  std::uint64_t apply_bits(std::uint64_t bits) const {
    std::uint64_t out = rule_(bits);
    if (out & ~universe_.full_mask()) {
      throw std::logic_error("generator '" + name_ + "' produced a subset outside its universe");
    }
    return out;
  }

  Subset apply(const Subset& x) const {
    if (x.universe() != universe_) {
      throw std::invalid_argument("subset universe does not match generator '" + name_ + "'");
    }
    return Subset(universe_, apply_bits(x.bits()));
  }

 private:
  std::string name_;
  Universe universe_;
  Rule rule_;
  bool monotone_claimed_;
};

// F(X) = {0} u {x+1 | x in X, x+1 < n}. Successors past the finite top are
// dropped so F stays an endofunction on the truncated carrier.
inline Generator peano_successor(const Universe& u) {
  std::uint64_t mask = u.full_mask();
  return Generator("peano", u,
                   [mask](std::uint64_t bits) { return (std::uint64_t{1} | (bits << 1)) & mask; },
                   /*monotone_claimed=*/true);
}

inline Generator identity_generator(const Universe& u) {
  return Generator("identity", u, [](std::uint64_t bits) { return bits; },
                   /*monotone_claimed=*/true);
}

inline Generator constant_generator(const Universe& u, const Subset& value) {
  if (value.universe() != u) {
    throw std::invalid_argument("constant value must live in the generator's universe");
  }
  std::uint64_t v = value.bits();
  return Generator("constant" + value.to_string(), u, [v](std::uint64_t) { return v; },
                   /*monotone_claimed=*/true);
}

// Lookup-table generator. `entries` must cover the full powerset unless a
// default rule is supplied; a missing entry surfaces when the rule is applied.
inline Generator table_generator(const Universe& u, std::map<std::uint64_t, std::uint64_t> entries,
                                 std::optional<Generator::Rule> fallback = std::nullopt,
                                 bool monotone_claimed = false) {
  for (const auto& [in, out] : entries) {
    if ((in & ~u.full_mask()) || (out & ~u.full_mask())) {
      throw std::invalid_argument("table entry outside universe carrier");
    }
  }
  auto table = std::make_shared<const std::map<std::uint64_t, std::uint64_t>>(std::move(entries));
  Generator::Rule rule = [table, fallback](std::uint64_t bits) -> std::uint64_t {
    auto it = table->find(bits);
    if (it != table->end()) return it->second;
    if (fallback) return (*fallback)(bits);
    throw std::domain_error("table generator has no entry for input");
  };
  return Generator("table", u, std::move(rule), monotone_claimed);
}

// Text format: one "{...} -> {...}" pair per line, '#' starts a comment.
inline Generator load_table_generator(const Universe& u, std::istream& in) {
  std::map<std::uint64_t, std::uint64_t> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected '{...} -> {...}'");
    }
    auto end = line.find_last_not_of(" \t\r");
    Subset lhs = Subset::parse(u, line.substr(begin, arrow - begin));
    Subset rhs = Subset::parse(u, line.substr(arrow + 2, end - arrow - 1));
    if (!entries.emplace(lhs.bits(), rhs.bits()).second) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": duplicate entry for " +
                                  lhs.to_string());
    }
  }
  return table_generator(u, std::move(entries));
}

// F(X) = B u U{h(x) | x in X} for a seeded random base B and atom map h.
// Monotone by construction; the same seed reproduces the same generator.
inline Generator additive_random_generator(const Universe& u, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t mask = u.full_mask();
  std::uint64_t base = rng() & mask;
  std::vector<std::uint64_t> atom_image(u.size());
  for (int m = 0; m < u.size(); ++m) atom_image[m] = rng() & mask;
  auto images = std::make_shared<const std::vector<std::uint64_t>>(std::move(atom_image));
  return Generator(
      "additive:" + std::to_string(seed), u,
      [base, images](std::uint64_t bits) {
        std::uint64_t out = base;
        while (bits) {
          int m = __builtin_ctzll(bits);
          out |= (*images)[m];
          bits &= bits - 1;
        }
        return out;
      },
      /*monotone_claimed=*/true);
}

// F^d(X) = ~F(~X). Monotone whenever g is.
inline Generator dual(const Generator& g) {
  Universe u = g.universe();
  std::uint64_t mask = u.full_mask();
  auto inner = std::make_shared<const Generator>(g);
  return Generator(g.name() + "^d", u,
                   [inner, mask](std::uint64_t bits) {
                     return ~inner->apply_bits(~bits & mask) & mask;
                   },
                   g.monotone_claimed());
}

struct MonotonicityVerdict {
  enum class Mode { Exhaustive, Sampled };
  Mode mode;
  bool holds;
  // Comparable pair (x, y) with x <= y but F(x) not<= F(y).
  std::optional<std::pair<Subset, Subset>> counterexample;
  std::uint64_t pairs_checked = 0;
};

// Checks every ordered pair X <= Y (3^n of them). Capped at size 12.
inline MonotonicityVerdict is_monotone(const Generator& g) {
  const Universe& u = g.universe();
  if (u.size() > 12) {
    throw std::domain_error("exhaustive monotonicity check capped at size 12");
  }
  MonotonicityVerdict v{MonotonicityVerdict::Mode::Exhaustive, true, std::nullopt, 0};
  std::vector<std::uint64_t> image(u.subset_count());
  for (std::uint64_t y = 0; y <= u.full_mask(); ++y) image[y] = g.apply_bits(y);
  for (std::uint64_t y = 0; y <= u.full_mask(); ++y) {
    // Submask walk enumerates every x <= y, including x = y and x = 0.
    std::uint64_t x = y;
    for (;;) {
      ++v.pairs_checked;
      if (image[x] & ~image[y]) {
        v.holds = false;
        v.counterexample = {Subset(u, x), Subset(u, y)};
        return v;
      }
      if (x == 0) break;
      x = (x - 1) & y;
    }
  }
  return v;
}

// Checks k seeded random comparable pairs: X uniform, then Y a uniform
// superset of X. Comparable pairs are rare under independent draws.
inline MonotonicityVerdict is_monotone_sampled(const Generator& g, int pairs = 10000,
                                               std::uint64_t seed = 0) {
  const Universe& u = g.universe();
  std::mt19937_64 rng(seed);
  std::uint64_t mask = u.full_mask();
  MonotonicityVerdict v{MonotonicityVerdict::Mode::Sampled, true, std::nullopt, 0};
  for (int i = 0; i < pairs; ++i) {
    std::uint64_t x = rng() & mask;
    std::uint64_t y = x | (rng() & mask);
    ++v.pairs_checked;
    if (g.apply_bits(x) & ~g.apply_bits(y)) {
      v.holds = false;
      v.counterexample = {Subset(u, x), Subset(u, y)};
      return v;
    }
  }
  return v;
}

// Exhaustive when feasible, sampled otherwise.
inline MonotonicityVerdict check_monotone(const Generator& g) {
  return g.universe().size() <= 12 ? is_monotone(g) : is_monotone_sampled(g);
}

}  // namespace fixcalc
