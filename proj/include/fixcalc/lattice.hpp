#pragma once

// Finite powerset lattices: a universe {0,...,n-1} and canonical subsets
// of it, with the usual complete-lattice operations (order, join, meet,
// complement) and exhaustive powerset enumeration.

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fixcalc {

class Universe {
 public:
  // Subsets are encoded as 64-bit characteristic vectors, hence the hard cap.
  static constexpr int kMaxSize = 63;
  // Exhaustive powerset walks (2^n subsets) refuse beyond this.
  static constexpr int kMaxEnumSize = 20;

  explicit Universe(int size, std::string label = "U") : size_(size), label_(std::move(label)) {
    if (size < 1 || size > kMaxSize) {
      throw std::invalid_argument("universe size must be in [1," + std::to_string(kMaxSize) +
                                  "], got " + std::to_string(size));
    }
  }

  int size() const { return size_; }
  const std::string& label() const { return label_; }

  // All subsets live in the low `size` bits.
  std::uint64_t full_mask() const {
    return size_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size_) - 1);
  }

  std::uint64_t subset_count() const { return std::uint64_t{1} << size_; }

  friend bool operator==(const Universe& a, const Universe& b) { return a.size_ == b.size_; }
  friend bool operator!=(const Universe& a, const Universe& b) { return !(a == b); }

 private:
  int size_;
  std::string label_;
};

class Subset {
 public:
  Subset(Universe universe, std::uint64_t bits) : universe_(std::move(universe)), bits_(bits) {
    if (bits & ~universe_.full_mask()) {
      throw std::invalid_argument("subset bits outside universe carrier");
    }
  }

  static Subset empty(const Universe& u) { return Subset(u, 0); }
  static Subset full(const Universe& u) { return Subset(u, u.full_mask()); }

  static Subset of(const Universe& u, std::initializer_list<int> members) {
    std::uint64_t bits = 0;
    for (int m : members) {
      if (m < 0 || m >= u.size()) {
        throw std::invalid_argument("member " + std::to_string(m) + " outside universe of size " +
                                    std::to_string(u.size()));
      }
      bits |= std::uint64_t{1} << m;
    }
    return Subset(u, bits);
  }

  // Contiguous range {lo,...,hi}, empty when hi < lo.
  static Subset range(const Universe& u, int lo, int hi) {
    std::uint64_t bits = 0;
    for (int m = lo; m <= hi; ++m) bits |= std::uint64_t{1} << m;
    return Subset(u, bits);
  }

  const Universe& universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(int m) const { return m >= 0 && m < universe_.size() && (bits_ >> m) & 1; }
  int count() const { return __builtin_popcountll(bits_); }
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == universe_.full_mask(); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int m = 0; m < universe_.size(); ++m) {
      if ((bits_ >> m) & 1) out.push_back(m);
    }
    return out;
  }

  // Canonical text form: "{0,2,5}", "{}" for empty.
  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int m : members()) {
      if (!first) os << ',';
      os << m;
      first = false;
    }
    os << '}';
    return os.str();
  }

  // Parses the canonical grammar back into a subset over `u`.
  static Subset parse(const Universe& u, std::string_view text) {
    auto fail = [&] {
      throw std::invalid_argument("malformed subset literal: " + std::string(text));
    };
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '{') fail();
    ++i;
    std::uint64_t bits = 0;
    skip_ws();
    if (i < text.size() && text[i] == '}') {
      ++i;
    } else {
      for (;;) {
        skip_ws();
        if (i >= text.size() || text[i] < '0' || text[i] > '9') fail();
        int value = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          value = value * 10 + (text[i] - '0');
          if (value > Universe::kMaxSize) fail();
          ++i;
        }
        if (value >= u.size()) {
          throw std::invalid_argument("member " + std::to_string(value) +
                                      " outside universe of size " + std::to_string(u.size()));
        }
        bits |= std::uint64_t{1} << value;
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == '}') {
          ++i;
          break;
        }
        fail();
      }
    }
    skip_ws();
    if (i != text.size()) fail();
    return Subset(u, bits);
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.universe_ == b.universe_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Subset& s) {
    return os << s.to_string();
  }

 private:
  Universe universe_;
  std::uint64_t bits_;
};

namespace detail {
inline void require_same_universe(const Subset& a, const Subset& b) {
  if (a.universe() != b.universe()) {
    throw std::invalid_argument("subsets belong to different universes");
  }
}
}  // namespace detail

inline Subset complement(const Subset& s) {
  return Subset(s.universe(), ~s.bits() & s.universe().full_mask());
}

// Set inclusion a <= b, the lattice order.
inline bool leq(const Subset& a, const Subset& b) {
  detail::require_same_universe(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

inline Subset join(const Subset& a, const Subset& b) {
  detail::require_same_universe(a, b);
  return Subset(a.universe(), a.bits() | b.bits());
}

inline Subset meet(const Subset& a, const Subset& b) {
  detail::require_same_universe(a, b);
  return Subset(a.universe(), a.bits() & b.bits());
}

inline Subset difference(const Subset& a, const Subset& b) {
  detail::require_same_universe(a, b);
  return Subset(a.universe(), a.bits() & ~b.bits());
}

// All 2^n subsets, ascending by characteristic-vector value.
inline std::vector<Subset> enumerate_subsets(const Universe& u) {
  if (u.size() > Universe::kMaxEnumSize) {
    throw std::domain_error("powerset enumeration capped at size " +
                            std::to_string(Universe::kMaxEnumSize));
  }
  std::vector<Subset> out;
  out.reserve(u.subset_count());
  for (std::uint64_t bits = 0; bits <= u.full_mask(); ++bits) {
    out.emplace_back(u, bits);
  }
  return out;
}

}  // namespace fixcalc
