#pragma once

// Fixed-point structure of piecewise-polynomial real functions on a closed
// interval: point classification, grid-scan fixed-point and zero finding
// with bisection refinement, Newton iteration on phi(x) - x, plain
// fixed-point iteration, and a monotonicity scan.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fixcalc {

struct PolyPiece {
  double lo, hi;
  bool closed_lo, closed_hi;
  std::vector<double> coeffs;  // ascending powers

  bool owns(double x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !closed_lo) return false;
    if (x == hi && !closed_hi) return false;
    return true;
  }

  double eval(double x) const {
    double acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  }

  double eval_derivative(double x) const {
    double acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 1;) acc = acc * x + coeffs[i] * static_cast<double>(i);
    return acc;
  }
};

class RealFunctionSpec {
 public:
  static constexpr double kSeamTol = 1e-12;

  RealFunctionSpec(std::string name, std::vector<PolyPiece> pieces)
      : name_(std::move(name)), pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("function needs at least one piece");
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
      const PolyPiece& a = pieces_[i];
      const PolyPiece& b = pieces_[i + 1];
      if (a.hi != b.lo) throw std::invalid_argument("pieces must partition the domain");
      if (a.closed_hi == b.closed_lo) {
        throw std::invalid_argument("each seam must be owned by exactly one piece");
      }
      if (std::abs(a.eval(a.hi) - b.eval(b.lo)) > kSeamTol) {
        throw std::invalid_argument("pieces disagree at seam x = " + std::to_string(a.hi));
      }
    }
    if (!pieces_.front().closed_lo || !pieces_.back().closed_hi) {
      throw std::invalid_argument("domain endpoints must be closed");
    }
  }

  const std::string& name() const { return name_; }
  double domain_lo() const { return pieces_.front().lo; }
  double domain_hi() const { return pieces_.back().hi; }
  bool in_domain(double x) const { return x >= domain_lo() && x <= domain_hi(); }

  double eval(double x) const { return piece_at(x).eval(x); }
  double eval_derivative(double x) const { return piece_at(x).eval_derivative(x); }

 private:
  const PolyPiece& piece_at(double x) const {
    for (const PolyPiece& p : pieces_) {
      if (p.owns(x)) return p;
    }
    throw std::domain_error("x = " + std::to_string(x) + " outside domain of " + name_);
  }

  std::string name_;
  std::vector<PolyPiece> pieces_;
};

// f(x) = (x-5)^3 - 5x + 29 on [-1, 10].
inline RealFunctionSpec builtin_f() {
  return RealFunctionSpec("f", {{-1.0, 10.0, true, true, {-96.0, 70.0, -15.0, 1.0}}});
}

// g(x) = x^2/4 on [0,4), x on [4,6], (x-8)^3/4 + 8 on (6,10].
inline RealFunctionSpec builtin_g() {
  return RealFunctionSpec("g", {{0.0, 4.0, true, false, {0.0, 0.0, 0.25}},
                                {4.0, 6.0, true, true, {0.0, 1.0}},
                                {6.0, 10.0, false, true, {-120.0, 48.0, -6.0, 0.25}}});
}

enum class RealPointClass { PreFixed, PostFixed, Fixed };

inline const char* to_string(RealPointClass c) {
  switch (c) {
    case RealPointClass::PreFixed: return "pre-fixed";
    case RealPointClass::PostFixed: return "post-fixed";
    case RealPointClass::Fixed: return "fixed";
  }
  return "?";
}

inline RealPointClass classify_point(const RealFunctionSpec& spec, double x, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (!spec.in_domain(x)) {
    throw std::domain_error("x = " + std::to_string(x) + " outside domain of " + spec.name());
  }
  double y = spec.eval(x);
  if (std::abs(y - x) <= tol) return RealPointClass::Fixed;
  return y < x ? RealPointClass::PreFixed : RealPointClass::PostFixed;
}

struct FixedPointResult {
  enum class Method { Bisection, Newton, Iteration };
  double location;
  double residual;
  Method method;
  int iterations;
  // Bisection brackets had opposite residual signs; absent for tangencies.
  std::optional<std::pair<double, double>> bracket;
};

struct FixedInterval {
  double lo, hi;
};

struct FixedPointScan {
  std::vector<FixedPointResult> points;     // ascending by location
  std::vector<FixedInterval> intervals;     // ascending, disjoint from points
};

// Iteration or Newton failures carry the iterate trace.
class RootFindingError : public std::runtime_error {
 public:
  enum class Kind { NonConvergence, DerivativeTooSmall, LeftDomain };
  RootFindingError(Kind kind, std::string what, std::vector<double> trace)
      : std::runtime_error(std::move(what)), kind(kind), trace(std::move(trace)) {}
  Kind kind;
  std::vector<double> trace;
};

namespace detail {

// Bisection on a bracket with opposite signs of `r`; stops at |r| <= tol.
template <typename Residual>
FixedPointResult bisect(Residual r, double lo, double hi, double tol,
                        FixedPointResult::Method method) {
  double rlo = r(lo);
  int iterations = 0;
  double mid = lo, rmid = rlo;
  for (; iterations < 200; ++iterations) {
    mid = 0.5 * (lo + hi);
    rmid = r(mid);
    if (std::abs(rmid) <= tol || hi - lo < 1e-15) break;
    if ((rmid < 0) == (rlo < 0)) {
      lo = mid;
      rlo = rmid;
    } else {
      hi = mid;
    }
  }
  return FixedPointResult{mid, std::abs(rmid), method, iterations, std::make_pair(lo, hi)};
}

// Shared grid-scan machinery: isolated roots of `r` by sign-change
// bisection, grid tangencies, and plateau intervals where |r| stays
// within tol over >= 3 consecutive grid points.
template <typename Residual>
FixedPointScan scan_residual(const RealFunctionSpec& spec, Residual r, double step, double tol) {
  if (step <= 0 || tol <= 0) throw std::invalid_argument("step and tol must be positive");
  double a = spec.domain_lo(), b = spec.domain_hi();
  std::size_t n = static_cast<std::size_t>(std::ceil((b - a) / step));
  std::vector<double> xs(n + 1), rs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    xs[i] = std::min(a + static_cast<double>(i) * step, b);
    rs[i] = r(xs[i]);
  }

  FixedPointScan scan;
  auto near = [&](std::size_t i) { return std::abs(rs[i]) <= tol; };

  std::size_t i = 0;
  while (i <= n) {
    if (near(i)) {
      std::size_t j = i;
      while (j + 1 <= n && near(j + 1)) ++j;
      if (j - i + 1 >= 3) {
        scan.intervals.push_back(FixedInterval{xs[i], xs[j]});
      } else {
        // Short run: an isolated root sitting on (or straddling) the grid.
        // A crossing gets its straddle bracket; a tangency gets none.
        std::size_t best = i;
        for (std::size_t k = i; k <= j; ++k) {
          if (std::abs(rs[k]) < std::abs(rs[best])) best = k;
        }
        std::optional<std::pair<double, double>> bracket;
        if (i > 0 && j < n && (rs[i - 1] < 0) != (rs[j + 1] < 0)) {
          bracket = std::make_pair(xs[i - 1], xs[j + 1]);
        }
        scan.points.push_back(
            FixedPointResult{xs[best], std::abs(rs[best]),
                             FixedPointResult::Method::Bisection, 0, bracket});
      }
      i = j + 1;
    } else {
      if (i + 1 <= n && !near(i + 1) && (rs[i] < 0) != (rs[i + 1] < 0)) {
        scan.points.push_back(
            bisect(r, xs[i], xs[i + 1], tol, FixedPointResult::Method::Bisection));
      }
      ++i;
    }
  }
  return scan;
}

}  // namespace detail

// Roots of r(x) = phi(x) - x: isolated fixed points plus fixed intervals.
inline FixedPointScan find_fixed_points(const RealFunctionSpec& spec, double step = 0.01,
                                        double tol = 1e-9) {
  return detail::scan_residual(
      spec, [&](double x) { return spec.eval(x) - x; }, step, tol);
}

// Roots of phi itself. Deliberately separate from find_fixed_points: zeros
// and fixed points are different point sets.
inline std::vector<double> find_zeros(const RealFunctionSpec& spec, double step = 0.01,
                                      double tol = 1e-9) {
  FixedPointScan scan =
      detail::scan_residual(spec, [&](double x) { return spec.eval(x); }, step, tol);
  std::vector<double> zeros;
  for (const FixedPointResult& p : scan.points) zeros.push_back(p.location);
  for (const FixedInterval& iv : scan.intervals) {
    zeros.push_back(iv.lo);  // plateau of zeros, report its onset
  }
  std::sort(zeros.begin(), zeros.end());
  return zeros;
}

// Newton iteration on r(x) = phi(x) - x with exact per-piece derivatives.
inline FixedPointResult newton_fixed_point(const RealFunctionSpec& spec, double x0, double tol,
                                           int max_iter) {
  if (tol <= 0 || max_iter < 1) throw std::invalid_argument("tol > 0 and max_iter >= 1 required");
  if (!spec.in_domain(x0)) throw std::domain_error("x0 outside domain");
  std::vector<double> trace{x0};
  double x = x0;
  for (int it = 0; it < max_iter; ++it) {
    double r = spec.eval(x) - x;
    if (std::abs(r) <= tol) {
      return FixedPointResult{x, std::abs(r), FixedPointResult::Method::Newton, it, std::nullopt};
    }
    double dr = spec.eval_derivative(x) - 1.0;
    if (std::abs(dr) < 1e-12) {
      throw RootFindingError(RootFindingError::Kind::DerivativeTooSmall,
                             "derivative of phi(x) - x vanishes at x = " + std::to_string(x),
                             std::move(trace));
    }
    x -= r / dr;
    trace.push_back(x);
    if (!spec.in_domain(x)) {
      throw RootFindingError(RootFindingError::Kind::LeftDomain,
                             "Newton iterate left the domain at x = " + std::to_string(x),
                             std::move(trace));
    }
  }
  throw RootFindingError(RootFindingError::Kind::NonConvergence,
                         "Newton did not converge within " + std::to_string(max_iter) + " steps",
                         std::move(trace));
}

// x_{k+1} = phi(x_k); success when successive iterates agree within tol.
inline FixedPointResult fixed_point_iteration(const RealFunctionSpec& spec, double x0, double tol,
                                              int max_iter) {
  if (tol <= 0 || max_iter < 1) throw std::invalid_argument("tol > 0 and max_iter >= 1 required");
  if (!spec.in_domain(x0)) throw std::domain_error("x0 outside domain");
  std::vector<double> trace{x0};
  double x = x0;
  for (int it = 0; it < max_iter; ++it) {
    double next = spec.eval(x);
    trace.push_back(next);
    if (!spec.in_domain(next)) {
      throw RootFindingError(RootFindingError::Kind::LeftDomain,
                             "iterate left the domain at x = " + std::to_string(next),
                             std::move(trace));
    }
    if (std::abs(next - x) <= tol) {
      return FixedPointResult{next, std::abs(spec.eval(next) - next),
                              FixedPointResult::Method::Iteration, it + 1, std::nullopt};
    }
    x = next;
  }
  throw RootFindingError(RootFindingError::Kind::NonConvergence,
                         "fixed-point iteration did not converge within " +
                             std::to_string(max_iter) + " steps",
                         std::move(trace));
}

struct RealMonotonicityVerdict {
  bool monotone;
  std::optional<std::pair<double, double>> counterexample;  // x < y with phi(x) > phi(y)
};

// Checks phi(x_i) <= phi(x_j) + 1e-12 over all ordered pairs on a uniform
// grid of `samples` points; reports the first violation.
inline RealMonotonicityVerdict monotonicity_scan(const RealFunctionSpec& spec, int samples) {
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  double a = spec.domain_lo(), b = spec.domain_hi();
  std::vector<double> xs(samples), ys(samples);
  for (int i = 0; i < samples; ++i) {
    xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(samples - 1);
    ys[i] = spec.eval(xs[i]);
  }
  for (int i = 0; i < samples; ++i) {
    for (int j = i + 1; j < samples; ++j) {
      if (ys[i] > ys[j] + 1e-12) {
        return RealMonotonicityVerdict{false, std::make_pair(xs[i], xs[j])};
      }
    }
  }
  return RealMonotonicityVerdict{true, std::nullopt};
}

}  // namespace fixcalc
