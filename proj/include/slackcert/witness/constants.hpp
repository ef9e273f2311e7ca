#ifndef SLACKCERT_WITNESS_CONSTANTS_HPP
#define SLACKCERT_WITNESS_CONSTANTS_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "slackcert/certival/interval.hpp"
#include "slackcert/certival/roots.hpp"
#include "slackcert/ratpoly/multipoly.hpp"
#include "slackcert/witness/pi.hpp"

namespace slackcert {

class ConstantsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Certified enclosures of (a, b, c), of u = e t^2 + f t + g and of its root tau in (0, 1).
 * Every interval has width <= the requested width; arithmetic precision is `bits`.
 */
struct Constants {
  Box3 abc;
  std::array<Interval, 3> u;  // e, f, g
  Interval q4;
  Interval q3;
  RootEnclosure tau;
  Rational width;
  long bits = 0;

  const Interval& alpha() const { return abc.x[0]; }
  const Interval& beta() const { return abc.x[1]; }
  const Interval& gamma() const { return abc.x[2]; }
  /// {a, b, c} and, if requested, t = tau.
  IntervalAssignment assignment(bool with_tau) const;
};

/// Decimal prefixes used to seed the floating-point Newton stage.
std::array<Rational, 3> constants_seed();

/// Throws ConstantsError when contraction fails, q4 or q3 is not certified, or tau is not
/// the unique root of u in (0, 1).
Constants solve_constants(const MultiPoly& pi, const Rational& width);

/**
 * Constants at each rung r of the precision ladder (width 2^-r), computed on first use and
 * then shared immutably. Safe to call concurrently.
 */
class ConstantsLadder {
 public:
  explicit ConstantsLadder(MultiPoly pi) : pi_(std::move(pi)) {}
  const Constants& at(long rung) const;
  const MultiPoly& pi() const { return pi_; }

 private:
  MultiPoly pi_;
  mutable std::mutex mutex_;
  mutable std::map<long, std::unique_ptr<Constants>> cache_;
};

}  // namespace slackcert

#endif
