#ifndef SLACKCERT_CERTIVAL_ROOTS_HPP
#define SLACKCERT_CERTIVAL_ROOTS_HPP

#include <array>
#include <stdexcept>
#include <vector>

#include "slackcert/certival/interval.hpp"
#include "slackcert/ratpoly/multipoly.hpp"

namespace slackcert {

class NotIsolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoContraction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootEnclosure {
  Interval root;
  /// Interval Newton mapped the enclosure strictly into itself: exactly one root inside.
  bool unique = false;
  /// Every other part of the bracket was excluded, so this is the only root there.
  bool sole_in_bracket = false;
};

/**
 * Leftmost root of sum coeffs[k] x^k in `bracket`, enclosed to width <= width. Subintervals
 * are discarded when the enclosure of p excludes 0, certified by interval Newton, or kept by
 * a strict sign change at their endpoints.
 */
RootEnclosure root_isolate_1d(const std::vector<Interval>& coeffs, const Interval& bracket, const Rational& width);
/// p must involve only x.
RootEnclosure root_isolate_1d(const MultiPoly& p, Var x, const Interval& bracket, const Rational& width);

struct Box3 {
  std::array<Interval, 3> x;
  /// Set only after a Krawczyk step mapped the box strictly into its interior.
  bool unique = false;
};

/**
 * Certified solution of sys(vars) = 0 near seed. A double Newton seed is refined by exact
 * rational Newton and then certified by the Krawczyk operator on a box of half-width
 * width/4 around it, which is returned. Throws NoContraction.
 */
Box3 solve_3d_certified(const std::array<MultiPoly, 3>& sys, const Box3& seed, const Rational& width,
                        const std::array<Var, 3>& vars = {Var::a, Var::b, Var::c});

/// Number of bits b with 2^-b <= width.
long bits_for_width(const Rational& width);

}  // namespace slackcert

#endif
