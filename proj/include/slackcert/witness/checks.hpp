#ifndef SLACKCERT_WITNESS_CHECKS_HPP
#define SLACKCERT_WITNESS_CHECKS_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "slackcert/certival/eval.hpp"
#include "slackcert/witness/constants.hpp"
#include "slackcert/witness/model.hpp"
#include "slackcert/witness/numeric.hpp"

namespace slackcert {

enum class Requirement { Negative, Positive, Nonzero, None };
std::string to_string(Requirement r);

struct SignCheck {
  std::string id;
  std::string description;
  Requirement required = Requirement::None;
  SignVerdict verdict;
  bool satisfied() const;
};

/**
 * Evaluates `count` quantities at each rung of the ladder up to max_bits; each verdict is
 * taken from the first rung whose enclosure excludes 0. A rung whose evaluation divides by
 * an interval containing 0 leaves every pending value Unknown.
 */
using RungEvaluator = std::function<std::vector<Interval>(const Constants&, long rung)>;
std::vector<SignVerdict> resolve_signs(const ConstantsLadder& ladder, long max_bits, std::size_t count,
                                       const RungEvaluator& eval);

/// Rational chart points A_i, B_i, C_i, D_i (index [i][0..3]).
using DirectionPoints = std::array<std::array<std::array<Rational, 5>, 4>, 4>;

struct DerivReport {
  std::vector<SignCheck> checks;
  SignCheck zeta;
  SignCheck phi_second;
  SignCheck phi_second_factored;  // sign of zeta(tau) * 2 (-tau - 2) u'(tau)^2
  bool cross_check_agrees = false;
  bool all_required_hold() const;
};

/// The 12 partials, 16 directional derivatives, det(V, Omega), zeta(tau) and phi''(tau).
DerivReport check_derivatives(const WitnessModel& model, const ConstantsLadder& ladder, const DirectionPoints& dirs,
                              long max_bits);

/// Oriented derivative at v = 0 of the facet functional along f_ij(v), plus the symbolic
/// facts it relies on (incidence at v = 0 and linearity in v).
struct CrossingCheck {
  SignCheck sign;
  bool incident_at_zero = false;
  bool linear_in_v = false;
};
std::vector<CrossingCheck> facet_crossing(const WitnessModel& model, const ConstantsLadder& ladder, long max_bits);

/// pi(tau) and pi'(tau) enclose 0; pi''(tau) is certified nonzero.
struct DoubleRootReport {
  Interval value;
  Interval first;
  SignCheck second;
  bool holds() const;
};
DoubleRootReport double_root(const MultiPoly& pi, const ConstantsLadder& ladder, long max_bits);

/// Psi(Omega, 0) enclosure; 0 is implied exactly by the identity and tau being a root of pi.
Interval psi_at_omega(const WitnessModel& model, const Constants& constants);

/// Signs of Psi(Omega, delta e_ij) for each unit perturbation.
std::vector<SignCheck> local_decrease(const WitnessModel& model, const ConstantsLadder& ladder, const Rational& delta,
                                      long max_bits);

/**
 * Central difference at step delta against the jet derivative of Psi in v_ij, at `bits`
 * of interval precision. The truncation error is enclosed rigorously as delta^2 times the
 * third Taylor coefficient over [-delta, delta].
 */
struct FiniteDifference {
  int i = 0;
  int j = 0;
  Interval symbolic;
  Interval central;
  Interval remainder;
  bool agrees = false;
};
std::vector<FiniteDifference> finite_difference_check(const WitnessModel& model, const Constants& constants,
                                                      const Rational& delta, long bits);

/// det(V_1..V_4, F_ij) for all twelve points; no expected sign.
std::vector<SignCheck> bottom_incidence(const WitnessModel& model, const ConstantsLadder& ladder, long max_bits);

}  // namespace slackcert

#endif
