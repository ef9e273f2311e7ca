#ifndef SLACKCERT_WITNESS_PI_HPP
#define SLACKCERT_WITNESS_PI_HPP

#include <array>

#include "slackcert/ratpoly/multipoly.hpp"

namespace slackcert {

/// The quintic in t whose coefficients are trilinear forms in a, b, c. `perturbation` is
/// added verbatim; it exists so tests can check that a tampered polynomial is rejected.
MultiPoly build_pi(const MultiPoly& perturbation = MultiPoly());

/**
 * Conditions on (a, b, c) for pi = (-t-2) u^2 with deg u = 2. With q = pi / (-t-2) and
 * u = e t^2 + f t + g where e^2 = q4, f = q3 / (2e), g = q1 / (2f):
 *   s1 = pi(-2)
 *   s2 = 4 q3 q4 (f^2 + 2eg - q2) = q3^3 + 8 q1 q4^2 - 4 q2 q3 q4
 *   s3 = q3^2 (g^2 - q0)          = q1^2 q4 - q0 q3^2
 * Valid where q4 > 0 and q3 != 0.
 */
struct SquareConditions {
  std::array<MultiPoly, 3> s;
  /// Coefficients of the quotient q, index = power of t.
  std::array<MultiPoly, 5> q;
};

/// Throws std::invalid_argument unless pi has degree 5 in t with q4 not identically zero.
SquareConditions square_conditions(const MultiPoly& pi);

/// Text of the chosen elimination form, recorded in certificates.
const char* square_conditions_form();

}  // namespace slackcert

#endif
