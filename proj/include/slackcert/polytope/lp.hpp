#ifndef SLACKCERT_POLYTOPE_LP_HPP
#define SLACKCERT_POLYTOPE_LP_HPP

#include <vector>

#include "slackcert/ratpoly/linalg.hpp"

namespace slackcert {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// max c.x subject to A x = b, x >= 0, by the two-phase tableau simplex method with
/// Bland's rule over exact rationals (terminates without cycling).
LpResult solve_lp(const Matrix<Rational>& A, const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace slackcert

#endif
