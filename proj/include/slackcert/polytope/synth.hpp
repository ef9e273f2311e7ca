#ifndef SLACKCERT_POLYTOPE_SYNTH_HPP
#define SLACKCERT_POLYTOPE_SYNTH_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slackcert/polytope/geometry.hpp"

namespace slackcert {

/// Enclosures the synthesis works from: tau, Omega = Omega(tau), the V_i, the inward
/// facets of Delta, and the exact curve q -> Omega(q).
struct SynthInput {
  Interval tau;
  IPoint Omega;
  std::array<IPoint, 4> V;
  IHPolytope delta;
  std::function<RPoint(const Rational&)> omega_curve;
};

struct AuditEntry {
  Rational eps;
  std::string outcome;
};

struct SynthParams {
  Rational eps;
  Integer denominator;  // rounding grid 1/denominator
  Rational q1;
  Rational q2;
  RPoint Omega1;
  RPoint Omega2;
  RPoint W;
  std::array<RPoint, 4> Wi;
  std::array<RPoint, 4> center;                // rounding of V_i in the slice x_i = 0
  std::array<std::array<RPoint, 4>, 4> tetra;  // A_i, B_i, C_i, D_i
  std::vector<AuditEntry> audit;
};

/// Extra acceptance test on a candidate, returning a failure reason.
using SynthValidator = std::function<std::optional<std::string>(const SynthParams&)>;

class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Builds P and Q parameters at eps, halving eps (up to max_halvings times, each attempt
 * audit-logged) until every invariant and the validator pass.
 *  - q1 < tau < q2 on the grid 1/denominator, denominator = max(10^6, 10^k >= 1000/eps)
 *  - W, W_i: grid roundings of Omega, V_i moved toward the rounded centroid of Delta with
 *    weight eps/4, certified strictly inside Delta and within eps of their targets
 *  - A_i..D_i: a regular tetrahedron of circumradius (sqrt 3 / 8) eps in the slice
 *    x_i = 0 centered at the rounding of V_i, with V_i certified in its interior
 */
SynthParams synth_params(const SynthInput& in, const Rational& eps0, const SynthValidator& validator = {},
                         int max_halvings = 20);

/// Every invariant violated by p; empty when all hold.
std::vector<std::string> synth_invariant_failures(const SynthParams& p, const SynthInput& in);

/// Barycentric coordinates of x (restricted to the coordinates other than `slice`) with
/// respect to four points of the slice x_slice = 0.
std::array<Interval, 4> slice_barycentric(const std::array<RPoint, 4>& tetra, std::size_t slice, const IPoint& x);

/// Grid rounding of a chart point: every coordinate but `fix` rounded to 1/den, then `fix`
/// absorbs the difference so the sum stays 1. Coordinates in `zero` are set to 0 exactly.
RPoint round_chart(const IPoint& x, const Integer& den, std::size_t fix, int zero = -1);

/// P = conv(W, W_1..W_4, F_ij) needs the F_ij from outside; Q = conv(Omega_1, Omega_2,
/// A_i, B_i, C_i, D_i) is fully rational.
std::vector<RPoint> q_generators(const SynthParams& p);

}  // namespace slackcert

#endif
