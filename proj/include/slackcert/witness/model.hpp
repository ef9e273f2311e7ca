#ifndef SLACKCERT_WITNESS_MODEL_HPP
#define SLACKCERT_WITNESS_MODEL_HPP

#include <array>
#include <string>

#include "slackcert/ratpoly/multipoly.hpp"
#include "slackcert/ratpoly/polyfraction.hpp"
#include "slackcert/witness/construction.hpp"
#include "slackcert/witness/pi.hpp"
#include "slackcert/witness/points.hpp"

namespace slackcert {

enum class IdentityStatus { IdentityProven, IdentityFailed };
std::string to_string(IdentityStatus s);

struct Factorization {
  IdentityStatus status = IdentityStatus::IdentityFailed;
  /// phi_num = zeta_num * pi when proven.
  MultiPoly zeta_num;
  /// Pseudo-remainder numerator and its denominator when the division is not exact.
  MultiPoly remainder;
  MultiPoly remainder_denom{1};
  /// phi_num and zeta_num * pi agree at a = b = c = 0, phi_num there being recomputed
  /// independently from univariate data.
  bool specialization_agrees = false;
  MultiPoly specialized_phi;
  MultiPoly specialized_product;
};

/**
 * Symbolic data of the construction. The apex normals are exact in (w, a, b, c, v) with
 * w the first four chart coordinates of the apex. The vertices and determinants are exact
 * on the slice apex = Omega(t), v = 0, in (t, a, b, c); away from the slice they are
 * evaluated numerically through the same construction template.
 */
struct WitnessModel {
  PointTable points;
  MultiPoly pi;
  SquareConditions square;
  std::array<PolyVec5, 4> normals;
  Construction<MultiPoly> slice;
  /// phi = phi_num / phi_den = det(V_1..V_4, H) on the slice.
  MultiPoly phi_num;
  MultiPoly phi_den;
  /// det(V_1..V_4, Omega(t)) = omega_det_num / (prod V_sum * omega_sum).
  MultiPoly omega_det_num;
  Factorization factor;

  PolyFraction phi() const { return {phi_num, phi_den}; }
  PolyFraction zeta() const { return {factor.zeta_num, phi_den}; }
  FracVec5 V_point(int j) const;
};

/// Symbolic apex vector (w1, w2, w3, w4, 1 - w1 - w2 - w3 - w4).
PolyVec5 symbolic_apex();

/// Slice construction with F's specialized by `values` (empty for fully symbolic).
Construction<MultiPoly> slice_construction(const PointTable& points, const RationalAssignment& values = {});

Factorization phi_and_zeta(const MultiPoly& phi_num, const MultiPoly& pi, const PointTable& points);

WitnessModel build_model(const MultiPoly& pi);

}  // namespace slackcert

#endif
