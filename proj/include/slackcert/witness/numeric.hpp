#ifndef SLACKCERT_WITNESS_NUMERIC_HPP
#define SLACKCERT_WITNESS_NUMERIC_HPP

#include <array>

#include "slackcert/certival/interval.hpp"
#include "slackcert/witness/constants.hpp"
#include "slackcert/witness/construction.hpp"
#include "slackcert/witness/model.hpp"

namespace slackcert {

using IVec5 = Vec5<Interval>;

/// Interval values of the point table at certified constants.
struct NumericPoints {
  IVec5 Omega;  // chart point at t = tau
  std::array<std::array<IVec5, 3>, 4> F;  // homogeneous
  std::array<std::array<Interval, 3>, 4> F_sum;
  IVec5 H;
  long bits = 0;

  IVec5 F_chart(int i, int j) const;
};

/// `bits` > 0 overrides the precision carried by the constants.
NumericPoints numeric_points(const PointTable& points, const Constants& constants, long bits = 0);

/// Input with apex `apex` (chart coordinates) and perturbations v[i][j].
template <class T>
ConstructionInput<T> numeric_input(const NumericPoints& np, const Vec5<T>& apex, const std::array<std::array<T, 3>, 4>& v) {
  ConstructionInput<T> in;
  in.omega = apex;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 5; ++k) in.f[i][j][k] = T(np.F[i][j][k]);
      in.f[i][j][4] = in.f[i][j][4] - v[i][j] * T(np.F_sum[i][j]);
    }
  }
  return in;
}

template <class T>
Vec5<T> lift(const IVec5& x) {
  Vec5<T> out;
  for (std::size_t k = 0; k < 5; ++k) out[k] = T(x[k]);
  return out;
}

/// Psi = det(V_1..V_4, last) on chart points.
template <class T>
T chart_det(const Construction<T>& c, const Vec5<T>& last) {
  return det_with_last(c, last) / product_of_sums(c);
}

/**
 * The simplex at (Omega, 0) in chart form: vertices Omega, V_1..V_4 and five inward facet
 * functionals. facet[i] (i < 4) is the oriented normal through Omega and the V_k with
 * k != i; facet[4] is x -> det(V_1..V_4, x), positive at Omega.
 */
struct DeltaGeometry {
  IVec5 Omega;
  std::array<IVec5, 4> V;
  std::array<IVec5, 5> facet;
  std::array<int, 4> orientation{};
  /// Certified orientation margins sigma_i * pi_i . V_i (positive by construction when
  /// the orientation is decided).
  std::array<Interval, 4> orientation_margin;
  bool oriented = false;
};

DeltaGeometry delta_geometry(const NumericPoints& np);

/// Interval dot product.
Interval dot5(const IVec5& x, const IVec5& y);

}  // namespace slackcert

#endif
