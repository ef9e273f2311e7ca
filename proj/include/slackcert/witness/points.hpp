#ifndef SLACKCERT_WITNESS_POINTS_HPP
#define SLACKCERT_WITNESS_POINTS_HPP

#include <array>

#include "slackcert/ratpoly/multipoly.hpp"
#include "slackcert/ratpoly/polyfraction.hpp"

namespace slackcert {

using PolyVec5 = std::array<MultiPoly, 5>;
using FracVec5 = std::array<PolyFraction, 5>;

/**
 * Points of the construction in homogeneous form: the chart point is the vector divided by
 * its coordinate sum, which is stored alongside (mu = 1 / omega_sum, lambda_ij = 1 / F_sum).
 * Indices are zero-based: F[i][j] is the point of facet group i+1, position j+1.
 */
struct PointTable {
  PolyVec5 omega;  // in t
  MultiPoly omega_sum;
  std::array<std::array<PolyVec5, 3>, 4> F;  // in a, b, c
  std::array<std::array<MultiPoly, 3>, 4> F_sum;
  std::array<Rational, 5> H;

  /// F - v s e5 with s = F_sum: proportional to (F/s - v e5) / (1 - v), sum s (1 - v).
  PolyVec5 f_homogeneous(int i, int j) const;

  FracVec5 Omega() const;
  FracVec5 F_point(int i, int j) const;
  FracVec5 f_point(int i, int j) const;
};

PointTable point_table();

/// Coordinate sum of a homogeneous vector.
MultiPoly coordinate_sum(const PolyVec5& x);

}  // namespace slackcert

#endif
