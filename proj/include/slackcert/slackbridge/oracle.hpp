#ifndef SLACKCERT_SLACKBRIDGE_ORACLE_HPP
#define SLACKCERT_SLACKBRIDGE_ORACLE_HPP

#include <array>
#include <optional>
#include <vector>

#include "slackcert/polytope/geometry.hpp"

namespace slackcert {

using Point2 = std::array<Rational, 2>;

/// (x, y) -> (x, y, 1 - x - y), so plane polygons use the chart machinery.
RPoint embed2(const Point2& p);

struct NestingWitness {
  std::array<Point2, 3> vertices;  // counterclockwise
  bool p_inside = false;
  bool inside_q = false;
};

struct OracleResult {
  /// Empty means NotFoundAtResolution: no grid triangle nests, which proves nothing about
  /// off-grid triangles.
  std::optional<NestingWitness> witness;
  std::size_t grid_points_in_q = 0;
};

/**
 * Exhaustive search over triangles with vertices on the (grid+1) x (grid+1) lattice of Q's
 * bounding box. A directed grid edge is admissible when every vertex of P lies weakly to
 * its left; a counterclockwise triangle with three admissible edges contains P, and lies in
 * Q because its vertices do. The first triangle in lattice order is returned. Throws
 * std::invalid_argument unless P lies in Q.
 */
OracleResult nesting_oracle_2d(const std::vector<Point2>& p, const std::vector<Point2>& q, int grid);

struct FactorPair {
  Matrix<Rational> B;  // slacks of the triangle's vertices in Q's facets
  Matrix<Rational> C;  // barycentric coordinates of P's vertices in the triangle
};

struct FactorCheck {
  Matrix<Rational> A;
  FactorPair factors;
  bool nonnegative = false;
  bool product_matches = false;
  bool ok() const { return nonnegative && product_matches; }
};

/// Builds A = slack of P in Q and the factorization through the nesting triangle, then
/// verifies B, C >= 0 and A = B C exactly.
FactorCheck nested_factorization(const std::vector<Point2>& p, const std::vector<Point2>& q, const NestingWitness& w);

/// H-representation of conv(q) in chart coordinates (normalized functionals).
HPolytope polygon_hrep(const std::vector<Point2>& q);

}  // namespace slackcert

#endif
