#ifndef SLACKCERT_POLYTOPE_GEOMETRY_HPP
#define SLACKCERT_POLYTOPE_GEOMETRY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "slackcert/certival/interval.hpp"
#include "slackcert/ratpoly/linalg.hpp"

namespace slackcert {

// Points live in the chart x_1 + ... + x_{d+1} = 1 and carry all d+1 coordinates.
// Inequalities are homogeneous: l . x >= 0 on the chart.
using RPoint = std::vector<Rational>;
using IPoint = std::vector<Interval>;

class DegenerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HPolytope {
  std::vector<std::vector<Rational>> facets;
  std::size_t coords() const { return facets.empty() ? 0 : facets[0].size(); }
};

struct IHPolytope {
  std::vector<std::vector<Interval>> facets;
};

class VPolytope {
 public:
  VPolytope() = default;
  /// Drops duplicates, keeping first occurrences; throws on an empty list, mismatched
  /// sizes or a coordinate sum other than 1.
  explicit VPolytope(std::vector<RPoint> points);
  const std::vector<RPoint>& points() const { return points_; }
  std::size_t coords() const { return points_.empty() ? 0 : points_[0].size(); }

 private:
  std::vector<RPoint> points_;
};

IPoint to_interval(const RPoint& x);
IHPolytope to_interval(const HPolytope& h);

Rational evaluate(const std::vector<Rational>& l, const RPoint& x);
Interval evaluate(const std::vector<Interval>& l, const IPoint& x);

/// Scales by a positive factor so the largest coefficient magnitude is 1.
std::vector<Rational> normalize_functional(std::vector<Rational> l);

/// Facet k vanishes on every vertex but k and is positive on vertex k. Throws
/// DegenerateError when the vertices are affinely dependent.
HPolytope simplex_hrep(const std::vector<RPoint>& vertices);

/// Interval version; throws DegenerateError when an orientation is not certified.
IHPolytope simplex_hrep(const std::vector<IPoint>& vertices);

/**
 * Irredundant facets by brute force over d-subsets of generators: every hyperplane through
 * d affinely independent generators with all generators weakly on one side. Functionals
 * are normalized and listed in order of first discovery. Throws DegenerateError unless the
 * generators span the chart.
 */
HPolytope facet_enum(const VPolytope& vp);

/// Vertex k is where every facet but k meets the chart.
std::vector<RPoint> vertices_of_simplex(const HPolytope& h);

/// Plain-text exchange: a header "V <coords>" or "H <coords>" then one point or
/// inequality per line as space-separated rationals; '#' starts a comment.
std::string format_vpolytope(const VPolytope& vp);
std::string format_hpolytope(const HPolytope& hp);
VPolytope parse_vpolytope(const std::string& text);
HPolytope parse_hpolytope(const std::string& text);

}  // namespace slackcert

#endif
