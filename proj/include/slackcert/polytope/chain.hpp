#ifndef SLACKCERT_POLYTOPE_CHAIN_HPP
#define SLACKCERT_POLYTOPE_CHAIN_HPP

#include <array>
#include <string>
#include <vector>

#include "slackcert/polytope/membership.hpp"

namespace slackcert {

/// A point to certify against an H-representation, with facets on which its incidence is
/// already proven symbolically and the membership status required of it.
struct ChainPoint {
  std::string id;
  IPoint x;
  std::vector<bool> symbolic_zero;
  CertifiedMembership expected = CertifiedMembership::Inside;
};

struct TetraPoint {
  std::string id;
  IPoint x;
  std::size_t slice = 0;
  std::array<RPoint, 4> tetra;
};

struct ChainItem {
  std::string id;
  CertifiedMembership status = CertifiedMembership::Unknown;
  std::vector<Interval> values;
  bool ok = false;
};

struct ChainReport {
  std::vector<ChainItem> items;
  bool ok() const;
  std::vector<std::string> failing() const;
};

/**
 * (a) P generators against Delta's facets, (b) Delta's vertices against Q's facets,
 * (c) each V_i against its tetrahedron by barycentric coordinates. Items are certified
 * independently and reported in input order.
 */
ChainReport containment_chain(const std::vector<ChainPoint>& p_points, const IHPolytope& delta,
                              const std::vector<ChainPoint>& delta_vertices, const HPolytope& q_facets,
                              const std::vector<TetraPoint>& tetra_points);

}  // namespace slackcert

#endif
