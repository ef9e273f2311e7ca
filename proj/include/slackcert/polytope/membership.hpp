#ifndef SLACKCERT_POLYTOPE_MEMBERSHIP_HPP
#define SLACKCERT_POLYTOPE_MEMBERSHIP_HPP

#include <string>
#include <vector>

#include "slackcert/polytope/geometry.hpp"

namespace slackcert {

enum class Membership { Inside, OnBoundary, Outside };
std::string to_string(Membership m);

/**
 * Exact LP: maximize s subject to x = sum lambda_k p_k, lambda_k >= s. Inside iff s > 0
 * (x in the relative interior), OnBoundary iff s = 0, Outside iff infeasible.
 */
struct ExactMembership {
  Membership status = Membership::Outside;
  std::vector<Rational> weights;
};
ExactMembership member_exact(const VPolytope& vp, const RPoint& x);

enum class CertifiedMembership { Inside, Outside, OnFacetSymbolic, Unknown };
std::string to_string(CertifiedMembership m);

struct CertifiedReport {
  CertifiedMembership status = CertifiedMembership::Unknown;
  std::vector<Interval> values;
  /// Facets skipped because exact incidence was proven symbolically.
  std::vector<bool> symbolic;
};

/**
 * Interval evaluation of every inequality. `symbolic_zero[k]` marks facets on which an
 * exact identity proves incidence; they are reported, not evaluated. Inside iff every
 * facet is certified positive; OnFacetSymbolic iff the evaluated ones are and at least
 * one is symbolic; Outside iff some facet is certified negative.
 */
CertifiedReport member_certified(const IHPolytope& hp, const IPoint& x, const std::vector<bool>& symbolic_zero = {});
CertifiedReport member_certified(const HPolytope& hp, const IPoint& x, const std::vector<bool>& symbolic_zero = {});

/// A point counts as contained when Inside or OnFacetSymbolic.
inline bool contained(CertifiedMembership m) {
  return m == CertifiedMembership::Inside || m == CertifiedMembership::OnFacetSymbolic;
}

}  // namespace slackcert

#endif
