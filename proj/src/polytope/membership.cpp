#include "slackcert/polytope/membership.hpp"

#include "slackcert/polytope/lp.hpp"

namespace slackcert {

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Inside: return "Inside";
    case Membership::OnBoundary: return "OnBoundary";
    case Membership::Outside: return "Outside";
  }
  return "Outside";
}

std::string to_string(CertifiedMembership m) {
  switch (m) {
    case CertifiedMembership::Inside: return "Inside";
    case CertifiedMembership::Outside: return "Outside";
    case CertifiedMembership::OnFacetSymbolic: return "OnFacetSymbolic";
    case CertifiedMembership::Unknown: return "Unknown";
  }
  return "Unknown";
}

ExactMembership member_exact(const VPolytope& vp, const RPoint& x) {
  const auto& pts = vp.points();
  const std::size_t m = pts.size();
  const std::size_t n = vp.coords();
  if (x.size() != n) throw std::invalid_argument("member_exact: dimension mismatch");
  // Variables mu_k = lambda_k - s >= 0 and s >= 0; the coordinate equations imply
  // sum lambda = 1 because every point lies in the chart.
  Matrix<Rational> A(n, std::vector<Rational>(m + 1, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < m; ++k) {
      A[r][k] = pts[k][r];
      A[r][m] += pts[k][r];
    }
  }
  std::vector<Rational> c(m + 1, 0);
  c[m] = 1;
  auto lp = solve_lp(A, x, c);
  ExactMembership out;
  if (lp.status == LpStatus::Infeasible) return out;
  if (lp.status == LpStatus::Unbounded) throw std::logic_error("member_exact: bounded LP reported unbounded");
  out.status = lp.value > 0 ? Membership::Inside : Membership::OnBoundary;
  out.weights.resize(m);
  for (std::size_t k = 0; k < m; ++k) out.weights[k] = lp.x[k] + lp.x[m];
  return out;
}

CertifiedReport member_certified(const IHPolytope& hp, const IPoint& x, const std::vector<bool>& symbolic_zero) {
  CertifiedReport r;
  bool all_positive = true;
  bool any_symbolic = false;
  bool any_negative = false;
  for (std::size_t k = 0; k < hp.facets.size(); ++k) {
    bool sym = k < symbolic_zero.size() && symbolic_zero[k];
    r.symbolic.push_back(sym);
    if (sym) {
      r.values.emplace_back(0);
      any_symbolic = true;
      continue;
    }
    Interval v = evaluate(hp.facets[k], x);
    r.values.push_back(v);
    if (!v.positive()) all_positive = false;
    if (v.negative()) any_negative = true;
  }
  if (any_negative) {
    r.status = CertifiedMembership::Outside;
  } else if (!all_positive) {
    r.status = CertifiedMembership::Unknown;
  } else {
    r.status = any_symbolic ? CertifiedMembership::OnFacetSymbolic : CertifiedMembership::Inside;
  }
  return r;
}

CertifiedReport member_certified(const HPolytope& hp, const IPoint& x, const std::vector<bool>& symbolic_zero) {
  return member_certified(to_interval(hp), x, symbolic_zero);
}

}  // namespace slackcert
