#include <algorithm>

#include "doctest.h"
#include "slackcert/polytope/chain.hpp"
#include "slackcert/polytope/lp.hpp"
#include "slackcert/polytope/membership.hpp"
#include "slackcert/polytope/synth.hpp"
#include "support.hpp"

using namespace slackcert;
using namespace slackcert::testing;

namespace {

std::vector<RPoint> standard_simplex(std::size_t coords) {
  std::vector<RPoint> out;
  for (std::size_t k = 0; k < coords; ++k) {
    RPoint e(coords, 0);
    e[k] = 1;
    out.push_back(e);
  }
  return out;
}

// Chart point from free coordinates, the last coordinate closing the sum.
RPoint chart(const std::vector<Rational>& free) {
  RPoint x = free;
  Rational s = 0;
  for (const auto& c : free) s += c;
  x.push_back(1 - s);
  return x;
}

RPoint random_chart(Gen& g, std::size_t dim) {
  std::vector<Rational> free;
  for (std::size_t k = 0; k < dim; ++k) free.push_back(g.rational(10, 7) / 10);
  return chart(free);
}

int facet_class(const HPolytope& h, const RPoint& x) {
  bool zero = false;
  for (const auto& f : h.facets) {
    Rational v = evaluate(f, x);
    if (v < 0) return 2;
    zero = zero || v == 0;
  }
  return zero ? 1 : 0;
}

}  // namespace

TEST_CASE("exact linear programming") {
  // max x + y subject to x + y + s = 1.
  auto r = solve_lp({{1, 1, 1}}, {1}, {1, 1, 0});
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.value == 1);
  CHECK(solve_lp({{1, 1}}, {-1}, {0, 0}).status == LpStatus::Infeasible);
  CHECK(solve_lp({{1, -1}}, {0}, {1, 0}).status == LpStatus::Unbounded);
}

TEST_CASE("H-representation of simplices") {
  HPolytope h = simplex_hrep(standard_simplex(5));
  REQUIRE(h.facets.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t c = 0; c < 5; ++c) CHECK(h.facets[k][c] == (k == c ? 1 : 0));
  }
  Gen g(43);
  for (int n = 0; n < 20; ++n) {
    std::vector<RPoint> v;
    for (int k = 0; k < 5; ++k) v.push_back(random_chart(g, 4));
    HPolytope s;
    try {
      s = simplex_hrep(v);
    } catch (const DegenerateError&) {
      continue;
    }
    for (std::size_t k = 0; k < 5; ++k) {
      for (std::size_t m = 0; m < 5; ++m) {
        Rational val = evaluate(s.facets[k], v[m]);
        if (k == m) {
          CHECK(val > 0);
        } else {
          CHECK(val == 0);
        }
      }
    }
    CHECK(vertices_of_simplex(s) == v);
    auto iv = simplex_hrep(std::vector<IPoint>{to_interval(v[0]), to_interval(v[1]), to_interval(v[2]), to_interval(v[3]),
                                               to_interval(v[4])});
    for (std::size_t k = 0; k < 5; ++k) CHECK(evaluate(iv.facets[k], to_interval(v[k])).positive());
  }
  CHECK_THROWS_AS(simplex_hrep(std::vector<RPoint>{chart({0, 0}), chart({q(1, 2), 0}), chart({1, 0})}), DegenerateError);
}

TEST_CASE("facet enumeration") {
  HPolytope s = facet_enum(VPolytope(standard_simplex(5)));
  CHECK(s.facets.size() == 5);

  std::vector<RPoint> cube;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Rational> free;
    for (int k = 0; k < 4; ++k) free.push_back((mask >> k) & 1 ? q(1, 5) : q(1, 10));
    cube.push_back(chart(free));
  }
  CHECK(facet_enum(VPolytope(cube)).facets.size() == 8);
  CHECK_THROWS_AS(facet_enum(VPolytope({chart({0, 0, 0, 0}), chart({q(1, 2), 0, 0, 0}), chart({0, q(1, 2), 0, 0})})),
                  DegenerateError);
}

TEST_CASE("exact membership") {
  VPolytope s(standard_simplex(5));
  CHECK(member_exact(s, RPoint(5, q(1, 5))).status == Membership::Inside);
  CHECK(member_exact(s, standard_simplex(5)[2]).status == Membership::OnBoundary);
  CHECK(member_exact(s, RPoint{1, 1, 1, 1, -3}).status == Membership::Outside);
  auto w = member_exact(s, RPoint(5, q(1, 5))).weights;
  Rational sum = 0;
  for (const auto& x : w) sum += x;
  CHECK(sum == 1);
}

TEST_CASE("facet enumeration and LP membership agree") {
  Gen g(47);
  for (int n = 0; n < 12; ++n) {
    std::size_t dim = static_cast<std::size_t>(g.integer(2, 4));
    std::vector<RPoint> pts;
    int count = static_cast<int>(g.integer(static_cast<long>(dim) + 2, 10));
    for (int k = 0; k < count; ++k) pts.push_back(random_chart(g, dim));
    VPolytope vp(pts);
    HPolytope h;
    try {
      h = facet_enum(vp);
    } catch (const DegenerateError&) {
      continue;
    }
    for (const auto& p : vp.points()) CHECK(facet_class(h, p) != 2);
    for (int s = 0; s < 100; ++s) {
      RPoint x = random_chart(g, dim);
      // Half of the queries are convex combinations, which land inside or on the boundary.
      if (s % 2 == 0) {
        std::vector<Rational> w;
        Rational total = 0;
        for (std::size_t k = 0; k < vp.points().size(); ++k) {
          w.push_back(g.integer(0, 3));
          total += w.back();
        }
        if (total == 0) continue;
        x.assign(dim + 1, 0);
        for (std::size_t k = 0; k < w.size(); ++k) {
          for (std::size_t c = 0; c <= dim; ++c) x[c] += w[k] / total * vp.points()[k][c];
        }
      }
      int expected = facet_class(h, x);
      auto m = member_exact(vp, x).status;
      CHECK(static_cast<int>(m) == expected);
    }
  }
}

TEST_CASE("certified membership") {
  HPolytope h = simplex_hrep(standard_simplex(4));
  IPoint inside{Interval(q(1, 4)), Interval(q(1, 4)), Interval(q(1, 4)), Interval(q(1, 4))};
  CHECK(member_certified(h, inside).status == CertifiedMembership::Inside);
  IPoint on{Interval(0), Interval(q(1, 3)), Interval(q(1, 3)), Interval(q(1, 3))};
  CHECK(member_certified(h, on).status == CertifiedMembership::Unknown);
  CHECK(member_certified(h, on, {true, false, false, false}).status == CertifiedMembership::OnFacetSymbolic);
  Gen g(53);
  for (int n = 0; n < 100; ++n) {
    IPoint x;
    IPoint wide;
    for (int k = 0; k < 4; ++k) {
      Rational c = g.rational(2, 6);
      Rational r = abs(g.rational(1, 20) * g.rational(1, 20));
      x.emplace_back(c);
      wide.emplace_back(c - r, c + r);
    }
    auto narrow = member_certified(h, x).status;
    auto widened = member_certified(h, wide).status;
    if (narrow == CertifiedMembership::Outside) CHECK(widened != CertifiedMembership::Inside);
    if (widened == CertifiedMembership::Inside) CHECK(narrow == CertifiedMembership::Inside);
  }
}

TEST_CASE("exchange format round trip") {
  VPolytope vp(standard_simplex(3));
  VPolytope back = parse_vpolytope(format_vpolytope(vp));
  CHECK(back.points() == vp.points());
  HPolytope h = simplex_hrep(standard_simplex(3));
  CHECK(parse_hpolytope("# comment\n" + format_hpolytope(h)).facets == h.facets);
  CHECK_THROWS(parse_vpolytope("H 3\n1 0 0\n"));
}

TEST_CASE("grid rounding keeps the chart") {
  Gen g(59);
  for (int n = 0; n < 50; ++n) {
    RPoint x = random_chart(g, 4);
    RPoint r = round_chart(to_interval(x), Integer(1000000), 4, n % 5 == 0 ? 1 : -1);
    Rational s = 0;
    for (const auto& c : r) s += c;
    CHECK(s == 1);
    if (n % 5 == 0) CHECK(r[1] == 0);
    for (std::size_t k = 0; k < 4; ++k) {
      if (n % 5 == 0 && k == 1) continue;
      CHECK(abs(r[k] - x[k]) <= q(1, 1000000));
    }
  }
}

TEST_CASE("barycentric coordinates in a slice") {
  std::array<RPoint, 4> tet{RPoint{0, 1, 0, 0, 0}, RPoint{0, 0, 1, 0, 0}, RPoint{0, 0, 0, 1, 0}, RPoint{0, 0, 0, 0, 1}};
  IPoint center(5, Interval(q(1, 4)));
  center[0] = Interval(0);
  auto b = slice_barycentric(tet, 0, center);
  for (const auto& x : b) CHECK(x == Interval(q(1, 4)));
}
