#include "doctest.h"
#include "slackcert/witness/checks.hpp"
#include "support.hpp"

using namespace slackcert;
using namespace slackcert::testing;

namespace {

const WitnessModel& model() {
  static const WitnessModel m = build_model(build_pi());
  return m;
}

const ConstantsLadder& ladder() {
  static const ConstantsLadder l(build_pi());
  return l;
}

bool sums_to_one(const FracVec5& x) {
  PolyFraction s;
  for (const auto& c : x) s = s + c;
  return equivalent(s, PolyFraction(MultiPoly(1)));
}

}  // namespace

TEST_CASE("coefficient table of pi") {
  MultiPoly pi = build_pi();
  auto c = pi.coefficients_in(Var::t);
  REQUIRE(c.size() == 6);
  CHECK(c[5] == P("-3584 - 11648*a - 896*b + 1120*a*b"));
  CHECK(c[0] == P("-96*a - 96*b - 48*a*b - 192*c - 96*a*c - 96*b*c + 99*a*b*c"));
  CHECK(pi.evaluate({{Var::a, 0}, {Var::b, 0}, {Var::c, 0}}) == P("-256*t^2 - 2944*t^3 - 8576*t^4 - 3584*t^5"));
}

TEST_CASE("square conditions") {
  MultiPoly pi = build_pi();
  SquareConditions sc = square_conditions(pi);
  CHECK(sc.s[0] == pi.substitute(Var::t, MultiPoly(-2)));
  CHECK_FALSE(sc.s[0].is_zero());
  SquareConditions perfect = square_conditions(P("(-t-2)*(t^2+t+1)^2"));
  for (const auto& s : perfect.s) CHECK(s.is_zero());
  CHECK_THROWS(square_conditions(P("t^3 + a")));

  const Constants& k = ladder().at(64);
  for (const auto& s : sc.s) CHECK(ival_eval(s, k.assignment(false), k.bits).contains_zero());
}

TEST_CASE("constants match the printed prefixes") {
  Constants k = solve_constants(build_pi(), q(1, 1000000000000L));
  CHECK(k.abc.unique);
  CHECK(k.tau.unique);
  for (const Interval* x : std::initializer_list<const Interval*>{&k.alpha(), &k.beta(), &k.gamma(), &k.tau.root}) CHECK(x->width() <= q(1, 1000000000000L));
  CHECK(to_decimal(k.alpha().lo(), 4) == "-0.0311");
  CHECK(to_decimal(k.alpha().hi(), 4) == "-0.0311");
  CHECK(to_decimal(k.beta().lo(), 4) == "-0.4088");
  CHECK(to_decimal(k.gamma().lo(), 4) == "0.3983");
  CHECK(to_decimal(k.tau.root.lo(), 4) == "0.1765");
  CHECK(to_decimal(k.tau.root.hi(), 4) == "0.1765");
  CHECK(k.tau.root.strictly_inside(Interval(0, 1)));

  MultiPoly pi = build_pi();
  auto at = k.assignment(true);
  CHECK(ival_eval(pi, at, k.bits).contains_zero());
  CHECK(ival_eval(pi.diff(Var::t), at, k.bits).contains_zero());
  CHECK_FALSE(ival_eval(pi.diff(Var::t).diff(Var::t), at, k.bits).contains_zero());
  // A perturbed pi either loses its certified solution or moves it away from the genuine one.
  try {
    Constants moved = solve_constants(build_pi(P("1/100*t^5")), q(1, 1000000));
    CHECK_FALSE(intersect(moved.alpha(), k.alpha()).has_value());
  } catch (const ConstantsError&) {
    CHECK(true);
  }
}

TEST_CASE("pi agrees with (-t-2) u^2 on sample points") {
  const Constants& k = ladder().at(128);
  MultiPoly pi = build_pi();
  for (int s = 0; s <= 19; ++s) {
    Interval t(q(-1) + q(2 * s, 19));
    IntervalAssignment at = k.assignment(false);
    at[Var::t] = t;
    Interval u = k.u[0] * t * t + k.u[1] * t + k.u[2];
    Interval diff = ival_eval(pi, at, k.bits) + (t + Interval(2)) * u * u;
    CHECK(diff.contains_zero());
  }
}

TEST_CASE("point table") {
  PointTable pts = point_table();
  auto omega0 = pts.Omega();
  for (std::size_t k = 0; k < 5; ++k) {
    auto v = omega0[k].evaluate({{Var::t, 0}});
    CHECK(equivalent(v, PolyFraction(MultiPoly(k < 4 ? q(1, 4) : Rational(0)))));
  }
  CHECK(pts.omega_sum == P("4 + 4*t"));
  CHECK(pts.F_sum[1][2] == P("400 + 100*b"));
  CHECK(pts.F_sum[0][0] == P("4000 + 1000*a"));
  CHECK(pts.H[4] == q(1, 4));
  CHECK(pts.H[0] == q(3, 16));
  CHECK(sums_to_one(pts.Omega()));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(sums_to_one(pts.F_point(i, j)));
      CHECK(sums_to_one(pts.f_point(i, j)));
      auto f = pts.f_point(i, j);
      auto F = pts.F_point(i, j);
      Var v = v_var(i + 1, j + 1);
      for (std::size_t k = 0; k < 5; ++k) CHECK(equivalent(f[k].evaluate({{v, 0}}), F[k]));
      PolyFraction v_frac{MultiPoly::variable(v)};
      PolyFraction expected = (F[4] - v_frac) / (PolyFraction(MultiPoly(1)) - v_frac);
      CHECK(equivalent(f[4], expected));
    }
  }
}

TEST_CASE("facet normals are orthogonal to their defining points") {
  const WitnessModel& m = model();
  PolyVec5 apex = symbolic_apex();
  for (int i = 0; i < 4; ++i) {
    const PolyVec5& n = m.normals[static_cast<std::size_t>(i)];
    CHECK(dot(n, apex).is_zero());
    for (int j = 0; j < 3; ++j) CHECK(dot(n, m.points.f_homogeneous(i, j)).is_zero());
  }
  NumericPoints np = numeric_points(m.points, ladder().at(64));
  DeltaGeometry geo = delta_geometry(np);
  REQUIRE(geo.oriented);
  bool nonzero = false;
  for (const auto& c : geo.facet[0]) nonzero = nonzero || !c.contains_zero();
  CHECK(nonzero);
  for (const auto& margin : geo.orientation_margin) CHECK(margin.positive());
}

TEST_CASE("simplex vertices on the slice") {
  const WitnessModel& m = model();
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(m.slice.V[j][j].is_zero());
    CHECK(coordinate_sum(m.slice.V[j]) == m.slice.V_sum[j]);
    CHECK(sums_to_one(m.V_point(static_cast<int>(j))));
    for (std::size_t i = 0; i < 4; ++i) {
      if (i != j) CHECK(dot(m.slice.normal[i], m.slice.V[j]).is_zero());
    }
  }
  // A repeated row kills the determinant identically.
  CHECK(det_with_last(m.slice, m.slice.V[0]).is_zero());
}

TEST_CASE("phi factors through pi") {
  const WitnessModel& m = model();
  REQUIRE(m.factor.status == IdentityStatus::IdentityProven);
  CHECK(m.phi_num == m.factor.zeta_num * m.pi);
  CHECK(m.factor.specialization_agrees);
  CHECK(m.factor.specialized_phi == m.factor.specialized_product);

  // A tampered pi cannot divide phi_num.
  MultiPoly bad = build_pi(P("t^2"));
  Factorization f = phi_and_zeta(m.phi_num, bad, m.points);
  CHECK(f.status == IdentityStatus::IdentityFailed);
  CHECK_FALSE(f.remainder.is_zero());
}

TEST_CASE("derivative signs") {
  const WitnessModel& m = model();
  NumericPoints np = numeric_points(m.points, ladder().at(64));
  DeltaGeometry geo = delta_geometry(np);
  DirectionPoints dirs;
  for (int i = 0; i < 4; ++i) {
    for (int d = 0; d < 4; ++d) {
      for (int k = 0; k < 5; ++k) dirs[i][d][k] = geo.V[i][k].mid();
    }
  }
  DerivReport r = check_derivatives(m, ladder(), dirs, 512);
  REQUIRE(r.checks.size() == 29);
  for (const auto& c : r.checks) {
    CHECK_MESSAGE(c.satisfied(), c.id);
    CHECK_FALSE(c.verdict.enclosure.contains_zero());
  }
  CHECK(r.zeta.satisfied());
  CHECK(r.phi_second.verdict.sign == Sign::Negative);
  CHECK(r.cross_check_agrees);
  CHECK(r.all_required_hold());
}

TEST_CASE("double root, zero of Psi and crossings") {
  const WitnessModel& m = model();
  DoubleRootReport dr = double_root(m.pi, ladder(), 512);
  CHECK(dr.holds());
  CHECK(psi_at_omega(m, ladder().at(64)).contains_zero());
  for (const auto& c : facet_crossing(m, ladder(), 512)) {
    CHECK(c.sign.verdict.sign == Sign::Negative);
    CHECK(c.incident_at_zero);
    CHECK(c.linear_in_v);
  }
  for (const auto& c : local_decrease(m, ladder(), q(1, 1000000), 512)) CHECK_MESSAGE(c.satisfied(), c.id);
  auto bottom = bottom_incidence(m, ladder(), 512);
  CHECK(bottom.size() == 12);
  for (const auto& c : bottom) CHECK(c.required == Requirement::None);
}

TEST_CASE("central differences agree with jet derivatives") {
  auto fd = finite_difference_check(model(), ladder().at(128), q(1, 100000000), 256);
  REQUIRE(fd.size() == 12);
  for (const auto& f : fd) {
    CHECK(f.agrees);
    CHECK(f.remainder.mag() < q(1, 1000000000000L));
  }
}
