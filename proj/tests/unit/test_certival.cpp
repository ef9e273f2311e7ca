#include "doctest.h"
#include "slackcert/certival/eval.hpp"
#include "slackcert/certival/jet.hpp"
#include "slackcert/certival/roots.hpp"
#include "slackcert/witness/constants.hpp"
#include "support.hpp"

using namespace slackcert;
using namespace slackcert::testing;

TEST_CASE("interval evaluation contains the range") {
  Interval x = ival_eval(P("t^2"), {{Var::t, Interval(-1, 1)}});
  CHECK(x.contains(Interval(0, 1)));
  CHECK(ival_eval(P("3/4"), {}) == Interval(q(3, 4)));
  CHECK_THROWS_AS(ival_eval(P("t*a"), {{Var::t, Interval(1)}}), UnassignedVariable);

  Gen g(31);
  for (int k = 0; k < 20; ++k) {
    MultiPoly p = g.poly({Var::t, Var::a, Var::b}, 5, 3);
    IntervalAssignment box;
    std::map<Var, std::pair<Rational, Rational>> bounds;
    for (Var v : {Var::t, Var::a, Var::b}) {
      Rational lo = g.rational(3, 4);
      Rational hi = lo + abs(g.rational(2, 3) * g.rational(2, 3)) + q(1, 10);
      box[v] = Interval(lo, hi);
      bounds[v] = {lo, hi};
    }
    Interval range = ival_eval(p, box, 64);
    for (int s = 0; s < 100; ++s) {
      RationalAssignment at;
      for (auto& [v, b] : bounds) {
        Rational w(g.integer(0, 1000), 1000);
        w.canonicalize();
        at[v] = b.first + (b.second - b.first) * w;
      }
      CHECK(range.contains(p.evaluate(at).constant_value()));
    }
    // Monotone under shrinking.
    IntervalAssignment inner;
    for (auto& [v, b] : bounds) inner[v] = Interval(b.first, (b.first + b.second) / 2);
    CHECK(ival_eval(p, box).contains(ival_eval(p, inner)));
  }
}

TEST_CASE("outward rounding keeps containment") {
  Gen g(37);
  for (int k = 0; k < 100; ++k) {
    Rational a = g.big_rational();
    Rational b = g.big_rational();
    Interval x(std::min(a, b), std::max(a, b), 24);
    CHECK(x.lo() <= std::min(a, b));
    CHECK(x.hi() >= std::max(a, b));
    Interval y = Interval(b) * Interval(a, a, 16);
    CHECK(y.contains(Rational(a * b)));
  }
  CHECK_THROWS_AS(Interval(1) / Interval(-1, 1), IntervalDivisionByZero);
  CHECK(Interval::parse(Interval(q(-1, 3), q(2, 7)).to_text()) == Interval(q(-1, 3), q(2, 7)));
  Interval s = sqrt(Interval(2), 80);
  CHECK(to_decimal(s.lo(), 20) == to_decimal(s.hi(), 20));
  CHECK(s.lo() * s.lo() <= 2);
  CHECK(s.hi() * s.hi() >= 2);
}

TEST_CASE("univariate root isolation") {
  auto r = root_isolate_1d(P("t^2 - 2"), Var::t, Interval(1, 2), q(1, 10000000000L));
  CHECK(r.root.width() <= q(1, 10000000000L));
  CHECK(r.unique);
  CHECK(to_decimal(r.root.lo(), 10) == "1.4142135623");
  CHECK(ival_eval(P("t^2 - 2"), {{Var::t, r.root}}).contains_zero());
  CHECK_THROWS_AS(root_isolate_1d(P("t^2 + 1"), Var::t, Interval(-10, 10), q(1, 1000)), NotIsolated);
}

TEST_CASE("certified 3-d solve") {
  std::array<MultiPoly, 3> sys{P("a - 1/3"), P("b + 1/2"), P("c")};
  Box3 seed{{Interval(0, 1), Interval(-1, 0), Interval(-1, 1)}};
  Box3 box = solve_3d_certified(sys, seed, q(1, 1000000));
  CHECK(box.unique);
  CHECK(box.x[0].contains(q(1, 3)));
  CHECK(box.x[1].contains(q(-1, 2)));
  CHECK(box.x[2].contains(Rational(0)));
  for (const auto& x : box.x) CHECK(x.width() <= q(1, 1000000));
}

TEST_CASE("constant boxes nest as the width shrinks and satisfy the system") {
  MultiPoly pi = build_pi();
  SquareConditions sc = square_conditions(pi);
  Box3 seed;
  auto s = constants_seed();
  for (std::size_t k = 0; k < 3; ++k) seed.x[k] = Interval(s[k] - q(1, 1000), s[k] + q(1, 1000));
  Rational width = q(1, 1000000);
  Box3 prev = solve_3d_certified(sc.s, seed, width);
  for (int k = 0; k < 4; ++k) {
    width /= 10;
    Box3 next = solve_3d_certified(sc.s, seed, width);
    CHECK(next.unique);
    for (std::size_t c = 0; c < 3; ++c) CHECK(prev.x[c].contains(next.x[c]));
    IntervalAssignment at{{Var::a, next.x[0]}, {Var::b, next.x[1]}, {Var::c, next.x[2]}};
    for (const auto& cond : sc.s) CHECK(ival_eval(cond, at, 128).contains_zero());
    prev = next;
  }
}

TEST_CASE("sign verdicts") {
  CHECK(sign_of(P("t^2 + 1"), {{Var::t, Interval(-5, 5)}}).sign == Sign::Positive);
  auto zero = sign_of(MultiPoly(), {});
  CHECK(zero.sign == Sign::Unknown);
  auto refined = sign_with_refinement([](long) { return Interval(0); }, 512);
  CHECK(refined.sign == Sign::Unknown);
  // Constant coefficient of pi is -2 u(0)^2 < 0 at the certified constants.
  ConstantsLadder ladder(build_pi());
  const Constants& k = ladder.at(64);
  MultiPoly pi0 = build_pi().coefficients_in(Var::t)[0];
  CHECK(sign_of(pi0, k.assignment(false), k.bits).sign == Sign::Negative);
  Gen g(41);
  for (int n = 0; n < 100; ++n) {
    MultiPoly p = g.poly({Var::t}, 3, 3);
    auto v = sign_of(p, {{Var::t, Interval(g.rational(1, 3), g.rational(1, 3) + 2)}});
    if (v.sign != Sign::Unknown) CHECK_FALSE(v.enclosure.contains_zero());
  }
  // Fractions are only signed when the denominator is.
  CHECK(sign_of(PolyFraction(P("1"), P("t")), {{Var::t, Interval(-1, 1)}}).sign == Sign::Unknown);
  CHECK(sign_of(PolyFraction(P("1"), P("t")), {{Var::t, Interval(1, 2)}}).sign == Sign::Positive);
}

TEST_CASE("jets and Taylor series differentiate products") {
  Interval x(q(3, 2));
  Jet a = Jet::seed(x, 0, 2);
  Jet b = Jet::seed(Interval(2), 1, 2);
  Jet f = a * a * b - a / b;
  // d/da = 2ab - 1/b, d/db = a^2 + a/b^2.
  CHECK(f.grad(0).contains(Rational(2 * q(3, 2) * 2 - q(1, 2))));
  CHECK(f.grad(1).contains(Rational(q(9, 4) + q(3, 8))));
  auto t = Taylor<3>::variable(x);
  auto cube = t * t * t;
  CHECK(cube[1].contains(Rational(3 * q(9, 4))));
  CHECK(cube[2].contains(Rational(3 * q(3, 2))));
}
