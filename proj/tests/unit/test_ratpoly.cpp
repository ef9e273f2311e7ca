#include <set>

#include "doctest.h"
#include "slackcert/ratpoly/linalg.hpp"
#include "slackcert/ratpoly/polyfraction.hpp"
#include "slackcert/witness/pi.hpp"
#include "support.hpp"

using namespace slackcert;
using namespace slackcert::testing;

namespace {

// Cofactor expansion along the first row, written independently of the library.
Rational cofactor_det(const Matrix<Rational>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix<Rational> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    d += (c % 2 == 0 ? 1 : -1) * m[0][c] * cofactor_det(minor);
  }
  return d;
}

Matrix<Rational> random_matrix(Gen& g, std::size_t rows, std::size_t cols) {
  Matrix<Rational> m(rows, std::vector<Rational>(cols));
  for (auto& row : m) {
    for (auto& x : row) x = g.integer(-5, 5);
  }
  return m;
}

}  // namespace

TEST_CASE("rationals are canonical and round-trip through text") {
  CHECK(to_text(parse_rational("6/-4")) == "-3/2");
  CHECK(to_text(parse_rational("0")) == "0/1");
  CHECK(parse_rational("-0.0311") == q(-311, 10000));
  CHECK(to_decimal(q(-1, 3), 4) == "-0.3333");
  Gen g(11);
  for (int k = 0; k < 200; ++k) {
    Rational x = g.big_rational();
    Rational y = g.big_rational();
    CHECK((x + y) - y == x);
    CHECK(parse_rational(to_text(x)) == x);
    CHECK(round_down(x, 40) <= x);
    CHECK(round_up(x, 40) >= x);
    CHECK(round_up(x, 40) - round_down(x, 40) <= abs(x) * pow2(-38));
  }
}

TEST_CASE("polynomial arithmetic examples") {
  CHECK(P("t+1") + P("t-1") == P("2*t"));
  CHECK(P("t+2") * P("t-2") == P("t^2-4"));
  // Schoolbook: (-t - 2)(t^2 - 2t + 1) = -t^3 + 2t^2 - t - 2t^2 + 4t - 2.
  CHECK(P("-t-2") * P("(t-1)^2") == P("-t^3 + 3*t - 2"));
  CHECK(P("t^3").diff(Var::t) == P("3*t^2"));
  CHECK(P("t^2").diff(Var::v11).is_zero());
  CHECK(P("3/4*t^2*a - (b+1)^2").to_string() == MultiPoly::parse(P("3/4*t^2*a - (b+1)^2").to_string()).to_string());
}

TEST_CASE("derivative of pi keeps the support of its nonconstant part") {
  MultiPoly pi = build_pi();
  MultiPoly d = pi.diff(Var::t);
  CHECK(d.degree(Var::t) == 4);
  auto pc = pi.coefficients_in(Var::t);
  auto dc = d.coefficients_in(Var::t);
  REQUIRE(dc.size() == 5);
  for (std::size_t k = 1; k < pc.size(); ++k) {
    CHECK(dc[k - 1] == pc[k] * Rational(static_cast<long>(k)));
    std::set<std::string> a;
    std::set<std::string> b;
    for (const auto& term : pc[k].terms()) a.insert(MultiPoly::monomial(1, term.mono).to_string());
    for (const auto& term : dc[k - 1].terms()) b.insert(MultiPoly::monomial(1, term.mono).to_string());
    CHECK(a == b);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Gen g(7);
  const std::vector<Var> vars{Var::t, Var::a, Var::b, Var::v11};
  for (int k = 0; k < 40; ++k) {
    MultiPoly x = g.poly(vars, 5, 3);
    MultiPoly y = g.poly(vars, 5, 3);
    MultiPoly z = g.poly(vars, 4, 2);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
    CHECK((x - x).is_zero());
    CHECK((x * y).diff(Var::t) == x.diff(Var::t) * y + x * y.diff(Var::t));
  }
}

TEST_CASE("division in one variable") {
  auto r = poly_divmod(P("t^2-4"), P("t-2"), Var::t);
  CHECK(r.rem_num.is_zero());
  CHECK(r.quot_num == P("t+2") * r.denom);

  MultiPoly pi = build_pi();
  auto d = poly_divmod(pi, P("-t-2"), Var::t);
  CHECK(d.denom == MultiPoly(1));
  CHECK(d.quot_num.degree(Var::t) == 4);
  CHECK(d.quot_num.coefficients_in(Var::t)[4] == P("3584 + 11648*a + 896*b - 1120*a*b"));
  CHECK(d.rem_num == pi.substitute(Var::t, MultiPoly(-2)));

  Gen g(3);
  for (int k = 0; k < 30; ++k) {
    MultiPoly p = g.poly({Var::t, Var::a, Var::b}, 6, 3);
    MultiPoly s = g.poly({Var::t, Var::a}, 3, 2) + P("a*t^2 + 1");
    if (s.degree(Var::t) == 0) continue;
    auto f = poly_divmod(p, s, Var::t);
    CHECK(f.denom * p == f.quot_num * s + f.rem_num);
    CHECK(f.rem_num.degree(Var::t) < s.degree(Var::t));
    auto self = poly_divmod(s, s, Var::t);
    CHECK(self.rem_num.is_zero());
    CHECK(self.quot_num == self.denom);
  }
  CHECK_THROWS(poly_divmod(P("t"), MultiPoly(), Var::t));
}

TEST_CASE("exact division recovers factors") {
  Gen g(5);
  for (int k = 0; k < 20; ++k) {
    MultiPoly x = g.poly({Var::t, Var::a, Var::c}, 4, 2) + P("1");
    MultiPoly y = g.poly({Var::t, Var::b}, 3, 2) + P("t");
    auto d = exact_div(x * y, y);
    REQUIRE(d.has_value());
    CHECK(*d == x);
  }
  CHECK_FALSE(exact_div(P("t^2+1"), P("t+1")).has_value());
}

TEST_CASE("determinants") {
  Matrix<MultiPoly> id(5, std::vector<MultiPoly>(5));
  for (std::size_t i = 0; i < 5; ++i) id[i][i] = 1;
  CHECK(det_bareiss(id) == MultiPoly(1));
  Matrix<MultiPoly> sym{{P("a"), P("b")}, {P("c"), P("t")}};
  CHECK(det_bareiss(sym) == P("a*t - b*c"));
  CHECK(det_laplace(sym) == P("a*t - b*c"));

  Gen g(19);
  for (int k = 0; k < 30; ++k) {
    auto m = random_matrix(g, 5, 5);
    Rational oracle = cofactor_det(m);
    CHECK(det_bareiss(m) == oracle);
    CHECK(det_laplace(m) == oracle);
    auto swapped = m;
    std::swap(swapped[1], swapped[3]);
    CHECK(det_bareiss(swapped) == -oracle);
    auto repeated = m;
    repeated[4] = repeated[0];
    CHECK(det_bareiss(repeated) == 0);
  }
  // Symbolic alternation: a repeated polynomial row gives the zero polynomial.
  Matrix<MultiPoly> rep(4, std::vector<MultiPoly>(4));
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) rep[r][c] = g.poly({Var::a, Var::b}, 2, 2);
  }
  rep[2] = rep[0];
  CHECK(det_bareiss(rep).is_zero());
}

TEST_CASE("cross normal") {
  Matrix<Rational> e(4, std::vector<Rational>(5, 0));
  for (std::size_t i = 0; i < 4; ++i) e[i][i] = 1;
  auto n = cross_normal(e);
  CHECK(n[0] == 0);
  CHECK(n[3] == 0);
  CHECK(abs(n[4]) == 1);

  Gen g(23);
  for (int k = 0; k < 20; ++k) {
    Matrix<MultiPoly> rows(4, std::vector<MultiPoly>(5));
    for (auto& row : rows) {
      for (auto& x : row) x = g.poly({Var::a, Var::t}, 2, 2);
    }
    auto cn = cross_normal(rows);
    for (const auto& row : rows) CHECK(dot(cn, row).is_zero());

    auto m = random_matrix(g, 4, 5);
    auto rn = cross_normal(m);
    auto ns = nullspace_exact(m);
    if (ns.size() != 1) continue;
    // Both span the kernel: the cross normal is a multiple of the elimination basis vector.
    std::size_t pivot = 0;
    while (ns[0][pivot] == 0) ++pivot;
    Rational scale = rn[pivot] / ns[0][pivot];
    for (std::size_t c = 0; c < 5; ++c) CHECK(rn[c] == scale * ns[0][c]);
  }
}

TEST_CASE("linear algebra helpers") {
  Matrix<Rational> m{{2, 1}, {1, 1}};
  auto inv = inverse_exact(m);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == 1);
  CHECK((*inv)[0][1] == -1);
  CHECK((*inv)[1][1] == 2);
  CHECK(rank_exact({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == 1);
  auto x = solve_exact(m, {3, 2});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve_exact({{1, 1}, {1, 1}}, {1, 2}).has_value());
}

TEST_CASE("fractions normalize by content and compare by cross multiplication") {
  PolyFraction f(P("2*t + 2"), P("-4*a"));
  CHECK(f.den().leading_term().coef > 0);
  CHECK(equivalent(f, PolyFraction(P("t+1"), P("-2*a"))));
  PolyFraction g(P("t^2 - 1"), P("t - 1"));
  CHECK(equivalent(g, PolyFraction(P("t + 1"))));
  CHECK(equivalent(f.diff(Var::t), PolyFraction(P("-1"), P("2*a"))));
  CHECK_THROWS(PolyFraction(P("1"), MultiPoly()));
}
