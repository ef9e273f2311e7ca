#include "doctest.h"
#include "slackcert/slackbridge/oracle.hpp"
#include "slackcert/slackbridge/slack.hpp"
#include "support.hpp"

using namespace slackcert;
using namespace slackcert::testing;

namespace {

std::vector<Point2> triangle() { return {{0, 0}, {1, 0}, {0, 1}}; }
std::vector<Point2> square() { return {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; }

std::vector<RPoint> embedded(const std::vector<Point2>& p) {
  std::vector<RPoint> out;
  for (const auto& x : p) out.push_back(embed2(x));
  return out;
}

Matrix<Rational> exact_slack(const std::vector<Point2>& p, const std::vector<Point2>& q) {
  return *exact_rational(slack_matrix(VPolytope(embedded(p)), polygon_hrep(q)));
}

Rational q_frac(Gen& g) { return q(g.integer(0, 12), 4); }

// Q: a random lattice polygon; P: random convex combinations of Q's points.
std::pair<std::vector<Point2>, std::vector<Point2>> random_pair(Gen& g) {
  std::vector<Point2> q;
  for (int k = 0; k < 6; ++k) q.push_back({q_frac(g), q_frac(g)});
  std::vector<Point2> p;
  for (int k = 0; k < 4; ++k) {
    Rational w[3];
    Rational total = 0;
    for (auto& x : w) {
      x = g.integer(1, 4);
      total += x;
    }
    std::size_t i0 = static_cast<std::size_t>(g.integer(0, 5));
    std::size_t i1 = (i0 + 1 + static_cast<std::size_t>(g.integer(0, 4))) % 6;
    std::size_t i2 = (i1 + 1) % 6 == i0 ? (i1 + 2) % 6 : (i1 + 1) % 6;
    Point2 x{0, 0};
    for (std::size_t c = 0; c < 2; ++c) x[c] = (w[0] * q[i0][c] + w[1] * q[i1][c] + w[2] * q[i2][c]) / total;
    p.push_back(x);
  }
  return {p, q};
}

}  // namespace

TEST_CASE("triangle slack matrix is a permutation pattern") {
  Matrix<Rational> a = exact_slack(triangle(), triangle());
  REQUIRE(a.size() == 3);
  for (std::size_t r = 0; r < 3; ++r) {
    int nonzero = 0;
    for (std::size_t c = 0; c < 3; ++c) nonzero += a[r][c] != 0;
    CHECK(nonzero == 1);
  }
  for (std::size_t c = 0; c < 3; ++c) {
    int nonzero = 0;
    for (std::size_t r = 0; r < 3; ++r) nonzero += a[r][c] != 0;
    CHECK(nonzero == 1);
  }
  auto rank = rank_certify(a);
  CHECK(rank.lower == 3);
  CHECK(rank.exact());
  CHECK(rank_certify(Matrix<Rational>(3, std::vector<Rational>(3, 1))).lower == 1);
}

TEST_CASE("slack rows scale with their functional") {
  HPolytope h = polygon_hrep(square());
  HPolytope scaled = h;
  for (auto& c : scaled.facets[1]) c *= 2;
  VPolytope p(embedded({{q(1, 2), q(1, 3)}, {q(1, 4), q(3, 4)}}));
  auto a = *exact_rational(slack_matrix(p, h));
  auto b = *exact_rational(slack_matrix(p, scaled));
  for (std::size_t c = 0; c < 2; ++c) {
    CHECK(b[0][c] == a[0][c]);
    CHECK(b[1][c] == 2 * a[1][c]);
  }
  CHECK_THROWS_AS(slack_matrix(VPolytope(embedded({{2, 2}})), h), ContainmentViolation);
}

TEST_CASE("recovering points from slack vectors") {
  HPolytope h = polygon_hrep(square());
  auto a = exact_slack(square(), square());
  for (std::size_t c = 0; c < 4; ++c) {
    std::vector<Rational> col;
    for (const auto& row : a) col.push_back(row[c]);
    auto r = recover_point(col, h);
    CHECK(r.x == embed2(square()[c]));
    CHECK(r.inside);
    for (auto& x : col) x *= 3;
    CHECK(recover_point(col, h).x == embed2(square()[c]));
  }
  RPoint centroid = embed2({q(1, 2), q(1, 2)});
  std::vector<Rational> b;
  for (const auto& l : h.facets) b.push_back(evaluate(l, centroid));
  auto r = recover_point(b, h);
  CHECK(r.x == centroid);
  CHECK(r.inside);
  // A negative entry either breaks consistency or leaves Q.
  b[0] = -b[0];
  bool rejected = false;
  try {
    rejected = !recover_point(b, h).inside;
  } catch (const std::domain_error&) {
    rejected = true;
  }
  CHECK(rejected);
}

TEST_CASE("nesting oracle demos") {
  auto t = nesting_oracle_2d(triangle(), triangle(), 6);
  REQUIRE(t.witness);
  std::vector<Point2> found(t.witness->vertices.begin(), t.witness->vertices.end());
  std::sort(found.begin(), found.end());
  auto expected = triangle();
  std::sort(expected.begin(), expected.end());
  CHECK(found == expected);
  for (int grid : {1, 2, 5, 10}) CHECK_FALSE(nesting_oracle_2d(square(), square(), grid).witness);
  std::vector<Point2> small{{q(2, 5), q(1, 5)}, {q(3, 5), q(1, 5)}, {q(3, 5), q(2, 5)}, {q(2, 5), q(2, 5)}};
  std::vector<Point2> big{{-1, -1}, {3, -1}, {-1, 3}};
  auto n = nesting_oracle_2d(small, big, 4);
  REQUIRE(n.witness);
  CHECK(nested_factorization(small, big, *n.witness).ok());
  CHECK_THROWS_AS(nesting_oracle_2d(big, small, 4), std::invalid_argument);
}

TEST_CASE("random nested pairs: round trips, zero pattern and factorizations") {
  Gen g(61);
  int witnesses = 0;
  for (int n = 0; n < 12; ++n) {
    auto [p, q2] = random_pair(g);
    HPolytope h;
    try {
      h = polygon_hrep(q2);
    } catch (const DegenerateError&) {
      continue;
    }
    SlackMatrix s = slack_matrix(VPolytope(embedded(p)), h);
    CHECK(s.certified_nonnegative());
    auto a = *exact_rational(s);
    for (std::size_t c = 0; c < s.cols(); ++c) {
      std::vector<Rational> col;
      for (const auto& row : a) col.push_back(row[c]);
      std::vector<Rational> x;
      for (const auto& e : s.vertices[c].exact) x.push_back(e.num().constant_value() / e.den().constant_value());
      CHECK(recover_point(col, h).x == x);
      for (std::size_t r = 0; r < a.size(); ++r) CHECK((a[r][c] == 0) == (evaluate(h.facets[r], x) == 0));
    }
    auto res = nesting_oracle_2d(p, q2, 8);
    if (res.witness) {
      ++witnesses;
      auto fc = nested_factorization(p, q2, *res.witness);
      CHECK(fc.ok());
      CHECK(fc.factors.B[0].size() == 3);
    }
  }
  CHECK(witnesses > 0);
}

TEST_CASE("emitted files carry the provenance header") {
  SlackMatrix s = slack_matrix(VPolytope(embedded(triangle())), polygon_hrep(triangle()), "standard triangle");
  std::string csv = slack_csv(s);
  std::string side = slack_sidecar(s);
  CHECK(csv.rfind("# standard triangle", 0) == 0);
  CHECK(side.rfind("# standard triangle", 0) == 0);
}
