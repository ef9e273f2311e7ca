#include "slackcert/witness/points.hpp"

#include "slackcert/ratpoly/varid.hpp"

namespace slackcert {

namespace {

PolyVec5 parse5(const std::array<const char*, 5>& text) {
  PolyVec5 out;
  for (std::size_t k = 0; k < 5; ++k) out[k] = MultiPoly::parse(text[k]);
  return out;
}

FracVec5 normalized(const PolyVec5& x, const MultiPoly& sum) {
  FracVec5 out;
  for (std::size_t k = 0; k < 5; ++k) out[k] = PolyFraction(x[k], sum);
  return out;
}

}  // namespace

MultiPoly coordinate_sum(const PolyVec5& x) {
  MultiPoly s;
  for (const auto& c : x) s += c;
  return s;
}

PointTable point_table() {
  PointTable p;
  p.omega = parse5({"1 + t", "1 + 2*t", "1 + t", "1", "0"});
  p.omega_sum = coordinate_sum(p.omega);
  const std::array<std::array<std::array<const char*, 5>, 3>, 4> table = {{
      {{{"1000 + 514*a", "1056", "524 + 131*a", "772 + 193*a", "648 + 162*a"},
        {"1000 + 532*a", "1128", "1012 + 253*a", "236 + 59*a", "624 + 156*a"},
        {"500 + 233*a", "432", "536 + 134*a", "176 + 44*a", "356 + 89*a"}}},
      {{{"14044 + 3511*b", "20000 + 9467*b", "17868", "8888 + 2222*b", "19200 + 4800*b"},
        {"136 + 34*b", "200 + 98*b", "192", "144 + 36*b", "128 + 32*b"},
        {"96 + 24*b", "100 + 28*b", "12", "72 + 18*b", "120 + 30*b"}}},
      {{{"26 - 3*c", "22 - 2*c", "25 + 5*c", "20", "7"},
        {"17 - 3*c", "22 - 2*c", "25 + 5*c", "20", "16"},
        {"376 - 81*c", "384 - 54*c", "500 + 135*c", "540", "200"}}},
      {{{"618", "392", "365", "625", "500"},
        {"1863", "1252", "1250", "1875", "1260"},
        {"384", "496", "495", "625", "500"}}},
  }};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      p.F[i][j] = parse5(table[i][j]);
      p.F_sum[i][j] = coordinate_sum(p.F[i][j]);
    }
  }
  p.H = {Rational(3, 16), Rational(3, 16), Rational(3, 16), Rational(3, 16), Rational(1, 4)};
  return p;
}

PolyVec5 PointTable::f_homogeneous(int i, int j) const {
  PolyVec5 out = F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  out[4] -= MultiPoly::variable(v_var(i + 1, j + 1)) * F_sum[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return out;
}

FracVec5 PointTable::Omega() const { return normalized(omega, omega_sum); }

FracVec5 PointTable::F_point(int i, int j) const {
  return normalized(F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                    F_sum[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
}

FracVec5 PointTable::f_point(int i, int j) const {
  auto x = f_homogeneous(i, j);
  return normalized(x, coordinate_sum(x));
}

}  // namespace slackcert
