#include "slackcert/witness/numeric.hpp"

#include "slackcert/certival/eval.hpp"

namespace slackcert {

IVec5 NumericPoints::F_chart(int i, int j) const {
  IVec5 out;
  const auto& x = F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  const auto& s = F_sum[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  for (std::size_t k = 0; k < 5; ++k) out[k] = x[k] / s;
  return out;
}

NumericPoints numeric_points(const PointTable& points, const Constants& constants, long bits) {
  NumericPoints np;
  np.bits = bits > 0 ? bits : constants.bits;
  IntervalAssignment at;
  for (const auto& [var, iv] : constants.assignment(true)) at[var] = iv.with_bits(np.bits);
  Interval sum = ival_eval(points.omega_sum, at, np.bits);
  for (std::size_t k = 0; k < 5; ++k) np.Omega[k] = ival_eval(points.omega[k], at, np.bits) / sum;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 5; ++k) np.F[i][j][k] = ival_eval(points.F[i][j][k], at, np.bits);
      np.F_sum[i][j] = ival_eval(points.F_sum[i][j], at, np.bits);
    }
  }
  for (std::size_t k = 0; k < 5; ++k) np.H[k] = Interval(points.H[k]).with_bits(np.bits);
  return np;
}

Interval dot5(const IVec5& x, const IVec5& y) {
  Interval s(0);
  for (std::size_t k = 0; k < 5; ++k) s += x[k] * y[k];
  return s;
}

DeltaGeometry delta_geometry(const NumericPoints& np) {
  DeltaGeometry g;
  g.Omega = np.Omega;
  std::array<std::array<Interval, 3>, 4> zero{};
  auto c = construct(numeric_input<Interval>(np, np.Omega, zero));
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 5; ++k) g.V[j][k] = c.V[j][k] / c.V_sum[j];
  }
  g.oriented = true;
  for (std::size_t i = 0; i < 4; ++i) {
    Interval m = dot5(c.normal[i], g.V[i]);
    int s = m.positive() ? 1 : m.negative() ? -1 : 0;
    if (s == 0) g.oriented = false;
    g.orientation[i] = s == 0 ? 1 : s;
    g.orientation_margin[i] = s < 0 ? -m : m;
    for (std::size_t k = 0; k < 5; ++k) g.facet[i][k] = s < 0 ? -c.normal[i][k] : c.normal[i][k];
  }
  Matrix<Interval> rows;
  for (const auto& v : g.V) rows.emplace_back(v.begin(), v.end());
  auto bottom = cross_normal(rows);
  for (std::size_t k = 0; k < 5; ++k) g.facet[4][k] = bottom[k];
  return g;
}

}  // namespace slackcert
