#include "slackcert/certival/roots.hpp"

#include <cmath>
#include <deque>
#include <optional>

#include "slackcert/certival/eval.hpp"
#include "slackcert/ratpoly/linalg.hpp"

namespace slackcert {

long bits_for_width(const Rational& width) {
  if (width <= 0) throw std::invalid_argument("width must be positive");
  long b = -log2_floor(width);
  while (pow2(-b) > width) ++b;
  return std::max(b, 1L);
}

namespace {

std::vector<Interval> derivative(const std::vector<Interval>& c) {
  std::vector<Interval> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * Interval(static_cast<int>(k)));
  return d;
}

Interval at_point(const std::vector<Interval>& c, const Rational& x) { return horner(c, Interval(x)); }

// Midpoint rounded to a short dyadic inside j; any interior point is valid for Newton.
Rational short_mid(const Interval& j) {
  Rational m = j.mid();
  long scale = -log2_floor(j.width()) + 4;
  Rational r = Rational(floor_div(m * pow2(scale))) * pow2(-scale);
  return j.contains(r) ? r : m;
}

// One interval Newton step; nullopt when p' encloses 0.
std::optional<Interval> newton(const std::vector<Interval>& p, const std::vector<Interval>& dp, const Interval& j) {
  Interval slope = horner(dp, j);
  if (slope.contains_zero()) return std::nullopt;
  Rational m = short_mid(j);
  return Interval(m) - at_point(p, m) / slope;
}

// Narrows a Newton-certified enclosure until width is reached or progress stalls.
Interval narrow(const std::vector<Interval>& p, const std::vector<Interval>& dp, Interval j, const Rational& width) {
  for (int iter = 0; iter < 200 && j.width() > width; ++iter) {
    auto n = newton(p, dp, j);
    if (!n) break;
    auto next = intersect(*n, j);
    if (!next) break;
    if (next->width() * 8 > j.width() * 7) {
      j = *next;
      break;
    }
    j = *next;
  }
  // Finish by bisection on a certified sign change when Newton stalls.
  int slo = sign(at_point(p, j.lo()).lo()) == sign(at_point(p, j.lo()).hi()) ? sign(at_point(p, j.lo()).lo()) : 0;
  int shi = sign(at_point(p, j.hi()).lo()) == sign(at_point(p, j.hi()).hi()) ? sign(at_point(p, j.hi()).lo()) : 0;
  while (j.width() > width && slo != 0 && shi != 0 && slo != shi) {
    Rational m = short_mid(j);
    Interval pm = at_point(p, m);
    if (pm.positive() || pm.negative()) {
      int sm = pm.positive() ? 1 : -1;
      j = sm == slo ? Interval(m, j.hi(), j.bits()) : Interval(j.lo(), m, j.bits());
    } else {
      break;
    }
  }
  return j;
}

int strict_sign(const Interval& v) { return v.positive() ? 1 : v.negative() ? -1 : 0; }

}  // namespace

RootEnclosure root_isolate_1d(const std::vector<Interval>& coeffs, const Interval& bracket, const Rational& width) {
  auto dp = derivative(coeffs);
  std::deque<Interval> work{bracket};
  std::optional<RootEnclosure> found;
  bool other_possible = false;
  const Rational floor_width = bracket.width() * pow2(-400);
  std::size_t budget = 200000;
  while (!work.empty() && budget-- > 0) {
    Interval j = work.front();
    work.pop_front();
    if (!horner(coeffs, j).contains_zero()) continue;
    auto n = newton(coeffs, dp, j);
    if (n) {
      auto inter = intersect(*n, j);
      if (!inter) continue;
      if (n->strictly_inside(j)) {
        if (found) {
          other_possible = true;
          break;
        }
        found = RootEnclosure{narrow(coeffs, dp, *n, width), true, false};
        continue;
      }
    }
    if (j.width() <= floor_width || j.width() <= width) {
      int s_lo = strict_sign(at_point(coeffs, j.lo()));
      int s_hi = strict_sign(at_point(coeffs, j.hi()));
      if (s_lo != 0 && s_hi != 0 && s_lo != s_hi && !found) {
        found = RootEnclosure{j, false, false};
      } else {
        other_possible = true;
      }
      continue;
    }
    Rational m = short_mid(j);
    // Keep left-to-right order so the first certified root is the leftmost.
    work.push_front(Interval(m, j.hi(), j.bits()));
    work.push_front(Interval(j.lo(), m, j.bits()));
  }
  if (!work.empty()) other_possible = true;
  if (!found) throw NotIsolated("no root isolated in " + bracket.to_text());
  found->sole_in_bracket = !other_possible;
  return *found;
}

RootEnclosure root_isolate_1d(const MultiPoly& p, Var x, const Interval& bracket, const Rational& width) {
  for (int k = 0; k < kVarCount; ++k) {
    if (var_at(k) != x && p.has_var(var_at(k))) throw std::invalid_argument("root_isolate_1d: polynomial is not univariate");
  }
  std::vector<Interval> coeffs;
  for (const auto& c : p.coefficients_in(x)) coeffs.emplace_back(c.constant_value());
  return root_isolate_1d(coeffs, bracket, width);
}

namespace {

using Vec3 = std::array<Rational, 3>;

RationalAssignment assign(const std::array<Var, 3>& vars, const Vec3& x) {
  return {{vars[0], x[0]}, {vars[1], x[1]}, {vars[2], x[2]}};
}

std::array<double, kVarCount> as_doubles(const std::array<Var, 3>& vars, const std::array<double, 3>& x) {
  std::array<double, kVarCount> at{};
  for (int k = 0; k < 3; ++k) at[static_cast<std::size_t>(index_of(vars[static_cast<std::size_t>(k)]))] = x[static_cast<std::size_t>(k)];
  return at;
}

bool solve3_double(const std::array<std::array<double, 3>, 3>& m, const std::array<double, 3>& rhs, std::array<double, 3>& out) {
  double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (!std::isfinite(det) || det == 0) return false;
  for (int c = 0; c < 3; ++c) {
    auto mc = m;
    for (int r = 0; r < 3; ++r) mc[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = rhs[static_cast<std::size_t>(r)];
    double dc = mc[0][0] * (mc[1][1] * mc[2][2] - mc[1][2] * mc[2][1]) - mc[0][1] * (mc[1][0] * mc[2][2] - mc[1][2] * mc[2][0]) +
                mc[0][2] * (mc[1][0] * mc[2][1] - mc[1][1] * mc[2][0]);
    out[static_cast<std::size_t>(c)] = dc / det;
  }
  return true;
}

}  // namespace

Box3 solve_3d_certified(const std::array<MultiPoly, 3>& sys, const Box3& seed, const Rational& width,
                        const std::array<Var, 3>& vars) {
  const long wbits = bits_for_width(width);
  const long bits = wbits + 64;
  std::array<std::array<MultiPoly, 3>, 3> jac;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) jac[i][j] = sys[i].diff(vars[j]);
  }

  // Floating-point seed; the certified stage below never trusts it.
  std::array<double, 3> xd{};
  for (std::size_t k = 0; k < 3; ++k) xd[k] = seed.x[k].mid().get_d();
  for (int iter = 0; iter < 50; ++iter) {
    std::array<double, 3> f{};
    std::array<std::array<double, 3>, 3> jm{};
    auto at = as_doubles(vars, xd);
    for (std::size_t i = 0; i < 3; ++i) {
      f[i] = sys[i].evaluate_double(at);
      for (std::size_t j = 0; j < 3; ++j) jm[i][j] = jac[i][j].evaluate_double(at);
    }
    std::array<double, 3> step{};
    if (!solve3_double(jm, f, step)) break;
    for (std::size_t k = 0; k < 3; ++k) xd[k] -= step[k];
    if (std::abs(step[0]) + std::abs(step[1]) + std::abs(step[2]) < 1e-15) break;
  }

  // Exact Newton, rounding iterates so their size tracks the target precision.
  Vec3 x;
  for (std::size_t k = 0; k < 3; ++k) x[k] = std::isfinite(xd[k]) ? Rational(xd[k]) : seed.x[k].mid();
  const Rational tol = pow2(-(wbits + 64));
  Matrix<Rational> jx(3, std::vector<Rational>(3));
  for (int iter = 0; iter < 60; ++iter) {
    auto at = assign(vars, x);
    std::vector<Rational> f(3);
    for (std::size_t i = 0; i < 3; ++i) {
      f[i] = sys[i].evaluate(at).constant_value();
      for (std::size_t j = 0; j < 3; ++j) jx[i][j] = jac[i][j].evaluate(at).constant_value();
    }
    auto step = solve_exact(jx, f);
    if (!step) throw NoContraction("singular Jacobian during refinement");
    Rational size = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      x[k] = round_down(x[k] - (*step)[k], bits + 64);
      size = std::max(size, Rational(abs((*step)[k])));
    }
    if (size < tol) break;
  }

  // Krawczyk: K = x - Y F(x) + (I - Y J(X)) (X - x) strictly inside X.
  auto at = assign(vars, x);
  Matrix<Rational> jx_exact(3, std::vector<Rational>(3));
  std::array<Interval, 3> fx;
  for (std::size_t i = 0; i < 3; ++i) {
    fx[i] = Interval(sys[i].evaluate(at).constant_value());
    for (std::size_t j = 0; j < 3; ++j) jx_exact[i][j] = jac[i][j].evaluate(at).constant_value();
  }
  auto inv = inverse_exact(jx_exact);
  if (!inv) throw NoContraction("singular Jacobian at the refined point");
  Matrix<Rational> y = *inv;
  for (auto& row : y) {
    for (auto& e : row) e = round_down(e, bits);
  }
  const Rational radius = width / 4;
  std::array<Interval, 3> box;
  IntervalAssignment box_at;
  for (std::size_t k = 0; k < 3; ++k) {
    box[k] = Interval(x[k] - radius, x[k] + radius, bits);
    box_at[vars[k]] = box[k];
  }
  std::array<std::array<Interval, 3>, 3> jbox;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) jbox[i][j] = ival_eval(jac[i][j], box_at, bits);
  }
  bool inside = true;
  for (std::size_t i = 0; i < 3 && inside; ++i) {
    Interval k = Interval(x[i]).with_bits(bits);
    for (std::size_t j = 0; j < 3; ++j) k -= Interval(y[i][j]) * fx[j];
    for (std::size_t j = 0; j < 3; ++j) {
      Interval m = Interval(i == j ? 1 : 0);
      for (std::size_t l = 0; l < 3; ++l) m -= Interval(y[i][l]) * jbox[l][j];
      k += m * (box[j] - Interval(x[j]));
    }
    inside = k.strictly_inside(box[i]);
  }
  if (!inside) throw NoContraction("Krawczyk operator did not map the box into its interior");
  Box3 out;
  out.x = box;
  out.unique = true;
  return out;
}

}  // namespace slackcert
