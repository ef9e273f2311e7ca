#include "slackcert/witness/constants.hpp"

#include "slackcert/certival/eval.hpp"

namespace slackcert {

IntervalAssignment Constants::assignment(bool with_tau) const {
  IntervalAssignment at{{Var::a, alpha()}, {Var::b, beta()}, {Var::c, gamma()}};
  if (with_tau) at[Var::t] = tau.root;
  return at;
}

std::array<Rational, 3> constants_seed() {
  return {parse_rational("-0.0311"), parse_rational("-0.4088"), parse_rational("0.3983")};
}

Constants solve_constants(const MultiPoly& pi, const Rational& width) {
  auto cond = square_conditions(pi);
  Constants out;
  out.width = width;
  // The box is solved much tighter than requested so that the derived u and tau, whose
  // widths are amplified by the coefficient map, still meet `width`.
  const Rational box_width = width * pow2(-24);
  out.bits = bits_for_width(box_width) + 64;

  Box3 seed;
  auto prefixes = constants_seed();
  const Rational seed_radius = parse_rational("0.0001");
  for (std::size_t k = 0; k < 3; ++k) seed.x[k] = Interval(prefixes[k] - seed_radius, prefixes[k] + seed_radius);
  try {
    out.abc = solve_3d_certified(cond.s, seed, box_width);
  } catch (const NoContraction& e) {
    throw ConstantsError(std::string("constants box not certified: ") + e.what());
  }

  const long bits = out.bits;
  IntervalAssignment at{{Var::a, out.abc.x[0]}, {Var::b, out.abc.x[1]}, {Var::c, out.abc.x[2]}};
  std::array<Interval, 5> q;
  for (std::size_t k = 0; k < 5; ++k) q[k] = ival_eval(cond.q[k], at, bits);
  out.q4 = q[4];
  out.q3 = q[3];
  if (!q[4].positive()) throw ConstantsError("leading quotient coefficient not certified positive");
  if (q[3].contains_zero()) throw ConstantsError("cubic quotient coefficient not certified nonzero");
  Interval e = sqrt(q[4], bits);
  Interval f = q[3] / (Interval(2) * e);
  Interval g = q[1] / (Interval(2) * f);
  out.u = {e, f, g};
  try {
    out.tau = root_isolate_1d({g, f, e}, Interval(0, 1), width);
  } catch (const NotIsolated& ex) {
    throw ConstantsError(std::string("root of u not isolated in (0, 1): ") + ex.what());
  }
  if (!out.tau.unique || !out.tau.sole_in_bracket) throw ConstantsError("root of u in (0, 1) not certified unique");
  if (out.tau.root.width() > width) throw ConstantsError("root of u not enclosed to the requested width");
  if (!out.tau.root.strictly_inside(Interval(0, 1))) throw ConstantsError("root of u not inside (0, 1)");
  return out;
}

const Constants& ConstantsLadder::at(long rung) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(rung);
  if (it != cache_.end()) return *it->second;
  auto c = std::make_unique<Constants>(solve_constants(pi_, pow2(-rung)));
  return *cache_.emplace(rung, std::move(c)).first->second;
}

}  // namespace slackcert
