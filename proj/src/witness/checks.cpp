#include "slackcert/witness/checks.hpp"

#include "slackcert/certival/jet.hpp"

namespace slackcert {

std::string to_string(Requirement r) {
  switch (r) {
    case Requirement::Negative: return "Negative";
    case Requirement::Positive: return "Positive";
    case Requirement::Nonzero: return "Nonzero";
    case Requirement::None: return "None";
  }
  return "None";
}

bool SignCheck::satisfied() const {
  switch (required) {
    case Requirement::Negative: return verdict.sign == Sign::Negative;
    case Requirement::Positive: return verdict.sign == Sign::Positive;
    case Requirement::Nonzero: return verdict.sign != Sign::Unknown;
    case Requirement::None: return true;
  }
  return false;
}

std::vector<SignVerdict> resolve_signs(const ConstantsLadder& ladder, long max_bits, std::size_t count,
                                       const RungEvaluator& eval) {
  std::vector<SignVerdict> out(count);
  std::vector<bool> done(count, false);
  std::size_t remaining = count;
  for (long rung : default_ladder()) {
    if (rung > max_bits || remaining == 0) break;
    const Constants& constants = ladder.at(rung);
    std::vector<Interval> values;
    try {
      values = eval(constants, rung);
    } catch (const IntervalDivisionByZero&) {
      continue;
    }
    if (values.size() != count) throw std::logic_error("resolve_signs: evaluator returned the wrong count");
    for (std::size_t k = 0; k < count; ++k) {
      if (done[k]) continue;
      out[k] = verdict_of(values[k], rung);
      if (out[k].sign != Sign::Unknown) {
        done[k] = true;
        --remaining;
      }
    }
  }
  return out;
}

namespace {

constexpr std::size_t kDirections = 16;

std::string point_label(int i, int j) { return std::to_string(i + 1) + "." + std::to_string(j + 1); }

struct JetValues {
  std::array<Interval, 12> dv;
  std::array<Interval, 4> dw;
  Interval psi;
  Interval det_omega;
};

JetValues jet_values(const NumericPoints& np) {
  Vec5<Jet> apex;
  apex[4] = Jet(np.Omega[4]);
  for (std::size_t k = 0; k < 4; ++k) {
    apex[k] = Jet::seed(np.Omega[k], 12 + k, kDirections);
    apex[4] = apex[4] - Jet::seed(Interval(0), 12 + k, kDirections);
  }
  std::array<std::array<Jet, 3>, 4> v;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) v[i][j] = Jet::seed(Interval(0), 3 * i + j, kDirections);
  }
  auto c = construct(numeric_input<Jet>(np, apex, v));
  Jet psi = chart_det(c, lift<Jet>(np.H));
  Jet det_omega = chart_det(c, apex);
  JetValues out;
  for (std::size_t k = 0; k < 12; ++k) out.dv[k] = psi.grad(k);
  for (std::size_t k = 0; k < 4; ++k) out.dw[k] = psi.grad(12 + k);
  out.psi = psi.value();
  out.det_omega = det_omega.value();
  return out;
}

Construction<Interval> interval_construction(const NumericPoints& np, int pi = -1, int pj = -1,
                                             const Interval& value = Interval(0)) {
  std::array<std::array<Interval, 3>, 4> v{};
  if (pi >= 0) v[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)] = value;
  return construct(numeric_input<Interval>(np, np.Omega, v));
}

}  // namespace

bool DerivReport::all_required_hold() const {
  for (const auto& c : checks) {
    if (!c.satisfied()) return false;
  }
  return zeta.satisfied() && phi_second.satisfied() && cross_check_agrees;
}

DerivReport check_derivatives(const WitnessModel& model, const ConstantsLadder& ladder, const DirectionPoints& dirs,
                              long max_bits) {
  const MultiPoly n1 = model.phi_num.diff(Var::t);
  const MultiPoly n2 = n1.diff(Var::t);
  const MultiPoly d1 = model.phi_den.diff(Var::t);
  const MultiPoly d2 = d1.diff(Var::t);
  const PolyFraction zeta = model.zeta();
  constexpr std::size_t kCount = 12 + 16 + 4;
  RungEvaluator eval = [&](const Constants& constants, long) {
    auto np = numeric_points(model.points, constants);
    auto jv = jet_values(np);
    std::vector<Interval> out(jv.dv.begin(), jv.dv.end());
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t d = 0; d < 4; ++d) {
        Interval s(0);
        for (std::size_t k = 0; k < 4; ++k) s += jv.dw[k] * (Interval(dirs[i][d][k]) - np.Omega[k]);
        out.push_back(s);
      }
    }
    out.push_back(jv.det_omega);
    auto at = constants.assignment(true);
    const long bits = constants.bits;
    Interval zeta_den = ival_eval(zeta.den(), at, bits);
    out.push_back(ival_eval(zeta.num(), at, bits) / zeta_den);
    Interval n = ival_eval(model.phi_num, at, bits);
    Interval dn = ival_eval(n1, at, bits);
    Interval ddn = ival_eval(n2, at, bits);
    Interval d = ival_eval(model.phi_den, at, bits);
    Interval dd = ival_eval(d1, at, bits);
    Interval ddd = ival_eval(d2, at, bits);
    Interval numer = ddn * d.square() - n * ddd * d - Interval(2) * dd * dn * d + Interval(2) * n * dd.square();
    out.push_back(numer / d.pow(3));
    const auto& [e, f, g] = constants.u;
    const Interval& tau = constants.tau.root;
    Interval du = Interval(2) * e * tau + f;
    out.push_back(out[29] * Interval(2) * (-tau - Interval(2)) * du.square());
    (void)g;
    return out;
  };
  auto verdicts = resolve_signs(ladder, max_bits, kCount, eval);

  DerivReport report;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      report.checks.push_back({"dpsi.v." + point_label(i, j),
                               "partial derivative of Psi in v_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                   " at (Omega, 0) is negative",
                               Requirement::Negative, verdicts[static_cast<std::size_t>(3 * i + j)]});
    }
  }
  const char* letters = "ABCD";
  for (int i = 0; i < 4; ++i) {
    for (int d = 0; d < 4; ++d) {
      report.checks.push_back({std::string("dpsi.dir.") + letters[d] + "." + std::to_string(i + 1),
                               std::string("derivative of Psi(., 0) at Omega toward ") + letters[d] + "_" +
                                   std::to_string(i + 1) + " is negative",
                               Requirement::Negative, verdicts[static_cast<std::size_t>(12 + 4 * i + d)]});
    }
  }
  report.checks.push_back({"det.V-Omega.positive", "det(V_1, V_2, V_3, V_4, Omega) is positive", Requirement::Positive,
                           verdicts[28]});
  report.zeta = {"zeta.nonzero", "zeta(tau) is nonzero", Requirement::Nonzero, verdicts[29]};
  report.phi_second = {"phi.second-derivative", "phi''(tau) is negative, by the quotient rule on phi_num / phi_den",
                       Requirement::Negative, verdicts[30]};
  report.phi_second_factored = {"phi.second-derivative.crosscheck",
                                "zeta(tau) * 2 (-tau - 2) u'(tau)^2 has the sign of phi''(tau)", Requirement::Negative,
                                verdicts[31]};
  report.cross_check_agrees = verdicts[30].sign != Sign::Unknown && verdicts[30].sign == verdicts[31].sign;
  return report;
}

std::vector<CrossingCheck> facet_crossing(const WitnessModel& model, const ConstantsLadder& ladder, long max_bits) {
  std::vector<CrossingCheck> out(12);
  std::array<MultiPoly, 12> slope;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto& c = out[static_cast<std::size_t>(3 * i + j)];
      Var v = v_var(i + 1, j + 1);
      auto f = model.points.f_homogeneous(i, j);
      MultiPoly g;
      for (std::size_t k = 0; k < 5; ++k) g += model.slice.normal[static_cast<std::size_t>(i)][k] * f[k];
      c.incident_at_zero = g.evaluate({{v, 0}}).is_zero();
      c.linear_in_v = g.degree(v) <= 1;
      auto coeffs = g.coefficients_in(v);
      slope[static_cast<std::size_t>(3 * i + j)] = coeffs.size() > 1 ? coeffs[1] : MultiPoly();
    }
  }
  RungEvaluator eval = [&](const Constants& constants, long) {
    auto np = numeric_points(model.points, constants);
    auto geo = delta_geometry(np);
    if (!geo.oriented) throw IntervalDivisionByZero("orientation undecided");
    auto at = constants.assignment(true);
    Interval omega_sum = ival_eval(model.points.omega_sum, at, constants.bits);
    std::vector<Interval> values;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Interval s = ival_eval(slope[3 * i + j], at, constants.bits) / (np.F_sum[i][j] * omega_sum);
        values.push_back(geo.orientation[i] < 0 ? -s : s);
      }
    }
    return values;
  };
  auto verdicts = resolve_signs(ladder, max_bits, 12, eval);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto& c = out[static_cast<std::size_t>(3 * i + j)];
      c.sign = {"crossing." + point_label(i, j),
                "f_" + std::to_string(i + 1) + std::to_string(j + 1) + " leaves Delta through facet " +
                    std::to_string(i + 1) + " exactly when v_" + std::to_string(i + 1) + std::to_string(j + 1) + " > 0",
                Requirement::Negative, verdicts[static_cast<std::size_t>(3 * i + j)]};
    }
  }
  return out;
}

bool DoubleRootReport::holds() const { return value.contains_zero() && first.contains_zero() && second.satisfied(); }

DoubleRootReport double_root(const MultiPoly& pi, const ConstantsLadder& ladder, long max_bits) {
  const MultiPoly d1 = pi.diff(Var::t);
  const MultiPoly d2 = d1.diff(Var::t);
  DoubleRootReport r;
  const Constants& base = ladder.at(default_ladder().front());
  auto at = base.assignment(true);
  r.value = ival_eval(pi, at, base.bits);
  r.first = ival_eval(d1, at, base.bits);
  auto verdicts = resolve_signs(ladder, max_bits, 1, [&](const Constants& c, long) {
    return std::vector<Interval>{ival_eval(d2, c.assignment(true), c.bits)};
  });
  r.second = {"phi.double-root", "pi(tau) and pi'(tau) enclose 0 and pi''(tau) is nonzero", Requirement::Nonzero,
              verdicts[0]};
  return r;
}

Interval psi_at_omega(const WitnessModel& model, const Constants& constants) {
  auto np = numeric_points(model.points, constants);
  auto c = interval_construction(np);
  return chart_det(c, np.H);
}

std::vector<SignCheck> local_decrease(const WitnessModel& model, const ConstantsLadder& ladder, const Rational& delta,
                                      long max_bits) {
  auto verdicts = resolve_signs(ladder, max_bits, 12, [&](const Constants& constants, long) {
    auto np = numeric_points(model.points, constants);
    std::vector<Interval> out;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 3; ++j) out.push_back(chart_det(interval_construction(np, i, j, Interval(delta)), np.H));
    }
    return out;
  });
  std::vector<SignCheck> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.push_back({"psi.local-decrease." + point_label(i, j),
                     "Psi(Omega, delta e_" + std::to_string(i + 1) + std::to_string(j + 1) + ") is negative",
                     Requirement::Negative, verdicts[static_cast<std::size_t>(3 * i + j)]});
    }
  }
  return out;
}

std::vector<FiniteDifference> finite_difference_check(const WitnessModel& model, const Constants& constants,
                                                      const Rational& delta, long bits) {
  auto np = numeric_points(model.points, constants, bits);
  auto jv = jet_values(np);
  std::vector<FiniteDifference> out;
  const Interval step(delta);
  const Interval around(-delta, delta, bits);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      FiniteDifference fd;
      fd.i = i + 1;
      fd.j = j + 1;
      fd.symbolic = jv.dv[static_cast<std::size_t>(3 * i + j)];
      Interval plus = chart_det(interval_construction(np, i, j, step), np.H);
      Interval minus = chart_det(interval_construction(np, i, j, -step), np.H);
      fd.central = (plus - minus) / (Interval(2) * step);
      std::array<std::array<Taylor<3>, 3>, 4> v{};
      v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Taylor<3>::variable(around);
      auto c = construct(numeric_input<Taylor<3>>(np, lift<Taylor<3>>(np.Omega), v));
      Taylor<3> psi = chart_det(c, lift<Taylor<3>>(np.H));
      fd.remainder = step.square() * psi[3];
      fd.agrees = intersect(fd.central, fd.symbolic + fd.remainder).has_value();
      out.push_back(fd);
    }
  }
  return out;
}

std::vector<SignCheck> bottom_incidence(const WitnessModel& model, const ConstantsLadder& ladder, long max_bits) {
  auto verdicts = resolve_signs(ladder, max_bits, 12, [&](const Constants& constants, long) {
    auto np = numeric_points(model.points, constants);
    auto c = interval_construction(np);
    std::vector<Interval> out;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 3; ++j) out.push_back(chart_det(c, np.F_chart(i, j)));
    }
    return out;
  });
  std::vector<SignCheck> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      out.push_back({"incidence.bottom.F" + std::to_string(i + 1) + std::to_string(j + 1),
                     "sign of det(V_1, V_2, V_3, V_4, F_" + std::to_string(i + 1) + std::to_string(j + 1) + ")",
                     Requirement::None, verdicts[static_cast<std::size_t>(3 * i + j)]});
    }
  }
  return out;
}

}  // namespace slackcert
