#include "slackcert/witness/model.hpp"

#include <future>

namespace slackcert {

std::string to_string(IdentityStatus s) {
  return s == IdentityStatus::IdentityProven ? "IdentityProven" : "IdentityFailed";
}

PolyVec5 symbolic_apex() {
  PolyVec5 w;
  MultiPoly last(1);
  for (int k = 1; k <= 4; ++k) {
    w[static_cast<std::size_t>(k - 1)] = MultiPoly::variable(w_var(k));
    last -= w[static_cast<std::size_t>(k - 1)];
  }
  w[4] = last;
  return w;
}

Construction<MultiPoly> slice_construction(const PointTable& points, const RationalAssignment& values) {
  ConstructionInput<MultiPoly> in;
  in.omega = points.omega;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 5; ++k) in.f[i][j][k] = points.F[i][j][k].evaluate(values);
    }
  }
  return construct(in);
}

namespace {

Vec5<MultiPoly> scaled_H(const PointTable& points, const Rational& scale) {
  Vec5<MultiPoly> h;
  for (std::size_t k = 0; k < 5; ++k) h[k] = MultiPoly(points.H[k] * scale);
  return h;
}

}  // namespace

Factorization phi_and_zeta(const MultiPoly& phi_num, const MultiPoly& pi, const PointTable& points) {
  Factorization out;
  auto quotient = exact_div(phi_num, pi);
  if (quotient && *quotient * pi == phi_num) {
    out.status = IdentityStatus::IdentityProven;
    out.zeta_num = *quotient;
  } else {
    auto div = poly_divmod(phi_num, pi, Var::t);
    out.status = div.rem_num.is_zero() ? IdentityStatus::IdentityProven : IdentityStatus::IdentityFailed;
    out.zeta_num = div.quot_num;
    out.remainder = div.rem_num;
    out.remainder_denom = div.denom;
    if (out.status == IdentityStatus::IdentityProven && div.denom != MultiPoly(1)) {
      // Exact in the fraction field but not over the polynomial ring; keep the quotient
      // as a polynomial only when the denominator divides it.
      auto q = exact_div(div.quot_num, div.denom);
      if (q) {
        out.zeta_num = *q;
      } else {
        out.status = IdentityStatus::IdentityFailed;
      }
    }
  }
  const RationalAssignment zero{{Var::a, 0}, {Var::b, 0}, {Var::c, 0}};
  auto special = slice_construction(points, zero);
  out.specialized_phi = det_with_last(special, scaled_H(points, 16));
  out.specialized_product = out.zeta_num.evaluate(zero) * pi.evaluate(zero);
  out.specialization_agrees =
      out.specialized_phi == out.specialized_product && out.specialized_phi == phi_num.evaluate(zero);
  return out;
}

FracVec5 WitnessModel::V_point(int j) const {
  FracVec5 out;
  for (std::size_t k = 0; k < 5; ++k) {
    out[k] = PolyFraction(slice.V[static_cast<std::size_t>(j)][k], slice.V_sum[static_cast<std::size_t>(j)]);
  }
  return out;
}

WitnessModel build_model(const MultiPoly& pi) {
  WitnessModel m;
  m.points = point_table();
  m.pi = pi;
  m.square = square_conditions(pi);
  auto apex = symbolic_apex();
  for (int i = 0; i < 4; ++i) {
    m.normals[static_cast<std::size_t>(i)] = cross_normal<MultiPoly, 5>(
        {apex, m.points.f_homogeneous(i, 0), m.points.f_homogeneous(i, 1), m.points.f_homogeneous(i, 2)});
  }
  m.slice = slice_construction(m.points);
  auto omega_det = std::async(std::launch::async, [&] { return det_with_last(m.slice, m.points.omega); });
  m.phi_num = det_with_last(m.slice, scaled_H(m.points, 16));
  m.phi_den = MultiPoly(16) * product_of_sums(m.slice);
  m.omega_det_num = omega_det.get();
  m.factor = phi_and_zeta(m.phi_num, pi, m.points);
  return m;
}

}  // namespace slackcert
