#include "slackcert/witness/pi.hpp"

#include <stdexcept>

namespace slackcert {

MultiPoly build_pi(const MultiPoly& perturbation) {
  static const char* const kCoefficients[6] = {
      "-96*a - 96*b - 48*a*b - 192*c - 96*a*c - 96*b*c + 99*a*b*c",
      "-1392*a - 1296*b - 96*a*b - 1696*c - 1624*a*c - 952*b*c + 1370*a*b*c",
      "-256 - 8608*a - 5488*b + 1172*a*b - 5536*c - 10240*a*c - 2164*b*c + 4292*a*b*c",
      "-2944 - 25648*a - 8512*b + 4100*a*b - 8192*c - 21056*a*c - 1736*b*c + 4768*a*b*c",
      "-8576 - 32288*a - 4832*b + 4072*a*b - 2912*c - 12608*a*c - 440*b*c + 1744*a*b*c",
      "-3584 - 11648*a - 896*b + 1120*a*b",
  };
  std::vector<MultiPoly> coeffs;
  for (const char* c : kCoefficients) coeffs.push_back(MultiPoly::parse(c));
  return MultiPoly::from_coefficients(Var::t, coeffs) + perturbation;
}

SquareConditions square_conditions(const MultiPoly& pi) {
  if (pi.degree(Var::t) != 5) throw std::invalid_argument("square_conditions: expected degree 5 in t");
  auto div = poly_divmod(pi, MultiPoly::parse("-t - 2"), Var::t);
  if (div.denom != MultiPoly(1)) throw std::logic_error("division by a monic linear factor left a denominator");
  SquareConditions out;
  auto qc = div.quot_num.coefficients_in(Var::t);
  qc.resize(5);
  for (std::size_t k = 0; k < 5; ++k) out.q[k] = qc[k];
  if (out.q[4].is_zero()) throw std::invalid_argument("square_conditions: leading quotient coefficient vanishes");
  const auto& [q0, q1, q2, q3, q4] = out.q;
  out.s[0] = div.rem_num;
  out.s[1] = q3 * q3 * q3 + MultiPoly(8) * q1 * q4 * q4 - MultiPoly(4) * q2 * q3 * q4;
  out.s[2] = q1 * q1 * q4 - q0 * q3 * q3;
  return out;
}

const char* square_conditions_form() {
  return "s1 = pi(-2); s2 = q3^3 + 8 q1 q4^2 - 4 q2 q3 q4; s3 = q1^2 q4 - q0 q3^2; "
         "u = e t^2 + f t + g with e = sqrt(q4), f = q3/(2e), g = q1/(2f)";
}

}  // namespace slackcert
