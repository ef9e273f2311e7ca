#ifndef SLACKCERT_RATPOLY_POLYFRACTION_HPP
#define SLACKCERT_RATPOLY_POLYFRACTION_HPP

#include <string>

#include "slackcert/ratpoly/multipoly.hpp"

namespace slackcert {

/**
 * num / den with den != 0. Normalized by integer content only: den has coprime integer
 * coefficients and a positive leading coefficient. No multivariate gcd is attempted, so
 * two equal fractions may differ structurally; compare with `equivalent`.
 */
class PolyFraction {
 public:
  PolyFraction() : den_(1) {}
  PolyFraction(MultiPoly num);  // NOLINT: polynomials are fractions over 1
  PolyFraction(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  PolyFraction operator-() const { return {-num_, den_}; }
  friend PolyFraction operator+(const PolyFraction& x, const PolyFraction& y);
  friend PolyFraction operator-(const PolyFraction& x, const PolyFraction& y);
  friend PolyFraction operator*(const PolyFraction& x, const PolyFraction& y);
  friend PolyFraction operator/(const PolyFraction& x, const PolyFraction& y);

  /// Cross-multiplied equality: x.num * y.den == y.num * x.den.
  friend bool equivalent(const PolyFraction& x, const PolyFraction& y);

  PolyFraction diff(Var v) const;
  PolyFraction substitute(Var v, const PolyFraction& q) const;
  PolyFraction evaluate(const RationalAssignment& values) const;

  std::string to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

 private:
  void normalize();

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace slackcert

#endif
