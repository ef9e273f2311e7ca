#include "slackcert/ratpoly/polyfraction.hpp"

#include <algorithm>
#include <stdexcept>

namespace slackcert {

PolyFraction::PolyFraction(MultiPoly num) : num_(std::move(num)), den_(1) {}

PolyFraction::PolyFraction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("PolyFraction with zero denominator");
  normalize();
}

void PolyFraction::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  Rational scale = den_.content();
  if (den_.leading_term().coef < 0) scale = -scale;
  if (scale != 1) {
    Rational inv = 1 / scale;
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.is_constant() && den_.constant_value() != 1) {
    num_ *= 1 / den_.constant_value();
    den_ = MultiPoly(1);
  }
}

PolyFraction operator+(const PolyFraction& x, const PolyFraction& y) {
  if (x.den_ == y.den_) return {x.num_ + y.num_, x.den_};
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

PolyFraction operator-(const PolyFraction& x, const PolyFraction& y) {
  if (x.den_ == y.den_) return {x.num_ - y.num_, x.den_};
  return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
}

PolyFraction operator*(const PolyFraction& x, const PolyFraction& y) {
  return {x.num_ * y.num_, x.den_ * y.den_};
}

PolyFraction operator/(const PolyFraction& x, const PolyFraction& y) {
  if (y.num_.is_zero()) throw std::domain_error("PolyFraction division by zero");
  return {x.num_ * y.den_, x.den_ * y.num_};
}

bool equivalent(const PolyFraction& x, const PolyFraction& y) {
  return x.num_ * y.den_ == y.num_ * x.den_;
}

PolyFraction PolyFraction::diff(Var v) const {
  return {num_.diff(v) * den_ - num_ * den_.diff(v), den_ * den_};
}

PolyFraction PolyFraction::substitute(Var v, const PolyFraction& q) const {
  // Homogenize in v: p(q.num/q.den) = sum c_k q.num^k q.den^(d-k) / q.den^d.
  unsigned d = std::max(num_.degree(v), den_.degree(v));
  auto homogenize = [&](const MultiPoly& p) {
    auto coeffs = p.coefficients_in(v);
    MultiPoly out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      out += coeffs[k] * q.num().pow(static_cast<unsigned>(k)) * q.den().pow(d - static_cast<unsigned>(k));
    }
    return out;
  };
  return {homogenize(num_), homogenize(den_)};
}

PolyFraction PolyFraction::evaluate(const RationalAssignment& values) const {
  return {num_.evaluate(values), den_.evaluate(values)};
}

}  // namespace slackcert
