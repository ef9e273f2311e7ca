#include "slackcert/certival/jet.hpp"

#include <algorithm>

namespace slackcert {

Jet Jet::seed(const Interval& value, std::size_t direction, std::size_t count) {
  Jet j(value);
  j.grad_.assign(count, Interval(0));
  j.grad_[direction] = Interval(1);
  return j;
}

Jet operator+(const Jet& x, const Jet& y) {
  Jet r(x.value_ + y.value_);
  std::size_t n = std::max(x.grad_.size(), y.grad_.size());
  r.grad_.resize(n);
  for (std::size_t k = 0; k < n; ++k) r.grad_[k] = x.grad(k) + y.grad(k);
  return r;
}

Jet operator-(const Jet& x, const Jet& y) {
  Jet r(x.value_ - y.value_);
  std::size_t n = std::max(x.grad_.size(), y.grad_.size());
  r.grad_.resize(n);
  for (std::size_t k = 0; k < n; ++k) r.grad_[k] = x.grad(k) - y.grad(k);
  return r;
}

Jet operator*(const Jet& x, const Jet& y) {
  Jet r(x.value_ * y.value_);
  std::size_t n = std::max(x.grad_.size(), y.grad_.size());
  r.grad_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k < x.grad_.size() && k < y.grad_.size()) {
      r.grad_[k] = x.grad_[k] * y.value_ + x.value_ * y.grad_[k];
    } else if (k < x.grad_.size()) {
      r.grad_[k] = x.grad_[k] * y.value_;
    } else {
      r.grad_[k] = x.value_ * y.grad_[k];
    }
  }
  return r;
}

Jet operator/(const Jet& x, const Jet& y) {
  Interval q = x.value_ / y.value_;
  Jet r(q);
  std::size_t n = std::max(x.grad_.size(), y.grad_.size());
  r.grad_.resize(n);
  for (std::size_t k = 0; k < n; ++k) r.grad_[k] = (x.grad(k) - q * y.grad(k)) / y.value_;
  return r;
}

Jet Jet::operator-() const {
  Jet r(-value_);
  r.grad_.reserve(grad_.size());
  for (const auto& g : grad_) r.grad_.push_back(-g);
  return r;
}

}  // namespace slackcert
