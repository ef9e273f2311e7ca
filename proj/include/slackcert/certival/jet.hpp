#ifndef SLACKCERT_CERTIVAL_JET_HPP
#define SLACKCERT_CERTIVAL_JET_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "slackcert/certival/interval.hpp"

namespace slackcert {

/**
 * First-order jet over intervals: an enclosure of a value together with enclosures of its
 * partial derivatives along a fixed list of directions. An empty gradient means zero, so
 * constants mix freely with seeded jets.
 */
class Jet {
 public:
  Jet() = default;
  Jet(const Interval& value) : value_(value) {}  // NOLINT
  Jet(const Rational& value) : value_(value) {}  // NOLINT
  Jet(int value) : value_(value) {}              // NOLINT
  /// Independent variable: derivative 1 along `direction` out of `count`.
  static Jet seed(const Interval& value, std::size_t direction, std::size_t count);

  const Interval& value() const { return value_; }
  Interval grad(std::size_t k) const { return k < grad_.size() ? grad_[k] : Interval(0); }
  std::size_t directions() const { return grad_.size(); }

  friend Jet operator+(const Jet& x, const Jet& y);
  friend Jet operator-(const Jet& x, const Jet& y);
  friend Jet operator*(const Jet& x, const Jet& y);
  friend Jet operator/(const Jet& x, const Jet& y);
  Jet operator-() const;

 private:
  Interval value_;
  std::vector<Interval> grad_;
};

/**
 * Truncated univariate Taylor series with interval coefficients, c[k] enclosing f^(k)/k!.
 * Evaluated over an interval base point, the top coefficient encloses the Taylor
 * coefficient over the whole interval, which bounds truncation remainders.
 */
template <std::size_t N>
class Taylor {
 public:
  Taylor() = default;
  Taylor(const Interval& c0) { c_[0] = c0; }  // NOLINT
  Taylor(const Rational& c0) { c_[0] = Interval(c0); }  // NOLINT
  Taylor(int c0) { c_[0] = Interval(c0); }  // NOLINT
  static Taylor variable(const Interval& at) {
    Taylor t(at);
    t.c_[1] = Interval(1);
    return t;
  }

  const Interval& operator[](std::size_t k) const { return c_[k]; }

  friend Taylor operator+(const Taylor& x, const Taylor& y) {
    Taylor r;
    for (std::size_t k = 0; k <= N; ++k) r.c_[k] = x.c_[k] + y.c_[k];
    return r;
  }
  friend Taylor operator-(const Taylor& x, const Taylor& y) {
    Taylor r;
    for (std::size_t k = 0; k <= N; ++k) r.c_[k] = x.c_[k] - y.c_[k];
    return r;
  }
  friend Taylor operator*(const Taylor& x, const Taylor& y) {
    Taylor r;
    for (std::size_t i = 0; i <= N; ++i) {
      for (std::size_t j = 0; i + j <= N; ++j) r.c_[i + j] += x.c_[i] * y.c_[j];
    }
    return r;
  }
  friend Taylor operator/(const Taylor& x, const Taylor& y) {
    Taylor r;
    for (std::size_t k = 0; k <= N; ++k) {
      Interval s = x.c_[k];
      for (std::size_t j = 1; j <= k; ++j) s -= y.c_[j] * r.c_[k - j];
      r.c_[k] = s / y.c_[0];
    }
    return r;
  }
  Taylor operator-() const { return Taylor() - *this; }

 private:
  std::array<Interval, N + 1> c_{};
};

}  // namespace slackcert

#endif
