#ifndef SLACKCERT_CERTIVAL_INTERVAL_HPP
#define SLACKCERT_CERTIVAL_INTERVAL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "slackcert/ratpoly/rational.hpp"
#include "slackcert/ratpoly/varid.hpp"

namespace slackcert {

/// Raised when dividing by an interval that contains zero.
class IntervalDivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/**
 * Closed interval [lo, hi] with exact rational endpoints. A nonzero `bits` makes every
 * operation round its result outward to that many significant bits, which bounds the
 * endpoint size; bits == 0 keeps results exact. Results carry the larger precision of the
 * operands.
 */
class Interval {
 public:
  Interval() : lo_(0), hi_(0) {}
  Interval(const Rational& x) : lo_(x), hi_(x) {}  // NOLINT: points are degenerate intervals
  Interval(int x) : lo_(x), hi_(x) {}              // NOLINT
  Interval(Rational lo, Rational hi, long bits = 0);

  static Interval hull(const Interval& x, const Interval& y);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  long bits() const { return bits_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }
  Rational mag() const;  // max |x|
  Rational mig() const;  // min |x|

  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& x) const { return lo_ <= x.lo_ && x.hi_ <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  /// this lies in the open interior of `outer`.
  bool strictly_inside(const Interval& outer) const { return outer.lo_ < lo_ && hi_ < outer.hi_; }
  bool positive() const { return lo_ > 0; }
  bool negative() const { return hi_ < 0; }

  Interval with_bits(long bits) const;
  /// Outward rounding to `bits` significant bits (no-op for bits == 0).
  Interval rounded(long bits) const;

  Interval operator-() const { return Interval(-hi_, -lo_, bits_); }
  friend Interval operator+(const Interval& x, const Interval& y);
  friend Interval operator-(const Interval& x, const Interval& y);
  friend Interval operator*(const Interval& x, const Interval& y);
  friend Interval operator/(const Interval& x, const Interval& y);
  Interval& operator+=(const Interval& y) { return *this = *this + y; }
  Interval& operator-=(const Interval& y) { return *this = *this - y; }
  Interval& operator*=(const Interval& y) { return *this = *this * y; }

  /// Endpoint equality; precision is not compared.
  friend bool operator==(const Interval& x, const Interval& y) { return x.lo_ == y.lo_ && x.hi_ == y.hi_; }

  Interval square() const;
  Interval pow(unsigned e) const;

  /// "[lo_num/lo_den, hi_num/hi_den]"
  std::string to_text() const;
  static Interval parse(const std::string& text);

 private:
  Rational lo_;
  Rational hi_;
  long bits_ = 0;
};

std::optional<Interval> intersect(const Interval& x, const Interval& y);

/// Outward enclosure of sqrt over x (requires x.lo() >= 0) with `bits` bits of precision.
Interval sqrt(const Interval& x, long bits);

using IntervalAssignment = std::map<Var, Interval>;

}  // namespace slackcert

#endif
