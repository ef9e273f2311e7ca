#include "slackcert/certival/interval.hpp"

#include <algorithm>
#include <optional>

namespace slackcert {

Interval::Interval(Rational lo, Rational hi, long bits) : lo_(std::move(lo)), hi_(std::move(hi)), bits_(bits) {
  if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
  if (bits_ > 0) *this = rounded(bits_);
}

Interval Interval::hull(const Interval& x, const Interval& y) {
  return Interval(std::min(x.lo_, y.lo_), std::max(x.hi_, y.hi_), std::max(x.bits_, y.bits_));
}

Rational Interval::mag() const { return std::max(Rational(abs(lo_)), Rational(abs(hi_))); }

Rational Interval::mig() const {
  if (contains_zero()) return 0;
  return std::min(Rational(abs(lo_)), Rational(abs(hi_)));
}

Interval Interval::with_bits(long bits) const {
  Interval r = *this;
  r.bits_ = bits;
  return bits > 0 ? r.rounded(bits) : r;
}

Interval Interval::rounded(long bits) const {
  Interval r;
  r.bits_ = bits_;
  if (bits <= 0) {
    r.lo_ = lo_;
    r.hi_ = hi_;
    return r;
  }
  r.lo_ = round_down(lo_, bits);
  r.hi_ = round_up(hi_, bits);
  return r;
}

namespace {

Interval make(Rational lo, Rational hi, long bits) {
  return Interval(std::move(lo), std::move(hi), bits);
}

}  // namespace

Interval operator+(const Interval& x, const Interval& y) {
  return make(x.lo_ + y.lo_, x.hi_ + y.hi_, std::max(x.bits_, y.bits_));
}

Interval operator-(const Interval& x, const Interval& y) {
  return make(x.lo_ - y.hi_, x.hi_ - y.lo_, std::max(x.bits_, y.bits_));
}

Interval operator*(const Interval& x, const Interval& y) {
  long bits = std::max(x.bits_, y.bits_);
  if (x.is_point() && y.is_point()) {
    Rational p = x.lo_ * y.lo_;
    return make(p, p, bits);
  }
  if (x.lo_ >= 0 && y.lo_ >= 0) return make(x.lo_ * y.lo_, x.hi_ * y.hi_, bits);
  if (x.hi_ <= 0 && y.hi_ <= 0) return make(x.hi_ * y.hi_, x.lo_ * y.lo_, bits);
  if (x.lo_ >= 0 && y.hi_ <= 0) return make(x.hi_ * y.lo_, x.lo_ * y.hi_, bits);
  if (x.hi_ <= 0 && y.lo_ >= 0) return make(x.lo_ * y.hi_, x.hi_ * y.lo_, bits);
  Rational a = x.lo_ * y.lo_;
  Rational b = x.lo_ * y.hi_;
  Rational c = x.hi_ * y.lo_;
  Rational d = x.hi_ * y.hi_;
  return make(std::min({a, b, c, d}), std::max({a, b, c, d}), bits);
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains_zero()) throw IntervalDivisionByZero("interval division by an interval containing 0");
  long bits = std::max(x.bits_, y.bits_);
  Interval inv;
  if (bits > 0) {
    // 1/y rounded outward before the product keeps endpoint sizes bounded.
    inv = make(round_down(1 / y.hi_, bits + 8), round_up(1 / y.lo_, bits + 8), bits);
  } else {
    inv = make(1 / y.hi_, 1 / y.lo_, 0);
  }
  return x * inv;
}

Interval Interval::square() const {
  Rational a = lo_ * lo_;
  Rational b = hi_ * hi_;
  if (contains_zero()) return make(0, std::max(a, b), bits_);
  return make(std::min(a, b), std::max(a, b), bits_);
}

Interval Interval::pow(unsigned e) const {
  if (e == 0) return Interval(1).with_bits(bits_);
  if (e == 1) return *this;
  if (e % 2 == 0) {
    Interval h = pow(e / 2);
    return h.square();
  }
  return *this * pow(e - 1);
}

std::string Interval::to_text() const { return "[" + slackcert::to_text(lo_) + ", " + slackcert::to_text(hi_) + "]"; }

Interval Interval::parse(const std::string& text) {
  auto open = text.find('[');
  auto comma = text.find(',');
  auto close = text.find(']');
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos) {
    throw std::invalid_argument("bad interval text: " + text);
  }
  return Interval(parse_rational(text.substr(open + 1, comma - open - 1)),
                  parse_rational(text.substr(comma + 1, close - comma - 1)));
}

std::optional<Interval> intersect(const Interval& x, const Interval& y) {
  Rational lo = std::max(x.lo(), y.lo());
  Rational hi = std::min(x.hi(), y.hi());
  if (lo > hi) return std::nullopt;
  return Interval(lo, hi, std::max(x.bits(), y.bits()));
}

namespace {

// floor(sqrt(q * 4^k)) / 2^k and the matching upper bound.
std::pair<Rational, Rational> sqrt_bounds(const Rational& q, long k) {
  Rational scaled = q * pow2(2 * k);
  Integer lo_int = floor_div(scaled);
  Integer hi_int = ceil_div(scaled);
  Integer r_lo;
  Integer r_hi;
  mpz_sqrt(r_lo.get_mpz_t(), lo_int.get_mpz_t());
  mpz_sqrt(r_hi.get_mpz_t(), hi_int.get_mpz_t());
  if (r_hi * r_hi < hi_int) r_hi += 1;
  return {Rational(r_lo) * pow2(-k), Rational(r_hi) * pow2(-k)};
}

}  // namespace

Interval sqrt(const Interval& x, long bits) {
  if (x.lo() < 0) throw std::domain_error("sqrt of an interval with negative part");
  long b = bits > 0 ? bits : 256;
  long k = b - log2_floor(x.hi() == 0 ? Rational(1) : x.hi()) / 2 + 2;
  auto lo = sqrt_bounds(x.lo(), k).first;
  auto hi = sqrt_bounds(x.hi(), k).second;
  return Interval(lo, hi, bits);
}

}  // namespace slackcert
