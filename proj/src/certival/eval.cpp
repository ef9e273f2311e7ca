#include "slackcert/certival/eval.hpp"

#include <algorithm>
#include <array>

namespace slackcert {

Interval ival_eval(const MultiPoly& p, const IntervalAssignment& at, long bits) {
  if (bits <= 0) {
    for (const auto& [var, iv] : at) bits = std::max(bits, iv.bits());
  }
  auto degrees = p.degrees();
  std::array<std::vector<Interval>, kVarCount> powers;
  for (int k = 0; k < kVarCount; ++k) {
    unsigned d = degrees[static_cast<std::size_t>(k)];
    if (d == 0) continue;
    auto it = at.find(var_at(k));
    if (it == at.end()) throw UnassignedVariable("no interval assigned to " + std::string(var_name(var_at(k))));
    auto& table = powers[static_cast<std::size_t>(k)];
    Interval x = it->second.with_bits(bits);
    table.reserve(d + 1);
    table.push_back(Interval(1).with_bits(bits));
    for (unsigned e = 1; e <= d; ++e) table.push_back(x.pow(e));
  }
  Interval sum = Interval(0).with_bits(bits);
  for (const auto& term : p.terms()) {
    Interval acc = Interval(term.coef).with_bits(bits);
    for (int k = 0; k < kVarCount; ++k) {
      unsigned e = term.mono.exponent(var_at(k));
      if (e) acc *= powers[static_cast<std::size_t>(k)][e];
    }
    sum += acc;
  }
  return sum;
}

Interval ival_eval(const PolyFraction& f, const IntervalAssignment& at, long bits) {
  Interval num = ival_eval(f.num(), at, bits);
  Interval den = ival_eval(f.den(), at, bits);
  return num / den;
}

Interval horner(const std::vector<Interval>& coeffs, const Interval& x) {
  Interval acc(0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "Negative";
    case Sign::Positive: return "Positive";
    case Sign::Unknown: return "Unknown";
  }
  return "Unknown";
}

SignVerdict verdict_of(const Interval& enclosure, long bits) {
  SignVerdict v;
  v.enclosure = enclosure;
  v.bits = bits;
  if (enclosure.negative()) {
    v.sign = Sign::Negative;
  } else if (enclosure.positive()) {
    v.sign = Sign::Positive;
  }
  return v;
}

SignVerdict sign_of(const MultiPoly& p, const IntervalAssignment& at, long bits) {
  return verdict_of(ival_eval(p, at, bits), bits);
}

SignVerdict sign_of(const PolyFraction& f, const IntervalAssignment& at, long bits) {
  Interval den = ival_eval(f.den(), at, bits);
  if (den.contains_zero()) return verdict_of(Interval::hull(den, Interval(0)), bits);
  return verdict_of(ival_eval(f.num(), at, bits) / den, bits);
}

SignVerdict sign_with_refinement(const Encloser& enclose, long max_bits, const std::vector<long>& ladder) {
  SignVerdict last;
  for (long rung : ladder) {
    if (rung > max_bits) break;
    try {
      last = verdict_of(enclose(rung), rung);
    } catch (const IntervalDivisionByZero&) {
      last = SignVerdict{Sign::Unknown, Interval(0), rung};
    }
    if (last.sign != Sign::Unknown) return last;
  }
  return last;
}

}  // namespace slackcert
