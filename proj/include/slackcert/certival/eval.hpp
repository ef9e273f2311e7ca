#ifndef SLACKCERT_CERTIVAL_EVAL_HPP
#define SLACKCERT_CERTIVAL_EVAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "slackcert/certival/interval.hpp"
#include "slackcert/ratpoly/multipoly.hpp"
#include "slackcert/ratpoly/polyfraction.hpp"

namespace slackcert {

class UnassignedVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Enclosure of p over the box `at` by termwise evaluation with interval powers. Contains
 * the exact range; not necessarily tight. bits > 0 forces outward rounding at that
 * precision, otherwise the inputs' precision is used.
 */
Interval ival_eval(const MultiPoly& p, const IntervalAssignment& at, long bits = 0);
/// Throws IntervalDivisionByZero when the denominator's enclosure contains 0.
Interval ival_eval(const PolyFraction& f, const IntervalAssignment& at, long bits = 0);

/// Horner evaluation of sum c[k] x^k with interval coefficients.
Interval horner(const std::vector<Interval>& coeffs, const Interval& x);

enum class Sign { Negative, Positive, Unknown };
std::string to_string(Sign s);

struct SignVerdict {
  Sign sign = Sign::Unknown;
  Interval enclosure;
  long bits = 0;
};

/// Negative iff hi < 0, Positive iff lo > 0, Unknown otherwise.
SignVerdict verdict_of(const Interval& enclosure, long bits);

SignVerdict sign_of(const MultiPoly& p, const IntervalAssignment& at, long bits = 0);
/// The denominator must be certified Negative or Positive first; Unknown otherwise.
SignVerdict sign_of(const PolyFraction& f, const IntervalAssignment& at, long bits = 0);

/// Produces an enclosure at a given rung of the precision ladder (constants width 2^-rung).
using Encloser = std::function<Interval(long rung)>;

inline const std::vector<long>& default_ladder() {
  static const std::vector<long> ladder = {64, 128, 256, 512};
  return ladder;
}

/// Walks the ladder up to max_bits until the enclosure excludes 0. Never guesses.
SignVerdict sign_with_refinement(const Encloser& enclose, long max_bits,
                                 const std::vector<long>& ladder = default_ladder());

}  // namespace slackcert

#endif
