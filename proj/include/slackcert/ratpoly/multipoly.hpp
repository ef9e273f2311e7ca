#ifndef SLACKCERT_RATPOLY_MULTIPOLY_HPP
#define SLACKCERT_RATPOLY_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slackcert/ratpoly/rational.hpp"
#include "slackcert/ratpoly/varid.hpp"

namespace slackcert {

/**
 * Exponent vector packed into 128 bits: total degree in the top byte, then six bits per
 * variable in alphabet order. Integer comparison of keys is graded lexicographic order
 * with t > a > b > c > v11 > ... > w4.
 */
class Monomial {
 public:
  using Key = unsigned __int128;
  static constexpr int kFieldBits = 6;
  static constexpr unsigned kMaxExponent = (1u << kFieldBits) - 1;
  static constexpr unsigned kMaxTotal = 255;

  constexpr Monomial() = default;
  static Monomial of(Var v, unsigned e = 1);
  static Monomial from_exponents(const std::array<unsigned, kVarCount>& exps);
  static constexpr Monomial from_key(Key k) { Monomial m; m.key_ = k; return m; }

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((key_ >> shift(v)) & kMaxExponent);
  }
  unsigned total_degree() const { return static_cast<unsigned>(key_ >> 120); }
  std::array<unsigned, kVarCount> exponents() const;
  bool is_one() const { return key_ == 0; }
  Key key() const { return key_; }

  /// Checked product; throws std::overflow_error when an exponent field would overflow.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Precondition: divides(other) holds for `this` dividing `other`; returns other / this.
  Monomial quotient_of(const Monomial& other) const;

  Monomial without(Var v) const { return from_key(key_ - (Key(exponent(v)) << shift(v)) - (Key(exponent(v)) << 120)); }

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.key_ == y.key_; }
  friend bool operator<(const Monomial& x, const Monomial& y) { return x.key_ < y.key_; }

  std::string to_string() const;

  static constexpr int shift(Var v) { return 114 - kFieldBits * index_of(v); }

 private:
  Key key_ = 0;
};

/// Assignment of exact values to some variables.
using RationalAssignment = std::map<Var, Rational>;

/**
 * Sparse multivariate polynomial over the rationals. Terms are kept sorted by descending
 * monomial order with no zero coefficients, so structural equality is polynomial equality.
 */
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
  };

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT
  MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT

  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Rational& c, const Monomial& m);
  /// Merges duplicate monomials and drops zeros; input order is irrelevant.
  static MultiPoly from_terms(std::vector<Term> terms);
  /// Parses expressions like "3/4*t^2*a - (b+1)^2"; integers, '/' by integer literals only.
  static MultiPoly parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.front(); }

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool has_var(Var v) const { return degree(v) > 0; }
  std::array<unsigned, kVarCount> degrees() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator*(MultiPoly x, const Rational& c) { return x *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly x) { return x *= c; }
  friend bool operator==(const MultiPoly& x, const MultiPoly& y);
  friend bool operator!=(const MultiPoly& x, const MultiPoly& y) { return !(x == y); }

  MultiPoly pow(unsigned e) const;
  MultiPoly diff(Var v) const;
  /// Replaces v by q (Horner in v).
  MultiPoly substitute(Var v, const MultiPoly& q) const;
  /// Replaces the assigned variables by exact values; others stay symbolic.
  MultiPoly evaluate(const RationalAssignment& values) const;
  /// Coefficient list in v (index = exponent), each free of v.
  std::vector<MultiPoly> coefficients_in(Var v) const;
  static MultiPoly from_coefficients(Var v, const std::vector<MultiPoly>& coeffs);

  /// Positive rational c with p / c having coprime integer coefficients.
  Rational content() const;
  /// Sum of |coef|; a crude magnitude.
  Rational l1_norm() const;

  double evaluate_double(const std::array<double, kVarCount>& at) const;

  /// Canonical text: descending monomials, "num/den*x^e*..." joined by " + "; "0" if zero.
  std::string to_string() const;

 private:
  static MultiPoly merged(const MultiPoly& x, const MultiPoly& y, bool subtract);

  std::vector<Term> terms_;
};

/// p / d when d divides p exactly in Q[vars]; nullopt otherwise. d must be nonzero.
std::optional<MultiPoly> exact_div(const MultiPoly& p, const MultiPoly& d);

/// Multivariate division by a single divisor: p = quot * d + rem with no term of rem
/// divisible by lt(d).
struct DivisionResult {
  MultiPoly quot;
  MultiPoly rem;
};
DivisionResult divide(const MultiPoly& p, const MultiPoly& d);

/**
 * Division in x with coefficients in the fraction field of the remaining variables.
 * quot = quot_num / denom, rem = rem_num / denom, and denom * p = quot_num*q + rem_num
 * with deg_x(rem_num) < deg_x(q). denom is a power of lc_x(q), folded to 1 when the
 * division happens to be exact over the polynomial ring.
 */
struct FractionDivision {
  MultiPoly quot_num;
  MultiPoly rem_num;
  MultiPoly denom;
};
FractionDivision poly_divmod(const MultiPoly& p, const MultiPoly& q, Var x);

}  // namespace slackcert

#endif
