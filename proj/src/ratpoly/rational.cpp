#include "slackcert/ratpoly/rational.hpp"

#include <stdexcept>

namespace slackcert {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Integer z;
    if (z.set_str(s, 10) != 0) throw std::invalid_argument("bad integer: " + s);
    return Rational(z);
  }
  bool negative = !s.empty() && s[0] == '-';
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (negative) digits.erase(0, 1);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  std::size_t frac = s.size() - dot - 1;
  Integer num;
  if (digits.empty() || num.set_str(digits, 10) != 0) throw std::invalid_argument("bad decimal: " + s);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_text(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor_div(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_div(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

long log2_floor(const Rational& q) {
  if (q == 0) return 0;
  long nb = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
  long db = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  return nb - db;
}

Rational pow2(long e) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

namespace {

// Keeps `bits` significant bits: scale so that |q| * 2^k has about `bits` integer bits.
long scale_for(const Rational& q, long bits) { return bits - log2_floor(q); }

bool fits(const Rational& q, long bits) {
  // Dyadic with small enough denominator already representable.
  long db = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
  long nb = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
  return nb + db <= bits + 8;
}

}  // namespace

Rational round_down(const Rational& q, long bits) {
  if (q == 0 || fits(q, bits)) return q;
  long k = scale_for(q, bits);
  Rational scaled = q * pow2(k);
  return Rational(floor_div(scaled)) * pow2(-k);
}

Rational round_up(const Rational& q, long bits) {
  if (q == 0 || fits(q, bits)) return q;
  long k = scale_for(q, bits);
  Rational scaled = q * pow2(k);
  return Rational(ceil_div(scaled)) * pow2(-k);
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = q * Rational(scale);
  Integer n;
  mpz_tdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  bool negative = q < 0;
  Integer mag = negative ? Integer(-n) : n;
  std::string s = mag.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - static_cast<std::size_t>(digits));
  if (digits > 0) out += "." + s.substr(s.size() - static_cast<std::size_t>(digits));
  return negative ? "-" + out : out;
}

Rational pow_int(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;
}

}  // namespace slackcert
