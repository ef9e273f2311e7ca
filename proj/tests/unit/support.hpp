#ifndef SLACKCERT_TESTS_SUPPORT_HPP
#define SLACKCERT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "slackcert/ratpoly/multipoly.hpp"

namespace slackcert::testing {

// Deterministic generators: every property test owns a Gen with a fixed seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long range, long max_den) {
    Rational q(integer(-range, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  Rational big_rational() {
    Integer num(static_cast<unsigned long>(integer(1, 1L << 40)));
    Integer den(static_cast<unsigned long>(integer(1, 1L << 40)));
    num *= num;
    den *= den * den;
    Rational q(integer(0, 1) ? num : Integer(-num), den);
    q.canonicalize();
    return q;
  }

  MultiPoly poly(const std::vector<Var>& vars, int terms, int max_exp) {
    MultiPoly p;
    for (int k = 0; k < terms; ++k) {
      MultiPoly m(rational(9, 5));
      for (Var v : vars) m *= MultiPoly::variable(v).pow(static_cast<unsigned>(integer(0, max_exp)));
      p += m;
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline MultiPoly P(const char* text) { return MultiPoly::parse(text); }

}  // namespace slackcert::testing

#endif
