#include "slackcert/ratpoly/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace slackcert {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {
    "t",   "a",   "b",   "c",   "v11", "v12", "v13", "v21", "v22", "v23",
    "v31", "v32", "v33", "v41", "v42", "v43", "w1",  "w2",  "w3",  "w4"};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_key(Monomial::Key k) {
  return mix(static_cast<std::uint64_t>(k) ^ mix(static_cast<std::uint64_t>(k >> 64)));
}

// Open-addressing accumulator: monomial key -> integer coefficient.
class KeyAccumulator {
 public:
  explicit KeyAccumulator(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, kEmpty);
    keys_.resize(cap);
  }

  Integer& at(Monomial::Key k) {
    if (2 * (values_.size() + 1) > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    std::size_t h = hash_key(k) & mask;
    while (slots_[h] != kEmpty) {
      if (keys_[h] == k) return values_[slots_[h]];
      h = (h + 1) & mask;
    }
    slots_[h] = values_.size();
    keys_[h] = k;
    values_.emplace_back(0);
    order_.push_back(k);
    return values_.back();
  }

  const std::vector<Monomial::Key>& keys() const { return order_; }
  const std::vector<Integer>& values() const { return values_; }

 private:
  static constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);

  void grow() {
    std::vector<std::size_t> old_slots = std::move(slots_);
    std::vector<Monomial::Key> old_keys = std::move(keys_);
    slots_.assign(old_slots.size() * 2, kEmpty);
    keys_.assign(old_slots.size() * 2, 0);
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = 0; s < old_slots.size(); ++s) {
      if (old_slots[s] == kEmpty) continue;
      std::size_t h = hash_key(old_keys[s]) & mask;
      while (slots_[h] != kEmpty) h = (h + 1) & mask;
      slots_[h] = old_slots[s];
      keys_[h] = old_keys[s];
    }
  }

  std::vector<std::size_t> slots_;
  std::vector<Monomial::Key> keys_;
  std::vector<Integer> values_;
  std::vector<Monomial::Key> order_;
};

Integer common_denominator(const MultiPoly& p) {
  Integer d = 1;
  for (const auto& term : p.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), term.coef.get_den_mpz_t());
  return d;
}

void check_product_degrees(const MultiPoly& x, const MultiPoly& y) {
  auto dx = x.degrees();
  auto dy = y.degrees();
  for (int k = 0; k < kVarCount; ++k) {
    if (dx[k] + dy[k] > Monomial::kMaxExponent) throw std::overflow_error("exponent overflow in product");
  }
  if (x.total_degree() + y.total_degree() > Monomial::kMaxTotal) throw std::overflow_error("total degree overflow");
}

}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(index_of(v))]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (int k = 0; k < kVarCount; ++k) {
    if (kNames[static_cast<std::size_t>(k)] == name) return var_at(k);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Var v, unsigned e) {
  std::array<unsigned, kVarCount> exps{};
  exps[static_cast<std::size_t>(index_of(v))] = e;
  return from_exponents(exps);
}

Monomial Monomial::from_exponents(const std::array<unsigned, kVarCount>& exps) {
  Key k = 0;
  unsigned total = 0;
  for (int i = 0; i < kVarCount; ++i) {
    unsigned e = exps[static_cast<std::size_t>(i)];
    if (e > kMaxExponent) throw std::overflow_error("exponent too large");
    total += e;
    k |= Key(e) << shift(var_at(i));
  }
  if (total > kMaxTotal) throw std::overflow_error("total degree too large");
  k |= Key(total) << 120;
  return from_key(k);
}

std::array<unsigned, kVarCount> Monomial::exponents() const {
  std::array<unsigned, kVarCount> e{};
  for (int i = 0; i < kVarCount; ++i) e[static_cast<std::size_t>(i)] = exponent(var_at(i));
  return e;
}

Monomial Monomial::operator*(const Monomial& other) const {
  auto x = exponents();
  auto y = other.exponents();
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return from_exponents(x);
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kVarCount; ++i) {
    if (exponent(var_at(i)) > other.exponent(var_at(i))) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const { return from_key(other.key_ - key_); }

std::string Monomial::to_string() const {
  std::string s;
  for (int i = 0; i < kVarCount; ++i) {
    unsigned e = exponent(var_at(i));
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += var_name(var_at(i));
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

MultiPoly MultiPoly::variable(Var v) { return monomial(1, Monomial::of(v)); }

MultiPoly MultiPoly::monomial(const Rational& c, const Monomial& m) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return y.mono < x.mono; });
  MultiPoly p;
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == term.mono) {
      p.terms_.back().coef += term.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (term.coef != 0) {
      p.terms_.push_back(std::move(term));
    }
  }
  return p;
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_[0].coef;
}

unsigned MultiPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& term : terms_) d = std::max(d, term.mono.exponent(v));
  return d;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().mono.total_degree();
}

std::array<unsigned, kVarCount> MultiPoly::degrees() const {
  std::array<unsigned, kVarCount> d{};
  for (const auto& term : terms_) {
    auto e = term.mono.exponents();
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::max(d[i], e[i]);
  }
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& term : r.terms_) term.coef = -term.coef;
  return r;
}

MultiPoly MultiPoly::merged(const MultiPoly& x, const MultiPoly& y, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(x.size() + y.size());
  const auto& a = x.terms();
  const auto& b = y.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && b[j].mono < a[i].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || a[i].mono < b[j].mono) {
      out.push_back({b[j].mono, subtract ? Rational(-b[j].coef) : b[j].coef});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  MultiPoly r;
  r.terms_ = std::move(out);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  *this = merged(*this, o, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  *this = merged(*this, o, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.coef *= c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  check_product_degrees(x, y);
  if (x.size() == 1 || y.size() == 1) {
    const MultiPoly& one = x.size() == 1 ? x : y;
    const MultiPoly& many = x.size() == 1 ? y : x;
    const auto& t0 = one.terms_[0];
    MultiPoly r;
    r.terms_.reserve(many.size());
    // Multiplying by a monomial preserves the order.
    for (const auto& term : many.terms_) {
      r.terms_.push_back({Monomial::from_key(term.mono.key() + t0.mono.key()), term.coef * t0.coef});
    }
    return r;
  }

  Integer dx = common_denominator(x);
  Integer dy = common_denominator(y);
  std::vector<Integer> xi;
  std::vector<Integer> yi;
  xi.reserve(x.size());
  yi.reserve(y.size());
  for (const auto& term : x.terms_) xi.push_back(term.coef.get_num() * (dx / term.coef.get_den()));
  for (const auto& term : y.terms_) yi.push_back(term.coef.get_num() * (dy / term.coef.get_den()));

  KeyAccumulator acc(std::min<std::size_t>(x.size() * y.size(), 1u << 20));
  for (std::size_t i = 0; i < x.size(); ++i) {
    Monomial::Key ki = x.terms_[i].mono.key();
    mpz_srcptr ci = xi[i].get_mpz_t();
    for (std::size_t j = 0; j < y.size(); ++j) {
      Integer& slot = acc.at(ki + y.terms_[j].mono.key());
      mpz_addmul(slot.get_mpz_t(), ci, yi[j].get_mpz_t());
    }
  }

  Integer den = dx * dy;
  std::vector<std::size_t> idx(acc.keys().size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) { return acc.keys()[q] < acc.keys()[p]; });
  MultiPoly r;
  r.terms_.reserve(idx.size());
  for (std::size_t k : idx) {
    if (acc.values()[k] == 0) continue;
    Rational c(acc.values()[k], den);
    c.canonicalize();
    r.terms_.push_back({Monomial::from_key(acc.keys()[k]), std::move(c)});
  }
  return r;
}

bool operator==(const MultiPoly& x, const MultiPoly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (!(x.terms_[i].mono == y.terms_[i].mono) || x.terms_[i].coef != y.terms_[i].coef) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::diff(Var v) const {
  MultiPoly r;
  Monomial::Key unit = Monomial::of(v).key();
  for (const auto& term : terms_) {
    unsigned e = term.mono.exponent(v);
    if (e == 0) continue;
    r.terms_.push_back({Monomial::from_key(term.mono.key() - unit), term.coef * e});
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& term : terms_) {
    unsigned e = term.mono.exponent(v);
    buckets[e].push_back({term.mono.without(v), term.coef});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& bucket : buckets) out.push_back(from_terms(std::move(bucket)));
  return out;
}

MultiPoly MultiPoly::from_coefficients(Var v, const std::vector<MultiPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e].has_var(v)) throw std::invalid_argument("coefficient depends on the main variable");
    Monomial shift = Monomial::of(v, static_cast<unsigned>(e));
    for (const auto& term : coeffs[e].terms()) terms.push_back({term.mono * shift, term.coef});
  }
  return from_terms(std::move(terms));
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& q) const {
  auto coeffs = coefficients_in(v);
  MultiPoly r;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    r = r * q + coeffs[k];
  }
  return r;
}

MultiPoly MultiPoly::evaluate(const RationalAssignment& values) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  std::map<std::pair<int, unsigned>, Rational> powers;
  for (const auto& term : terms_) {
    Rational c = term.coef;
    Monomial m = term.mono;
    for (const auto& [var, value] : values) {
      unsigned e = m.exponent(var);
      if (e == 0) continue;
      auto key = std::make_pair(index_of(var), e);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, pow_int(value, e)).first;
      c *= it->second;
      m = m.without(var);
    }
    if (c != 0) terms.push_back({m, c});
  }
  return from_terms(std::move(terms));
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 1;
  Integer g = 0;
  Integer l = 1;
  for (const auto& term : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.coef.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return c;
}

Rational MultiPoly::l1_norm() const {
  Rational s = 0;
  for (const auto& term : terms_) s += abs(term.coef);
  return s;
}

double MultiPoly::evaluate_double(const std::array<double, kVarCount>& at) const {
  double s = 0;
  for (const auto& term : terms_) {
    double m = term.coef.get_d();
    for (int i = 0; i < kVarCount; ++i) {
      unsigned e = term.mono.exponent(var_at(i));
      if (e) m *= std::pow(at[static_cast<std::size_t>(i)], static_cast<double>(e));
    }
    s += m;
  }
  return s;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    s += to_text(terms_[i].coef);
    if (!terms_[i].mono.is_one()) s += "*" + terms_[i].mono.to_string();
  }
  return s;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  Integer integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  MultiPoly expr() {
    MultiPoly p = term();
    while (true) {
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }
  MultiPoly term() {
    MultiPoly p = factor();
    while (true) {
      if (eat('*')) {
        p *= factor();
      } else if (eat('/')) {
        Integer d = integer();
        if (d == 0) fail("division by zero");
        p *= Rational(Integer(1), d);
      } else {
        return p;
      }
    }
  }
  MultiPoly factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    MultiPoly base = atom();
    if (eat('^')) {
      Integer e = integer();
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }
  MultiPoly atom() {
    skip();
    if (eat('(')) {
      MultiPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return MultiPoly(Rational(integer()));
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    auto v = var_from_name(s_.substr(start, pos_ - start));
    if (!v) fail("unknown variable '" + std::string(s_.substr(start, pos_ - start)) + "'");
    return MultiPoly::variable(*v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- division

DivisionResult divide(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  const auto& lead = d.leading_term();
  Rational inv_lc = 1 / lead.coef;
  std::map<Monomial::Key, Rational, std::greater<>> work;
  for (const auto& term : p.terms()) work.emplace(term.mono.key(), term.coef);
  std::vector<MultiPoly::Term> quot;
  std::vector<MultiPoly::Term> rem;
  while (!work.empty()) {
    auto it = work.begin();
    Monomial m = Monomial::from_key(it->first);
    if (!lead.mono.divides(m)) {
      rem.push_back({m, std::move(it->second)});
      work.erase(it);
      continue;
    }
    Rational qc = it->second * inv_lc;
    Monomial qm = lead.mono.quotient_of(m);
    work.erase(it);
    bool first = true;
    for (const auto& dt : d.terms()) {
      if (first) {
        first = false;
        continue;
      }
      Monomial::Key k = qm.key() + dt.mono.key();
      auto [slot, inserted] = work.try_emplace(k, 0);
      slot->second -= qc * dt.coef;
      if (slot->second == 0) work.erase(slot);
    }
    quot.push_back({qm, std::move(qc)});
  }
  return {MultiPoly::from_terms(std::move(quot)), MultiPoly::from_terms(std::move(rem))};
}

std::optional<MultiPoly> exact_div(const MultiPoly& p, const MultiPoly& d) {
  auto [q, r] = divide(p, d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

FractionDivision poly_divmod(const MultiPoly& p, const MultiPoly& q, Var x) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  unsigned m = q.degree(x);
  if (m == 0) throw std::domain_error("divisor has no positive degree in the main variable");
  auto qc = q.coefficients_in(x);
  const MultiPoly& lc = qc[m];

  MultiPoly rem = p;
  MultiPoly quot;
  unsigned steps = 0;
  while (!rem.is_zero() && rem.degree(x) >= m) {
    unsigned n = rem.degree(x);
    MultiPoly lead = rem.coefficients_in(x)[n];
    MultiPoly shift = lead * MultiPoly::monomial(1, Monomial::of(x, n - m));
    quot = lc * quot + shift;
    rem = lc * rem - shift * q;
    ++steps;
  }

  MultiPoly denom = lc.pow(steps);
  if (denom.is_constant()) {
    Rational inv = 1 / denom.constant_value();
    return {quot * inv, rem * inv, MultiPoly(1)};
  }
  auto qq = exact_div(quot, denom);
  auto rr = exact_div(rem, denom);
  if (qq && rr) return {*qq, *rr, MultiPoly(1)};
  return {quot, rem, denom};
}

}  // namespace slackcert
