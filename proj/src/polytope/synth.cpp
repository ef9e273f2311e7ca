#include "slackcert/polytope/synth.hpp"

#include <sstream>

#include "slackcert/polytope/membership.hpp"

namespace slackcert {

RPoint round_chart(const IPoint& x, const Integer& den, std::size_t fix, int zero) {
  RPoint out(x.size());
  Rational rest = 1;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k == fix) continue;
    if (static_cast<int>(k) == zero) {
      out[k] = 0;
      continue;
    }
    Rational scaled = x[k].mid() * Rational(den);
    out[k] = Rational(floor_div(scaled + Rational(1, 2)), den);
    out[k].canonicalize();
    rest -= out[k];
  }
  out[fix] = rest;
  return out;
}

std::array<Interval, 4> slice_barycentric(const std::array<RPoint, 4>& tetra, std::size_t slice, const IPoint& x) {
  Matrix<Rational> m(4, std::vector<Rational>(4));
  std::vector<std::size_t> coords;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k != slice) coords.push_back(k);
  }
  if (coords.size() != 4) throw std::invalid_argument("slice_barycentric expects five coordinates");
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) m[r][c] = tetra[c][coords[r]];
  }
  auto inv = inverse_exact(m);
  if (!inv) throw DegenerateError("tetrahedron is degenerate");
  std::array<Interval, 4> out;
  for (std::size_t r = 0; r < 4; ++r) {
    Interval s(0);
    for (std::size_t c = 0; c < 4; ++c) s += Interval((*inv)[r][c]) * x[coords[c]];
    out[r] = s;
  }
  return out;
}

namespace {

Integer grid_denominator(const Rational& eps) {
  Integer den = 1000000;
  while (Rational(den) * eps < 1000) den *= 10;
  return den;
}

RPoint blend(const RPoint& x, const RPoint& target, const Rational& weight) {
  RPoint out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = (1 - weight) * x[k] + weight * target[k];
  return out;
}

Interval squared_distance(const RPoint& x, const IPoint& y) {
  Interval s(0);
  for (std::size_t k = 0; k < x.size(); ++k) s += (Interval(x[k]) - y[k]).square();
  return s;
}

Rational squared_distance(const RPoint& x, const RPoint& y) {
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += (x[k] - y[k]) * (x[k] - y[k]);
  return s;
}

// Orthonormal basis of the zero-sum plane in four coordinates and the vertex signs of a
// regular tetrahedron inscribed in the cube with those axes.
constexpr int kBasis[3][4] = {{1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
constexpr int kSigns[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};

SynthParams attempt(const SynthInput& in, const Rational& eps) {
  SynthParams p;
  p.eps = eps;
  p.denominator = grid_denominator(eps);
  const Rational den(p.denominator);
  p.q1 = Rational(floor_div(in.tau.lo() * den) - 1, p.denominator);
  p.q2 = Rational(ceil_div(in.tau.hi() * den) + 1, p.denominator);
  p.q1.canonicalize();
  p.q2.canonicalize();
  p.Omega1 = in.omega_curve(p.q1);
  p.Omega2 = in.omega_curve(p.q2);

  IPoint centroid(5, Interval(0));
  for (std::size_t k = 0; k < 5; ++k) {
    Interval s = in.Omega[k];
    for (const auto& v : in.V) s += v[k];
    centroid[k] = s / Interval(5);
  }
  RPoint c = round_chart(centroid, p.denominator, 4);
  const Rational weight = eps / 4;
  p.W = blend(round_chart(in.Omega, p.denominator, 4), c, weight);
  for (std::size_t i = 0; i < 4; ++i) {
    p.center[i] = round_chart(in.V[i], p.denominator, 4, static_cast<int>(i));
    p.Wi[i] = blend(p.center[i], c, weight);
    std::vector<std::size_t> coords;
    for (std::size_t k = 0; k < 5; ++k) {
      if (k != i) coords.push_back(k);
    }
    const Rational rho = eps / 8;
    for (std::size_t m = 0; m < 4; ++m) {
      RPoint x = p.center[i];
      for (std::size_t b = 0; b < 3; ++b) {
        for (std::size_t k = 0; k < 4; ++k) x[coords[k]] += rho * kSigns[m][b] * kBasis[b][k] / 2;
      }
      p.tetra[i][m] = x;
    }
  }
  return p;
}

}  // namespace

std::vector<std::string> synth_invariant_failures(const SynthParams& p, const SynthInput& in) {
  std::vector<std::string> fail;
  const Rational eps2 = p.eps * p.eps;
  if (!(p.q1 < in.tau.lo() && in.tau.hi() < p.q2)) fail.push_back("tau not inside (q1, q2)");
  if (!(p.q2 - p.q1 < p.eps)) fail.push_back("|q2 - q1| >= eps");
  auto check_chart = [&](const RPoint& x, const std::string& name) {
    Rational s = 0;
    for (const auto& v : x) s += v;
    if (s != 1) fail.push_back(name + " not in the chart");
  };
  check_chart(p.W, "W");
  check_chart(p.Omega1, "Omega_1");
  check_chart(p.Omega2, "Omega_2");
  if (!(squared_distance(p.W, in.Omega).hi() < eps2)) fail.push_back("|W - Omega| not certified < eps");
  if (member_certified(in.delta, to_interval(p.W)).status != CertifiedMembership::Inside) {
    fail.push_back("W not certified interior to Delta");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string idx = std::to_string(i + 1);
    check_chart(p.Wi[i], "W_" + idx);
    if (!(squared_distance(p.Wi[i], in.V[i]).hi() < eps2)) fail.push_back("|W_" + idx + " - V_" + idx + "| not certified < eps");
    if (member_certified(in.delta, to_interval(p.Wi[i])).status != CertifiedMembership::Inside) {
      fail.push_back("W_" + idx + " not certified interior to Delta");
    }
    Rational diam2 = 0;
    for (std::size_t m = 0; m < 4; ++m) {
      check_chart(p.tetra[i][m], "tetrahedron vertex " + idx + "." + std::to_string(m + 1));
      if (p.tetra[i][m][i] != 0) fail.push_back("tetrahedron vertex with nonzero coordinate " + idx);
      for (std::size_t n = m + 1; n < 4; ++n) diam2 = std::max(diam2, squared_distance(p.tetra[i][m], p.tetra[i][n]));
    }
    if (!(diam2 < eps2)) fail.push_back("tetrahedron " + idx + " diameter >= eps");
    auto bary = slice_barycentric(p.tetra[i], i, in.V[i]);
    for (const auto& b : bary) {
      if (!b.positive()) {
        fail.push_back("V_" + idx + " not certified interior to its tetrahedron");
        break;
      }
    }
  }
  return fail;
}

std::vector<RPoint> q_generators(const SynthParams& p) {
  std::vector<RPoint> out{p.Omega1, p.Omega2};
  for (const auto& t : p.tetra) out.insert(out.end(), t.begin(), t.end());
  return out;
}

SynthParams synth_params(const SynthInput& in, const Rational& eps0, const SynthValidator& validator,
                         int max_halvings) {
  if (eps0 <= 0) throw std::invalid_argument("eps must be positive");
  std::vector<AuditEntry> audit;
  Rational eps = eps0;
  for (int attempt_no = 0; attempt_no <= max_halvings; ++attempt_no, eps /= 2) {
    SynthParams p = attempt(in, eps);
    auto fail = synth_invariant_failures(p, in);
    std::optional<std::string> downstream;
    if (fail.empty() && validator) downstream = validator(p);
    if (fail.empty() && !downstream) {
      audit.push_back({eps, "accepted"});
      p.audit = audit;
      return p;
    }
    std::ostringstream reason;
    reason << "rejected: ";
    for (std::size_t k = 0; k < fail.size(); ++k) reason << (k ? "; " : "") << fail[k];
    if (downstream) reason << (fail.empty() ? "" : "; ") << *downstream;
    audit.push_back({eps, reason.str()});
  }
  std::ostringstream msg;
  msg << "parameter synthesis failed after " << max_halvings << " halvings";
  if (!audit.empty()) msg << "; last: " << audit.back().outcome;
  throw SynthesisError(msg.str());
}

}  // namespace slackcert
