// Runs every acceptance criterion at its stated tolerance and prints one line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "slackcert/slackbridge/oracle.hpp"
#include "slackcert/veripipe/pipeline.hpp"

using namespace slackcert;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool status_is(const Certificate& c, const std::string& id, CheckStatus s) {
  const CheckResult* r = c.find(id);
  return r != nullptr && r->status == s;
}

Rational frac(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Outcome criterion_constants() {
  Outcome o;
  auto t0 = Clock::now();
  ConstantsListing l = list_constants(30);
  double dt = seconds_since(t0);
  const Constants& k = l.constants;
  const Rational tol = frac(1, 1000000000000L);
  const char* prefixes[4] = {"-0.0311", "-0.4088", "0.3983", "0.1765"};
  const Interval* xs[4] = {&k.alpha(), &k.beta(), &k.gamma(), &k.tau.root};
  for (int i = 0; i < 4; ++i) {
    o.require(to_decimal(xs[i]->lo(), 4) == prefixes[i] && to_decimal(xs[i]->hi(), 4) == prefixes[i],
              std::string("prefix ") + prefixes[i]);
    o.require(xs[i]->width() <= tol, "width");
  }
  o.require(k.abc.unique && k.tau.unique, "uniqueness");
  o.require(dt <= 10, "runtime");
  o.detail << "prefixes " << to_decimal(k.alpha().mid(), 6) << " " << to_decimal(k.beta().mid(), 6) << " "
           << to_decimal(k.gamma().mid(), 6) << " " << to_decimal(k.tau.root.mid(), 6) << ", widths <= 1e-12, "
           << dt << " s";
  return o;
}

Outcome criterion_identity(const Certificate& c) {
  Outcome o;
  o.require(status_is(c, "phi.factorization", CheckStatus::ProvenSymbolic), "identity");
  const CheckResult* f = c.find("phi.factorization");
  o.require(f != nullptr && f->witness.value("remainder", "") == "0", "zero remainder");
  o.require(status_is(c, "phi.specialization", CheckStatus::ProvenSymbolic), "specialization");
  o.detail << "phi = zeta * pi, remainder 0, specialization at a = b = c = 0 agrees";
  return o;
}

Outcome criterion_signs(const Certificate& c) {
  Outcome o;
  std::size_t proven = 0;
  long bits = 0;
  for (const auto& r : c.checks) {
    bool sign = r.id.rfind("dpsi.v.", 0) == 0 || r.id.rfind("dpsi.dir.", 0) == 0 || r.id == "det.V-Omega.positive";
    if (!sign) continue;
    o.require(r.status == CheckStatus::Proven, r.id);
    proven += r.status == CheckStatus::Proven;
    bits = std::max(bits, r.precision);
  }
  o.require(proven == 29, "29 sign checks");
  for (const char* id : {"zeta.nonzero", "phi.second-derivative", "phi.second-derivative.crosscheck"}) {
    o.require(status_is(c, id, CheckStatus::Proven), id);
    if (const CheckResult* r = c.find(id)) bits = std::max(bits, r->precision);
  }
  o.require(bits > 0 && bits <= 512, "precision <= 512");
  const CheckResult* cc = c.find("phi.second-derivative.crosscheck");
  o.require(cc != nullptr && cc->witness.value("agrees", false), "cross-check");
  o.detail << proven << "/29 sign checks, zeta(tau) != 0, phi''(tau) < 0, cross-check agrees, max " << bits << " bits";
  return o;
}

Outcome criterion_chain(const Certificate& c) {
  Outcome o;
  int symbolic = 0;
  int strict = 0;
  int delta_in_q = 0;
  int tetra = 0;
  int crossings = 0;
  for (const auto& r : c.checks) {
    if (r.id.rfind("chain.P-in-Delta.F", 0) == 0) symbolic += r.status == CheckStatus::ProvenSymbolic;
    if (r.id.rfind("chain.P-in-Delta.W", 0) == 0) strict += r.status == CheckStatus::Proven;
    if (r.id.rfind("chain.Delta-in-Q.", 0) == 0) delta_in_q += r.passes();
    if (r.id.rfind("chain.V-in-tetra.", 0) == 0) tetra += r.status == CheckStatus::Proven;
    if (r.id.rfind("crossing.", 0) == 0) {
      crossings += r.status == CheckStatus::Proven && r.witness.value("incident_at_zero", false) &&
                   r.witness.value("linear_in_v", false);
    }
  }
  o.require(symbolic == 12, "12 symbolic incidences");
  o.require(strict == 5, "5 strict interiors");
  o.require(delta_in_q == 5, "Delta vertices in Q");
  o.require(tetra == 4, "V_i inside tetrahedra");
  o.require(crossings == 12, "facet crossings");
  o.require(c.synth.has_value(), "eps recorded");
  o.detail << symbolic << "+" << strict << " P generators in Delta, " << delta_in_q << " Delta vertices in Q, " << tetra
           << " V_i in tetrahedra, " << crossings << " crossings, eps " << (c.synth ? to_text(c.synth->eps) : "-");
  return o;
}

Outcome criterion_slack(const Certificate& c) {
  Outcome o;
  o.require(c.slack.has_value(), "slack matrix");
  if (!c.slack) return o;
  std::size_t facets = facet_enum(VPolytope(q_generators(*c.synth))).facets.size();
  o.require(c.slack->certified_nonnegative(), "nonnegative");
  o.require(c.slack->cols() == 17, "17 columns");
  o.require(c.slack->rows() == facets, "row count");
  RankCertificate rank = rank_certify(*c.slack, 5);
  o.require(rank.lower == 5 && rank.upper == 5 && !rank.minor.contains_zero(), "rank 5");
  o.require(status_is(c, "slack.rank", CheckStatus::Proven), "certificate rank check");
  o.detail << c.slack->rows() << " x " << c.slack->cols() << ", entries certified >= 0, rank " << rank.lower << ".."
           << rank.upper;
  return o;
}

Outcome criterion_oracle() {
  Outcome o;
  std::mt19937_64 rng(2024);
  auto draw = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  int found = 0;
  int pairs = 0;
  while (pairs < 25) {
    // Q: a random lattice polygon; P: convex combinations of triples of Q's points.
    std::vector<Point2> q;
    for (int k = 0; k < 5; ++k) q.push_back({frac(draw(0, 10), 10), frac(draw(0, 10), 10)});
    try {
      polygon_hrep(q);
    } catch (const DegenerateError&) {
      continue;
    }
    std::vector<Point2> p;
    for (int k = 0; k < 3 + pairs % 3; ++k) {
      long w[3] = {draw(1, 5), draw(1, 5), draw(1, 5)};
      long total = w[0] + w[1] + w[2];
      Point2 x{0, 0};
      for (int m = 0; m < 3; ++m) {
        const Point2& y = q[static_cast<std::size_t>(draw(0, 4))];
        for (int c = 0; c < 2; ++c) x[static_cast<std::size_t>(c)] += frac(w[m], total) * y[static_cast<std::size_t>(c)];
      }
      p.push_back(x);
    }
    ++pairs;
    OracleResult r = nesting_oracle_2d(p, q, 40);
    if (!r.witness) continue;
    ++found;
    FactorCheck fc = nested_factorization(p, q, *r.witness);
    o.require(fc.ok() && fc.factors.C.size() == 3, "factorization of pair " + std::to_string(pairs));
  }
  std::vector<Point2> tri{{0, 0}, {1, 0}, {0, 1}};
  Matrix<Rational> a = *exact_rational(slack_matrix(VPolytope({embed2(tri[0]), embed2(tri[1]), embed2(tri[2])}),
                                                    polygon_hrep(tri)));
  bool permutation = a.size() == 3;
  for (std::size_t r = 0; r < a.size(); ++r) {
    int row_nz = 0;
    int col_nz = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      row_nz += a[r][c] != 0;
      col_nz += a[c][r] != 0;
    }
    permutation = permutation && row_nz == 1 && col_nz == 1;
  }
  o.require(permutation, "triangle permutation pattern");
  o.require(nesting_oracle_2d(tri, tri, 40).witness.has_value(), "triangle witness");
  std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  o.require(!nesting_oracle_2d(sq, sq, 40).witness, "square NotFoundAtResolution");
  o.detail << pairs << " pairs at grid 40, " << found << " witnesses, all factorizations exact; triangle permutation; "
           << "square NotFoundAtResolution";
  return o;
}

Outcome criterion_finite_difference(const Certificate& c) {
  Outcome o;
  int agree = 0;
  for (const auto& r : c.checks) {
    if (r.id.rfind("dpsi.fd.", 0) != 0) continue;
    bool ok = r.status == CheckStatus::Proven && r.precision == 256;
    o.require(ok, r.id);
    agree += ok;
  }
  o.require(agree == 12, "12 central differences");
  o.detail << agree << "/12 central differences at step 1e-8, 256-bit intervals, within enclosure widths";
  return o;
}

Outcome criterion_end_to_end(const Certificate& first, double first_seconds) {
  Outcome o;
  auto t0 = Clock::now();
  Certificate second = run_verify();
  double dt = seconds_since(t0);
  o.require(first.pass && second.pass, "PASS");
  o.require(first_seconds <= 300 && dt <= 300, "runtime");
  o.require(first.dump() == second.dump(), "byte-identical");
  o.detail << "PASS in " << first_seconds << " s and " << dt << " s, certificates byte-identical ("
           << first.dump().size() << " bytes)";
  return o;
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  const Certificate cert = run_verify();
  double verify_seconds = seconds_since(t0);

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 constants reproduction", [] { return criterion_constants(); }},
      {"2 factorization identity", [&] { return criterion_identity(cert); }},
      {"3 sign suite", [&] { return criterion_signs(cert); }},
      {"4 containment chain", [&] { return criterion_chain(cert); }},
      {"5 slack matrix", [&] { return criterion_slack(cert); }},
      {"6 oracle equivalence", [] { return criterion_oracle(); }},
      {"7 numerical-derivative consistency", [&] { return criterion_finite_difference(cert); }},
      {"8 end-to-end", [&] { return criterion_end_to_end(cert, verify_seconds); }},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
