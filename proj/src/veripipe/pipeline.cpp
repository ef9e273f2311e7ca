#include "slackcert/veripipe/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "slackcert/polytope/chain.hpp"
#include "slackcert/witness/checks.hpp"

namespace slackcert {

namespace {

const char* kGroups = "ABCD";

std::string pair_label(int i, int j) { return std::to_string(i + 1) + "." + std::to_string(j + 1); }
std::string f_label(int i, int j) { return "F" + std::to_string(i + 1) + std::to_string(j + 1); }

IPoint ipoint(const IVec5& v) { return IPoint(v.begin(), v.end()); }

nlohmann::ordered_json point_json(const RPoint& x) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& c : x) j.push_back(to_text(c));
  return j;
}

nlohmann::ordered_json intervals_json(const std::vector<Interval>& xs) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& x : xs) j.push_back(x.to_text());
  return j;
}

CheckResult exact_check(std::string id, std::string description, bool holds, CheckStatus on_success) {
  CheckResult r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.status = holds ? on_success : CheckStatus::Failed;
  return r;
}

CheckResult stage_error(const std::string& id, const std::string& description, const std::exception& e) {
  CheckResult r;
  r.id = id;
  r.description = description;
  r.status = CheckStatus::Failed;
  r.witness["error"] = e.what();
  return r;
}

CheckStatus chain_status(const ChainItem& item) {
  if (item.ok) return item.status == CertifiedMembership::OnFacetSymbolic ? CheckStatus::ProvenSymbolic : CheckStatus::Proven;
  if (item.status == CertifiedMembership::Unknown) return CheckStatus::Unknown;
  return CheckStatus::Failed;
}

MultiPoly dot_poly(const std::vector<Rational>& l, const PolyVec5& x) {
  MultiPoly s;
  for (std::size_t k = 0; k < 5; ++k) s += x[k] * l[k];
  return s;
}

MultiPoly dot_poly(const PolyVec5& l, const PolyVec5& x) {
  MultiPoly s;
  for (std::size_t k = 0; k < 5; ++k) s += l[k] * x[k];
  return s;
}

RPoint omega_at(const PointTable& pts, const Rational& q) {
  RationalAssignment at{{Var::t, q}};
  Rational s = pts.omega_sum.evaluate(at).constant_value();
  RPoint x;
  for (const auto& c : pts.omega) x.push_back(c.evaluate(at).constant_value() / s);
  return x;
}

DirectionPoints direction_points(const SynthParams& p) {
  DirectionPoints d;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      for (std::size_t c = 0; c < 5; ++c) d[i][k][c] = p.tetra[i][k][c];
    }
  }
  return d;
}

// Everything the chain needs beyond the synthesis parameters.
struct ChainContext {
  const WitnessModel& model;
  const NumericPoints& np;
  const DeltaGeometry& geo;
};

struct ChainRun {
  HPolytope q;
  ChainReport report;
  std::vector<std::string> p_ids;
};

ChainRun run_chain(const ChainContext& ctx, const SynthParams& p) {
  ChainRun run;
  run.q = facet_enum(VPolytope(q_generators(p)));
  IHPolytope delta;
  for (const auto& f : ctx.geo.facet) delta.facets.push_back(ipoint(f));

  std::vector<ChainPoint> p_points;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      // pi_k . F_ij vanishing identically proves incidence with the facet through Omega
      // and the V's other than V_k; the bottom facet is always evaluated.
      ChainPoint cp{"chain.P-in-Delta." + f_label(i, j), ipoint(ctx.np.F_chart(i, j)), std::vector<bool>(5, false),
                    CertifiedMembership::Inside};
      for (std::size_t k = 0; k < 4; ++k) {
        cp.symbolic_zero[k] = dot_poly(ctx.model.slice.normal[k], ctx.model.points.F[static_cast<std::size_t>(i)]
                                                                            [static_cast<std::size_t>(j)])
                                  .is_zero();
      }
      if (std::find(cp.symbolic_zero.begin(), cp.symbolic_zero.end(), true) != cp.symbolic_zero.end()) {
        cp.expected = CertifiedMembership::OnFacetSymbolic;
      }
      p_points.push_back(std::move(cp));
    }
  }
  p_points.push_back({"chain.P-in-Delta.W", to_interval(p.W), {}, CertifiedMembership::Inside});
  for (int i = 0; i < 4; ++i) {
    p_points.push_back({"chain.P-in-Delta.W" + std::to_string(i + 1), to_interval(p.Wi[static_cast<std::size_t>(i)]), {},
                        CertifiedMembership::Inside});
  }
  for (const auto& cp : p_points) run.p_ids.push_back(cp.id);

  // Q facets through Omega_1 = Omega(q1) and Omega_2 = Omega(q2) contain the whole curve
  // when l . omega(t) is the zero polynomial; V_i's vanishing coordinate is likewise exact.
  std::vector<ChainPoint> delta_vertices;
  ChainPoint omega{"chain.Delta-in-Q.Omega", ipoint(ctx.geo.Omega), {}, CertifiedMembership::Inside};
  for (const auto& l : run.q.facets) omega.symbolic_zero.push_back(dot_poly(l, ctx.model.points.omega).is_zero());
  delta_vertices.push_back(std::move(omega));
  for (std::size_t i = 0; i < 4; ++i) {
    ChainPoint v{"chain.Delta-in-Q.V" + std::to_string(i + 1), ipoint(ctx.geo.V[i]), {}, CertifiedMembership::Inside};
    for (const auto& l : run.q.facets) v.symbolic_zero.push_back(dot_poly(l, ctx.model.slice.V[i]).is_zero());
    delta_vertices.push_back(std::move(v));
  }
  for (auto& v : delta_vertices) {
    if (std::find(v.symbolic_zero.begin(), v.symbolic_zero.end(), true) != v.symbolic_zero.end()) {
      v.expected = CertifiedMembership::OnFacetSymbolic;
    }
  }

  std::vector<TetraPoint> tetra;
  for (std::size_t i = 0; i < 4; ++i) {
    tetra.push_back({"chain.V-in-tetra.V" + std::to_string(i + 1), ipoint(ctx.geo.V[i]), i, p.tetra[i]});
  }
  run.report = containment_chain(p_points, delta, delta_vertices, run.q, tetra);
  return run;
}

nlohmann::ordered_json synth_json(const SynthParams& p) {
  nlohmann::ordered_json j;
  j["eps"] = to_text(p.eps);
  j["denominator"] = p.denominator.get_str();
  j["q1"] = to_text(p.q1);
  j["q2"] = to_text(p.q2);
  j["Omega1"] = point_json(p.Omega1);
  j["Omega2"] = point_json(p.Omega2);
  j["W"] = point_json(p.W);
  auto wi = nlohmann::ordered_json::array();
  for (const auto& w : p.Wi) wi.push_back(point_json(w));
  j["Wi"] = wi;
  auto tet = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) tet[std::string(1, kGroups[k]) + std::to_string(i + 1)] = point_json(p.tetra[i][k]);
  }
  j["tetrahedra"] = tet;
  auto audit = nlohmann::ordered_json::array();
  for (const auto& a : p.audit) audit.push_back({{"eps", to_text(a.eps)}, {"outcome", a.outcome}});
  j["audit"] = audit;
  return j;
}

std::vector<SlackVertex> p_vertices(const WitnessModel& model, const NumericPoints& np, const SynthParams& p) {
  std::vector<SlackVertex> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      auto f = model.points.F_point(i, j);
      out.push_back({f_label(i, j), std::vector<PolyFraction>(f.begin(), f.end()), ipoint(np.F_chart(i, j))});
    }
  }
  out.push_back(rational_vertex("W", p.W));
  for (int i = 0; i < 4; ++i) out.push_back(rational_vertex("W" + std::to_string(i + 1), p.Wi[static_cast<std::size_t>(i)]));
  return out;
}

}  // namespace

const CheckResult* Certificate::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::string> required_check_manifest() {
  std::vector<std::string> ids = {"constants.abc", "constants.tau", "phi.factorization", "phi.specialization",
                                  "phi.double-root", "psi.zero", "delta.orientation", "synth.params"};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) ids.push_back("chain.P-in-Delta." + f_label(i, j));
  }
  ids.push_back("chain.P-in-Delta.W");
  for (int i = 1; i <= 4; ++i) ids.push_back("chain.P-in-Delta.W" + std::to_string(i));
  ids.push_back("chain.Delta-in-Q.Omega");
  for (int i = 1; i <= 4; ++i) ids.push_back("chain.Delta-in-Q.V" + std::to_string(i));
  for (int i = 1; i <= 4; ++i) ids.push_back("chain.V-in-tetra.V" + std::to_string(i));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) ids.push_back("crossing." + pair_label(i, j));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) ids.push_back("dpsi.v." + pair_label(i, j));
  }
  for (int i = 1; i <= 4; ++i) {
    for (int d = 0; d < 4; ++d) ids.push_back(std::string("dpsi.dir.") + kGroups[d] + "." + std::to_string(i));
  }
  ids.insert(ids.end(), {"det.V-Omega.positive", "zeta.nonzero", "phi.second-derivative",
                         "phi.second-derivative.crosscheck"});
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) ids.push_back("psi.local-decrease." + pair_label(i, j));
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) ids.push_back("dpsi.fd." + pair_label(i, j));
  }
  ids.insert(ids.end(), {"slack.nonnegative", "slack.shape", "slack.rank"});
  return ids;
}

Certificate run_verify(const VerifyConfig& config) {
  Certificate cert;
  cert.config = config;
  auto add = [&cert](CheckResult r) { cert.checks.push_back(std::move(r)); };
  const long cap = config.precision_max;
  const long base = std::min<long>(default_ladder().front(), cap);

  const MultiPoly pi = build_pi(config.pi_tamper);
  ConstantsLadder ladder(pi);

  const Constants* k = nullptr;
  try {
    k = &ladder.at(base);
    CheckResult abc = exact_check("constants.abc", "(alpha, beta, gamma) is the unique zero of the square conditions in its box",
                                  k->abc.unique, CheckStatus::Proven);
    abc.precision = k->bits;
    abc.witness["alpha"] = interval_json(k->alpha());
    abc.witness["beta"] = interval_json(k->beta());
    abc.witness["gamma"] = interval_json(k->gamma());
    abc.witness["method"] = "Krawczyk contraction";
    add(std::move(abc));
    CheckResult tau = exact_check("constants.tau", "tau is the only root of u in (0, 1)",
                                  k->tau.unique && k->tau.sole_in_bracket, CheckStatus::Proven);
    tau.precision = k->bits;
    tau.witness["tau"] = interval_json(k->tau.root);
    add(std::move(tau));
    cert.constants["width"] = to_text(k->width);
    cert.constants["bits"] = k->bits;
    cert.constants["alpha"] = interval_json(k->alpha());
    cert.constants["beta"] = interval_json(k->beta());
    cert.constants["gamma"] = interval_json(k->gamma());
    cert.constants["tau"] = interval_json(k->tau.root);
    cert.constants["u"] = {interval_json(k->u[0]), interval_json(k->u[1]), interval_json(k->u[2])};
    cert.constants["conditions"] = square_conditions_form();
  } catch (const std::exception& e) {
    k = nullptr;
    add(stage_error("constants.abc", "(alpha, beta, gamma) is the unique zero of the square conditions in its box", e));
  }

  std::optional<WitnessModel> model;
  try {
    model = build_model(pi);
    const Factorization& f = model->factor;
    bool proven = f.status == IdentityStatus::IdentityProven;
    CheckResult fac = exact_check("phi.factorization", "phi = zeta * pi with zero remainder", proven,
                                  CheckStatus::ProvenSymbolic);
    fac.witness["identity"] = to_string(f.status);
    fac.witness["phi_num_terms"] = model->phi_num.size();
    fac.witness["phi_den_terms"] = model->phi_den.size();
    fac.witness["zeta_num_terms"] = f.zeta_num.size();
    fac.witness["zeta_num_sha256"] = sha256_hex(f.zeta_num.to_string());
    fac.witness["remainder"] = proven ? std::string("0") : f.remainder.to_string();
    if (!proven) fac.witness["remainder_denominator"] = f.remainder_denom.to_string();
    add(std::move(fac));
    CheckResult special = exact_check("phi.specialization",
                                   "at a = b = c = 0 an independent univariate construction reproduces zeta * pi",
                                   f.specialization_agrees, CheckStatus::ProvenSymbolic);
    special.witness["phi"] = f.specialized_phi.to_string();
    special.witness["zeta_times_pi"] = f.specialized_product.to_string();
    add(std::move(special));
  } catch (const std::exception& e) {
    add(stage_error("phi.factorization", "phi = zeta * pi with zero remainder", e));
  }

  auto finish = [&cert]() {
    std::set<std::string> present;
    for (const auto& c : cert.checks) present.insert(c.id);
    for (const auto& id : required_check_manifest()) {
      if (present.count(id) != 0) continue;
      CheckResult r;
      r.id = id;
      r.description = "not reached";
      r.status = CheckStatus::Unknown;
      cert.checks.push_back(std::move(r));
    }
    cert.failing.clear();
    for (const auto& c : cert.checks) {
      if (c.required && !c.passes()) cert.failing.push_back(c.id);
    }
    cert.pass = cert.failing.empty();
  };
  if (k == nullptr || !model) {
    finish();
    return cert;
  }

  DoubleRootReport dr = double_root(pi, ladder, cap);
  CheckResult drc = from_sign(dr.second);
  if (!dr.holds() && drc.status == CheckStatus::Proven) drc.status = CheckStatus::Failed;
  drc.witness["pi"] = interval_json(dr.value);
  drc.witness["pi_prime"] = interval_json(dr.first);
  add(drc);

  {
    CheckResult z;
    z.id = "psi.zero";
    z.description = "Psi(Omega, 0) = 0, since phi = zeta * pi and pi(tau) = 0";
    const bool identity = model->factor.status == IdentityStatus::IdentityProven;
    z.status = identity && dr.holds() && k->tau.unique ? CheckStatus::ProvenSymbolic : CheckStatus::Unknown;
    z.witness["identity"] = to_string(model->factor.status);
    z.witness["tau_root_of_u"] = k->tau.unique;
    try {
      Interval psi = psi_at_omega(*model, *k);
      z.witness["enclosure"] = interval_json(psi);
      if (!psi.contains_zero()) z.status = CheckStatus::Failed;
    } catch (const std::exception& e) {
      z.witness["error"] = e.what();
    }
    add(std::move(z));
  }

  NumericPoints np = numeric_points(model->points, *k);
  DeltaGeometry geo = delta_geometry(np);
  {
    CheckResult o = exact_check("delta.orientation", "every facet normal of Delta is oriented by a certified margin",
                                geo.oriented, CheckStatus::Proven);
    o.precision = np.bits;
    o.witness["margins"] = intervals_json(std::vector<Interval>(geo.orientation_margin.begin(), geo.orientation_margin.end()));
    add(std::move(o));
  }
  if (!geo.oriented) {
    finish();
    return cert;
  }

  SynthInput in;
  in.tau = k->tau.root;
  in.Omega = ipoint(geo.Omega);
  for (std::size_t i = 0; i < 4; ++i) in.V[i] = ipoint(geo.V[i]);
  for (const auto& f : geo.facet) in.delta.facets.push_back(ipoint(f));
  const PointTable& pts = model->points;
  in.omega_curve = [&pts](const Rational& q) { return omega_at(pts, q); };

  ChainContext ctx{*model, np, geo};
  std::optional<ChainRun> chain;
  std::optional<DerivReport> deriv;
  SynthValidator validator = [&](const SynthParams& p) -> std::optional<std::string> {
    try {
      chain = run_chain(ctx, p);
    } catch (const std::exception& e) {
      chain.reset();
      return std::string("chain: ") + e.what();
    }
    if (!chain->report.ok()) {
      std::string msg = "chain failed:";
      for (const auto& id : chain->report.failing()) msg += " " + id;
      return msg;
    }
    deriv = check_derivatives(*model, ladder, direction_points(p), cap);
    std::string msg;
    for (const auto& c : deriv->checks) {
      if (c.id.rfind("dpsi.dir.", 0) == 0 && !c.satisfied()) msg += " " + c.id;
    }
    if (!msg.empty()) return "directional checks failed:" + msg;
    return std::nullopt;
  };

  try {
    cert.synth = synth_params(in, config.eps, validator);
    CheckResult s = exact_check("synth.params", "P and Q parameters satisfy every invariant and the containment chain",
                                true, CheckStatus::Proven);
    s.witness["eps"] = to_text(cert.synth->eps);
    s.witness["attempts"] = cert.synth->audit.size();
    add(std::move(s));
  } catch (const std::exception& e) {
    add(stage_error("synth.params", "P and Q parameters satisfy every invariant and the containment chain", e));
    chain.reset();
    deriv.reset();
  }

  if (cert.synth && chain) {
    for (const auto& item : chain->report.items) {
      CheckResult r;
      r.id = item.id;
      r.description = "certified membership: " + to_string(item.status);
      r.status = chain_status(item);
      r.precision = np.bits;
      r.witness["status"] = to_string(item.status);
      r.witness["values"] = intervals_json(item.values);
      add(std::move(r));
    }
  }

  for (const auto& c : facet_crossing(*model, ladder, cap)) {
    CheckResult r = from_sign(c.sign);
    r.witness["incident_at_zero"] = c.incident_at_zero;
    r.witness["linear_in_v"] = c.linear_in_v;
    if (r.status == CheckStatus::Proven && !(c.incident_at_zero && c.linear_in_v)) r.status = CheckStatus::Failed;
    add(std::move(r));
  }

  if (deriv) {
    for (const auto& c : deriv->checks) add(from_sign(c));
    add(from_sign(deriv->zeta));
    add(from_sign(deriv->phi_second));
    CheckResult cc = from_sign(deriv->phi_second_factored);
    cc.witness["agrees_with"] = deriv->phi_second.id;
    cc.witness["agrees"] = deriv->cross_check_agrees;
    if (!deriv->cross_check_agrees && cc.status == CheckStatus::Proven) cc.status = CheckStatus::Failed;
    add(std::move(cc));
  }

  for (const auto& c : local_decrease(*model, ladder, Rational(1, 1000000), cap)) {
    CheckResult r = from_sign(c);
    r.witness["delta"] = "1/1000000";
    add(std::move(r));
  }

  const long fd_bits = 256;
  if (cap >= fd_bits) {
    for (const auto& f : finite_difference_check(*model, ladder.at(128), Rational(1, 100000000), fd_bits)) {
      CheckResult r = exact_check("dpsi.fd." + std::to_string(f.i) + "." + std::to_string(f.j),
                                  "central difference at step 1e-8 matches the jet derivative in v_" +
                                      std::to_string(f.i) + std::to_string(f.j),
                                  f.agrees, CheckStatus::Proven);
      r.precision = fd_bits;
      r.witness["symbolic"] = interval_json(f.symbolic);
      r.witness["central"] = interval_json(f.central);
      r.witness["truncation"] = interval_json(f.remainder);
      add(std::move(r));
    }
  } else {
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 3; ++j) {
        CheckResult r;
        r.id = "dpsi.fd." + std::to_string(i) + "." + std::to_string(j);
        r.description = "central difference check needs 256-bit intervals, above the precision cap";
        r.status = CheckStatus::Unknown;
        add(std::move(r));
      }
    }
  }

  auto bottom = bottom_incidence(*model, ladder, cap);
  for (const auto& c : bottom) add(from_sign(c));
  if (chain) {
    CheckResult h;
    h.id = "membership.H-in-P";
    h.description = "H against P: H lies on the bottom facet of Delta, which every generator of P strictly clears";
    h.required = false;
    h.status = CheckStatus::Informational;
    bool separated = true;
    Interval least;
    bool first = true;
    for (const auto& item : chain->report.items) {
      if (item.id.rfind("chain.P-in-Delta.", 0) != 0 || item.values.size() < 5) continue;
      separated = separated && item.values[4].positive();
      least = first || item.values[4].lo() < least.lo() ? item.values[4] : least;
      first = false;
    }
    h.witness["result"] = separated ? "NotFound" : "Undetermined";
    h.witness["least_bottom_slack"] = interval_json(least);
    add(std::move(h));
  }
  {
    // Recorded so readers see it was not machine-checked; it needs algebraic number theory.
    CheckResult f;
    f.id = "claim.tau-outside-field";
    f.description = "tau does not lie in Q(alpha, beta, gamma); not verified by this tool";
    f.required = false;
    f.status = CheckStatus::Informational;
    f.witness["verified"] = false;
    add(std::move(f));
  }

  if (cert.synth && chain) {
    try {
      std::ostringstream prov;
      prov << "rows: facets of Q in facet_enum order; columns: F11..F43, W, W1..W4; "
           << "entry (j, i) = f_j(v_i); eps = " << to_text(cert.synth->eps);
      SlackMatrix a = slack_matrix(p_vertices(*model, np, *cert.synth), chain->q, prov.str());
      Interval least;
      bool first = true;
      for (const auto& row : a.entries) {
        for (const auto& e : row) {
          if (e.exact.is_zero()) continue;
          least = first || e.enclosure.lo() < least.lo() ? e.enclosure : least;
          first = false;
        }
      }
      CheckResult nn = exact_check("slack.nonnegative", "every slack entry is exactly 0 or certified positive",
                                   a.certified_nonnegative(), CheckStatus::Proven);
      nn.precision = np.bits;
      nn.witness["least_nonzero_entry"] = interval_json(least);
      add(std::move(nn));
      CheckResult shape = exact_check("slack.shape", "17 columns and one row per facet of Q",
                                      a.cols() == 17 && a.rows() == chain->q.facets.size(), CheckStatus::Proven);
      shape.witness["rows"] = a.rows();
      shape.witness["cols"] = a.cols();
      shape.witness["q_facets"] = chain->q.facets.size();
      add(std::move(shape));
      RankCertificate rc = rank_certify(a, 5);
      CheckResult rank = exact_check("slack.rank", "rank is exactly 5: a nonzero 5x5 minor and a rank-5 factorization",
                                     rc.exact() && rc.lower == 5, CheckStatus::Proven);
      rank.witness["lower"] = rc.lower;
      rank.witness["upper"] = rc.upper;
      rank.witness["minor_rows"] = rc.minor_rows;
      rank.witness["minor_cols"] = rc.minor_cols;
      rank.witness["minor"] = interval_json(rc.minor);
      rank.witness["minor_exact"] = rc.lower_exact;
      rank.witness["upper_proof"] = rc.upper_proof;
      add(std::move(rank));
      cert.digests["slack.csv"] = sha256_hex(slack_csv(a));
      cert.digests["slack.exact"] = sha256_hex(slack_sidecar(a));
      cert.slack = std::move(a);
    } catch (const std::exception& e) {
      add(stage_error("slack.nonnegative", "every slack entry is exactly 0 or certified positive", e));
    }
  }

  finish();
  return cert;
}

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  nlohmann::ordered_json cfg;
  cfg["eps"] = to_text(config.eps);
  cfg["precision_max"] = config.precision_max;
  auto ladder = nlohmann::ordered_json::array();
  for (long r : default_ladder()) {
    if (r <= config.precision_max) ladder.push_back(r);
  }
  cfg["precision_ladder"] = ladder;
  cfg["rounding"] = {{"denominator", "max(10^6, 10^k >= 1000/eps)"}, {"interior_weight", "eps/4"},
                     {"tetrahedron_circumradius", "sqrt(3)/8 eps"}};
  cfg["pi_tamper"] = config.pi_tamper.to_string();
  j["config"] = cfg;
  j["constants"] = constants;
  auto cs = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["id"] = c.id;
    r["description"] = c.description;
    r["status"] = to_string(c.status);
    r["required"] = c.required;
    r["precision"] = c.precision;
    r["witness"] = c.witness;
    cs.push_back(std::move(r));
  }
  j["checks"] = cs;
  j["synth"] = synth ? synth_json(*synth) : nlohmann::ordered_json(nullptr);
  if (slack) {
    j["slack"] = {{"rows", slack->rows()}, {"cols", slack->cols()}, {"provenance", slack->provenance}};
  } else {
    j["slack"] = nullptr;
  }
  j["digests"] = digests;
  j["status"] = pass ? "PASS" : "FAIL";
  j["failing"] = failing;
  return j;
}

std::string Certificate::dump() const { return to_json().dump(2) + "\n"; }

std::string Certificate::render_text() const {
  std::ostringstream out;
  out << kToolName << " " << kToolVersion << ": " << (pass ? "PASS" : "FAIL") << "\n";
  out << "eps " << (synth ? to_text(synth->eps) : std::string("-")) << ", precision-max " << config.precision_max
      << "\n";
  std::size_t passed = 0;
  std::size_t required = 0;
  for (const auto& c : checks) {
    out << "  " << to_string(c.status) << "  " << c.id << "\n";
    if (c.required) {
      ++required;
      if (c.passes()) ++passed;
    }
  }
  out << passed << " of " << required << " required checks proven\n";
  if (!failing.empty()) {
    out << "failing:";
    for (const auto& id : failing) out << " " << id;
    out << "\n";
  }
  return out.str();
}

ConstantsListing list_constants(int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be positive");
  Rational width = 1 / Rational(pow_int(Rational(10), static_cast<unsigned>(digits + 2)));
  ConstantsListing out{solve_constants(build_pi(), width), {}};
  auto line = [&](const std::string& name, const Interval& x) {
    std::string lo = to_decimal(x.lo(), digits);
    std::string hi = to_decimal(x.hi(), digits);
    std::size_t n = 0;
    while (n < lo.size() && n < hi.size() && lo[n] == hi[n]) ++n;
    char w[32];
    std::snprintf(w, sizeof w, "%.3e", x.width().get_d());
    out.lines.push_back(name + " " + lo.substr(0, n) + "...  enclosure width " + w);
  };
  line("alpha", out.constants.alpha());
  line("beta ", out.constants.beta());
  line("gamma", out.constants.gamma());
  line("tau  ", out.constants.tau.root);
  return out;
}

std::string dump_model(const WitnessModel& m) {
  std::ostringstream out;
  auto vec = [&out](const std::string& name, const PolyVec5& v) {
    for (std::size_t k = 0; k < 5; ++k) out << name << "[" << k + 1 << "] = " << v[k].to_string() << "\n";
  };
  out << "pi = " << m.pi.to_string() << "\n";
  for (std::size_t i = 0; i < 3; ++i) out << "s" << i + 1 << " = " << m.square.s[i].to_string() << "\n";
  vec("omega", m.points.omega);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 3; ++j) {
      vec(f_label(i, j), m.points.F[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  for (std::size_t i = 0; i < 4; ++i) vec("normal" + std::to_string(i + 1), m.normals[i]);
  for (std::size_t i = 0; i < 4; ++i) vec("slice.V" + std::to_string(i + 1), m.slice.V[i]);
  out << "phi_num = " << m.phi_num.to_string() << "\n";
  out << "phi_den = " << m.phi_den.to_string() << "\n";
  out << "omega_det_num = " << m.omega_det_num.to_string() << "\n";
  out << "identity = " << to_string(m.factor.status) << "\n";
  out << "zeta_num = " << m.factor.zeta_num.to_string() << "\n";
  return out.str();
}

}  // namespace slackcert
