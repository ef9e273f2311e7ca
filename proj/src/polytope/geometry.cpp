#include "slackcert/polytope/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace slackcert {

VPolytope::VPolytope(std::vector<RPoint> points) {
  if (points.empty()) throw std::invalid_argument("VPolytope needs at least one point");
  const std::size_t n = points[0].size();
  std::set<RPoint> seen;
  for (auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("VPolytope: points of different sizes");
    Rational s = 0;
    for (const auto& x : p) s += x;
    if (s != 1) throw std::invalid_argument("VPolytope: point outside the chart");
    if (seen.insert(p).second) points_.push_back(std::move(p));
  }
}

IPoint to_interval(const RPoint& x) { return IPoint(x.begin(), x.end()); }

IHPolytope to_interval(const HPolytope& h) {
  IHPolytope out;
  for (const auto& f : h.facets) out.facets.emplace_back(f.begin(), f.end());
  return out;
}

Rational evaluate(const std::vector<Rational>& l, const RPoint& x) {
  if (l.size() != x.size()) throw std::invalid_argument("evaluate: size mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < l.size(); ++k) s += l[k] * x[k];
  return s;
}

Interval evaluate(const std::vector<Interval>& l, const IPoint& x) {
  if (l.size() != x.size()) throw std::invalid_argument("evaluate: size mismatch");
  Interval s(0);
  for (std::size_t k = 0; k < l.size(); ++k) s += l[k] * x[k];
  return s;
}

std::vector<Rational> normalize_functional(std::vector<Rational> l) {
  Rational m = 0;
  for (const auto& x : l) m = std::max(m, Rational(abs(x)));
  if (m == 0) throw DegenerateError("zero functional");
  for (auto& x : l) x /= m;
  return l;
}

HPolytope simplex_hrep(const std::vector<RPoint>& vertices) {
  const std::size_t n = vertices.size();
  HPolytope out;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix<Rational> rows;
    for (std::size_t r = 0; r < n; ++r) {
      if (r != k) rows.push_back(vertices[r]);
    }
    if (rows.empty() || rows[0].size() != n) throw std::invalid_argument("simplex_hrep: need d+1 points with d+1 coords");
    auto l = cross_normal(rows);
    Rational s = evaluate(l, vertices[k]);
    if (s == 0) throw DegenerateError("simplex vertices are affinely dependent");
    if (s < 0) {
      for (auto& x : l) x = -x;
    }
    out.facets.push_back(normalize_functional(std::move(l)));
  }
  return out;
}

IHPolytope simplex_hrep(const std::vector<IPoint>& vertices) {
  const std::size_t n = vertices.size();
  IHPolytope out;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix<Interval> rows;
    for (std::size_t r = 0; r < n; ++r) {
      if (r != k) rows.push_back(vertices[r]);
    }
    auto l = cross_normal(rows);
    Interval s = evaluate(l, vertices[k]);
    if (s.contains_zero()) throw DegenerateError("simplex orientation not certified");
    if (s.negative()) {
      for (auto& x : l) x = -x;
    }
    out.facets.push_back(std::move(l));
  }
  return out;
}

HPolytope facet_enum(const VPolytope& vp) {
  const auto& pts = vp.points();
  const std::size_t n = vp.coords();
  const std::size_t d = n - 1;
  if (pts.size() < n) throw DegenerateError("too few generators for a full-dimensional polytope");
  {
    Matrix<Rational> m(pts.begin(), pts.end());
    if (rank_exact(m) < n) throw DegenerateError("generators do not span the chart");
  }
  HPolytope out;
  std::set<std::vector<bool>> incidences;
  std::vector<std::size_t> idx(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t start) {
    if (depth == d) {
      Matrix<Rational> rows;
      for (auto i : idx) rows.push_back(pts[i]);
      auto l = cross_normal(rows);
      bool any = false;
      for (const auto& x : l) any = any || x != 0;
      if (!any) return;
      bool pos = false;
      bool neg = false;
      std::vector<bool> inc(pts.size());
      for (std::size_t p = 0; p < pts.size(); ++p) {
        Rational s = evaluate(l, pts[p]);
        inc[p] = s == 0;
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (pos && neg) return;
      if (!incidences.insert(inc).second) return;
      if (neg) {
        for (auto& x : l) x = -x;
      }
      out.facets.push_back(normalize_functional(std::move(l)));
      return;
    }
    for (std::size_t i = start; i + (d - depth) <= pts.size(); ++i) {
      idx[depth] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

std::vector<RPoint> vertices_of_simplex(const HPolytope& h) {
  const std::size_t n = h.facets.size();
  std::vector<RPoint> out;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix<Rational> m;
    std::vector<Rational> rhs;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      m.push_back(h.facets[r]);
      rhs.push_back(0);
    }
    m.emplace_back(h.coords(), Rational(1));
    rhs.push_back(1);
    auto x = solve_exact(m, rhs);
    if (!x || rank_exact(m) < h.coords()) throw DegenerateError("facets do not meet in a single point");
    out.push_back(*x);
  }
  return out;
}

namespace {

std::string format_rows(char tag, std::size_t coords, const std::vector<std::vector<Rational>>& rows) {
  std::ostringstream os;
  os << tag << ' ' << coords << '\n';
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) os << (k ? " " : "") << to_text(r[k]);
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<Rational>> parse_rows(const std::string& text, char tag) {
  std::istringstream is(text);
  std::string line;
  std::size_t coords = 0;
  bool header = false;
  std::vector<std::vector<Rational>> rows;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 2 || toks[0].size() != 1 || toks[0][0] != tag) {
        throw std::invalid_argument(std::string("expected header '") + tag + " <coords>'");
      }
      coords = std::stoul(toks[1]);
      header = true;
      continue;
    }
    if (toks.size() != coords) throw std::invalid_argument("wrong number of entries in row: " + line);
    std::vector<Rational> row;
    for (const auto& t : toks) row.push_back(parse_rational(t));
    rows.push_back(std::move(row));
  }
  if (!header) throw std::invalid_argument("missing header");
  return rows;
}

}  // namespace

std::string format_vpolytope(const VPolytope& vp) { return format_rows('V', vp.coords(), vp.points()); }

std::string format_hpolytope(const HPolytope& hp) { return format_rows('H', hp.coords(), hp.facets); }

VPolytope parse_vpolytope(const std::string& text) { return VPolytope(parse_rows(text, 'V')); }

HPolytope parse_hpolytope(const std::string& text) {
  HPolytope h;
  h.facets = parse_rows(text, 'H');
  for (const auto& f : h.facets) {
    if (std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == 0; })) {
      throw std::invalid_argument("identically zero inequality");
    }
  }
  return h;
}

}  // namespace slackcert
