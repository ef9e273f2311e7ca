#include "slackcert/slackbridge/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "slackcert/slackbridge/slack.hpp"

namespace slackcert {

RPoint embed2(const Point2& p) { return {p[0], p[1], 1 - p[0] - p[1]}; }

HPolytope polygon_hrep(const std::vector<Point2>& q) {
  std::vector<RPoint> pts;
  for (const auto& x : q) pts.push_back(embed2(x));
  return facet_enum(VPolytope(pts));
}

namespace {

Rational orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool inside(const HPolytope& h, const Point2& x) {
  auto e = embed2(x);
  for (const auto& f : h.facets) {
    if (evaluate(f, e) < 0) return false;
  }
  return true;
}

}  // namespace

OracleResult nesting_oracle_2d(const std::vector<Point2>& p, const std::vector<Point2>& q, int grid) {
  if (grid < 1) throw std::invalid_argument("grid must be positive");
  const HPolytope qh = polygon_hrep(q);
  for (const auto& x : p) {
    if (!inside(qh, x)) throw std::invalid_argument("nesting_oracle_2d: P is not contained in Q");
  }
  Rational xmin = q[0][0], xmax = q[0][0], ymin = q[0][1], ymax = q[0][1];
  for (const auto& x : q) {
    xmin = std::min(xmin, x[0]);
    xmax = std::max(xmax, x[0]);
    ymin = std::min(ymin, x[1]);
    ymax = std::max(ymax, x[1]);
  }
  std::vector<Point2> g;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) {
      Rational si(i, grid);
      Rational sj(j, grid);
      si.canonicalize();  // mpq arithmetic requires canonical operands
      sj.canonicalize();
      Point2 x{xmin + (xmax - xmin) * si, ymin + (ymax - ymin) * sj};
      if (inside(qh, x)) g.push_back(x);
    }
  }
  OracleResult out;
  out.grid_points_in_q = g.size();
  const std::size_t n = g.size();
  const std::size_t words = (n + 63) / 64;
  // edge[a] has bit b when a -> b is admissible; into[a] has bit c when c -> a is.
  std::vector<std::vector<std::uint64_t>> edge(n, std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<std::uint64_t>> into(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      bool ok = true;
      for (const auto& x : p) {
        if (orient(g[a], g[b], x) < 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        edge[a][b / 64] |= std::uint64_t{1} << (b % 64);
        into[b][a / 64] |= std::uint64_t{1} << (a % 64);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t bw = 0; bw < words; ++bw) {
      for (std::uint64_t bits = edge[a][bw]; bits; bits &= bits - 1) {
        std::size_t b = bw * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        for (std::size_t cw = 0; cw < words; ++cw) {
          for (std::uint64_t cand = edge[b][cw] & into[a][cw]; cand; cand &= cand - 1) {
            std::size_t c = cw * 64 + static_cast<std::size_t>(std::countr_zero(cand));
            if (orient(g[a], g[b], g[c]) <= 0) continue;
            NestingWitness w;
            w.vertices = {g[a], g[b], g[c]};
            w.p_inside = true;
            w.inside_q = true;
            out.witness = w;
            return out;
          }
        }
      }
    }
  }
  return out;
}

FactorCheck nested_factorization(const std::vector<Point2>& p, const std::vector<Point2>& q, const NestingWitness& w) {
  const HPolytope qh = polygon_hrep(q);
  FactorCheck fc;
  std::vector<RPoint> pe;
  for (const auto& x : p) pe.push_back(embed2(x));
  for (const auto& f : qh.facets) {
    std::vector<Rational> row;
    for (const auto& x : pe) row.push_back(evaluate(f, x));
    fc.A.push_back(std::move(row));
    std::vector<Rational> brow;
    for (const auto& v : w.vertices) brow.push_back(evaluate(f, embed2(v)));
    fc.factors.B.push_back(std::move(brow));
  }
  // Columns of the embedded triangle vertices; barycentric coordinates solve M c = x.
  Matrix<Rational> m(3, std::vector<Rational>(3));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m[r][c] = embed2(w.vertices[c])[r];
  }
  auto inv = inverse_exact(m);
  if (!inv) throw DegenerateError("nesting triangle is degenerate");
  fc.factors.C.assign(3, std::vector<Rational>(pe.size(), 0));
  for (std::size_t i = 0; i < pe.size(); ++i) {
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) fc.factors.C[r][i] += (*inv)[r][c] * pe[i][c];
    }
  }
  fc.nonnegative = true;
  for (const auto& row : fc.factors.B) {
    for (const auto& x : row) fc.nonnegative = fc.nonnegative && x >= 0;
  }
  for (const auto& row : fc.factors.C) {
    for (const auto& x : row) fc.nonnegative = fc.nonnegative && x >= 0;
  }
  fc.product_matches = true;
  for (std::size_t r = 0; r < fc.A.size(); ++r) {
    for (std::size_t i = 0; i < pe.size(); ++i) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += fc.factors.B[r][k] * fc.factors.C[k][i];
      fc.product_matches = fc.product_matches && s == fc.A[r][i];
    }
  }
  return fc;
}

}  // namespace slackcert
