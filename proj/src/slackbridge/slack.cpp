#include "slackcert/slackbridge/slack.hpp"

#include <cmath>
#include <sstream>

namespace slackcert {

SlackVertex rational_vertex(std::string id, const RPoint& x) {
  SlackVertex v;
  v.id = std::move(id);
  for (const auto& c : x) {
    v.exact.emplace_back(MultiPoly(c));
    v.enclosure.emplace_back(c);
  }
  return v;
}

bool SlackEntry::certified_nonnegative() const { return exact.is_zero() || enclosure.positive(); }

bool SlackMatrix::certified_nonnegative() const {
  for (const auto& row : entries) {
    for (const auto& e : row) {
      if (!e.certified_nonnegative()) return false;
    }
  }
  return true;
}

SlackMatrix slack_matrix(const std::vector<SlackVertex>& p, const HPolytope& q, std::string provenance) {
  SlackMatrix a;
  a.facets = q;
  a.vertices = p;
  a.provenance = std::move(provenance);
  for (std::size_t j = 0; j < q.facets.size(); ++j) {
    const auto& l = q.facets[j];
    std::vector<SlackEntry> row;
    for (const auto& v : p) {
      if (v.exact.size() != l.size()) throw std::invalid_argument("slack_matrix: dimension mismatch");
      SlackEntry e;
      Interval s(0);
      for (std::size_t k = 0; k < l.size(); ++k) {
        if (l[k] == 0) continue;
        e.exact = e.exact + PolyFraction(MultiPoly(l[k])) * v.exact[k];
        s += Interval(l[k]) * v.enclosure[k];
      }
      e.enclosure = e.exact.is_zero() ? Interval(0) : s;
      if (e.exact.num().is_constant() && e.exact.den().is_constant()) {
        e.enclosure = Interval(e.exact.num().constant_value() / e.exact.den().constant_value());
      }
      if (e.enclosure.negative()) {
        throw ContainmentViolation("vertex " + v.id + " violates facet " + std::to_string(j + 1));
      }
      row.push_back(std::move(e));
    }
    a.entries.push_back(std::move(row));
  }
  return a;
}

SlackMatrix slack_matrix(const VPolytope& p, const HPolytope& q, std::string provenance) {
  std::vector<SlackVertex> vs;
  for (std::size_t i = 0; i < p.points().size(); ++i) vs.push_back(rational_vertex("v" + std::to_string(i + 1), p.points()[i]));
  return slack_matrix(vs, q, std::move(provenance));
}

namespace {

bool is_rational(const PolyFraction& f) { return f.num().is_constant() && f.den().is_constant(); }

Rational rational_value(const PolyFraction& f) { return f.num().constant_value() / f.den().constant_value(); }

}  // namespace

std::optional<Matrix<Rational>> exact_rational(const SlackMatrix& a) {
  Matrix<Rational> m;
  for (const auto& row : a.entries) {
    std::vector<Rational> r;
    for (const auto& e : row) {
      if (!is_rational(e.exact)) return std::nullopt;
      r.push_back(rational_value(e.exact));
    }
    m.push_back(std::move(r));
  }
  return m;
}

RecoveredPoint recover_point(const std::vector<Rational>& b, const HPolytope& q) {
  if (b.size() != q.facets.size()) throw std::invalid_argument("recover_point: slack vector has the wrong length");
  if (rank_exact(q.facets) < q.coords()) throw std::domain_error("recover_point: facets do not determine points");
  auto y = solve_exact(q.facets, b);
  if (!y) throw std::domain_error("recover_point: vector is not proportional to any slack vector");
  Rational s = 0;
  for (const auto& c : *y) s += c;
  if (s == 0) throw std::domain_error("recover_point: vector corresponds to no chart point");
  RecoveredPoint out;
  for (auto& c : *y) out.x.push_back(c / s);
  out.inside = true;
  for (const auto& l : q.facets) out.inside = out.inside && evaluate(l, out.x) >= 0;
  return out;
}

RankCertificate rank_certify(const Matrix<Rational>& a) {
  RankCertificate cert;
  if (a.empty()) return cert;
  Matrix<Rational> work = a;
  auto cols = row_reduce(work);
  Matrix<Rational> transposed(cols.size(), std::vector<Rational>(a.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t r = 0; r < a.size(); ++r) transposed[c][r] = a[r][cols[c]];
  }
  auto rows = row_reduce(transposed);
  cert.lower = cert.upper = cols.size();
  cert.minor_rows = rows;
  cert.minor_cols = cols;
  Matrix<Rational> minor;
  for (auto r : rows) {
    std::vector<Rational> row;
    for (auto c : cols) row.push_back(a[r][c]);
    minor.push_back(std::move(row));
  }
  cert.minor = Interval(det_bareiss(minor));
  cert.lower_exact = true;
  cert.upper_proof = "exact row reduction";
  return cert;
}

namespace {

// Full pivoting on midpoints proposes rows and columns for a nonsingular minor.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> greedy_minor(const SlackMatrix& a, std::size_t k) {
  std::vector<std::vector<double>> m;
  for (const auto& row : a.entries) {
    std::vector<double> r;
    for (const auto& e : row) r.push_back(e.enclosure.mid().get_d());
    m.push_back(std::move(r));
  }
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<bool> row_used(m.size(), false);
  std::vector<bool> col_used(a.cols(), false);
  for (std::size_t step = 0; step < k; ++step) {
    double best = 0;
    std::size_t br = 0;
    std::size_t bc = 0;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < m[r].size(); ++c) {
        if (col_used[c]) continue;
        if (std::abs(m[r][c]) > best) {
          best = std::abs(m[r][c]);
          br = r;
          bc = c;
        }
      }
    }
    if (best == 0) break;
    row_used[br] = col_used[bc] = true;
    rows.push_back(br);
    cols.push_back(bc);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (row_used[r]) continue;
      double f = m[r][bc] / m[br][bc];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[br][c];
    }
  }
  return {rows, cols};
}

}  // namespace

RankCertificate rank_certify(const SlackMatrix& a, std::size_t expected) {
  RankCertificate cert;
  // Lower bound, preferring an exact minor among rational columns.
  std::vector<std::size_t> rational_cols;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    bool ok = true;
    for (std::size_t r = 0; r < a.rows() && ok; ++r) ok = is_rational(a.entries[r][c].exact);
    if (ok) rational_cols.push_back(c);
  }
  if (!rational_cols.empty()) {
    Matrix<Rational> sub;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      std::vector<Rational> row;
      for (auto c : rational_cols) row.push_back(rational_value(a.entries[r][c].exact));
      sub.push_back(std::move(row));
    }
    auto exact = rank_certify(sub);
    if (exact.lower >= expected) {
      cert.lower = exact.lower;
      cert.minor_rows = exact.minor_rows;
      for (auto c : exact.minor_cols) cert.minor_cols.push_back(rational_cols[c]);
      cert.minor = exact.minor;
      cert.lower_exact = true;
    }
  }
  if (!cert.lower_exact) {
    auto [rows, cols] = greedy_minor(a, expected);
    Matrix<Interval> minor;
    for (auto r : rows) {
      std::vector<Interval> row;
      for (auto c : cols) row.push_back(a.entries[r][c].enclosure);
      minor.push_back(std::move(row));
    }
    Interval d = rows.empty() ? Interval(0) : det_laplace(minor);
    if (!d.contains_zero()) {
      cert.lower = rows.size();
      cert.minor_rows = rows;
      cert.minor_cols = cols;
      cert.minor = d;
    }
  }
  // Upper bound: every entry is the facet functional applied to the vertex coordinates.
  bool factorization_holds = true;
  for (std::size_t r = 0; r < a.rows() && factorization_holds; ++r) {
    for (std::size_t c = 0; c < a.cols() && factorization_holds; ++c) {
      PolyFraction s;
      for (std::size_t k = 0; k < a.facets.coords(); ++k) {
        s = s + PolyFraction(MultiPoly(a.facets.facets[r][k])) * a.vertices[c].exact[k];
      }
      factorization_holds = equivalent(s, a.entries[r][c].exact);
    }
  }
  if (factorization_holds) {
    cert.upper = std::min(rank_exact(a.facets.facets), a.facets.coords());
    std::ostringstream os;
    os << "A = L G with L the " << a.rows() << " x " << a.facets.coords() << " facet matrix and G the "
       << a.facets.coords() << " x " << a.cols() << " vertex coordinate matrix, verified entrywise; rank A <= rank L = "
       << cert.upper;
    cert.upper_proof = os.str();
  } else {
    cert.upper = std::min(a.rows(), a.cols());
    cert.upper_proof = "factorization check failed; trivial bound only";
  }
  return cert;
}

namespace {

std::string header(const SlackMatrix& a) {
  std::ostringstream os;
  std::istringstream prov(a.provenance);
  std::string line;
  while (std::getline(prov, line)) os << "# " << line << '\n';
  os << "# rows: " << a.rows() << " facets of Q in facet_enum order; columns: " << a.cols() << " vertices of P:";
  for (const auto& v : a.vertices) os << ' ' << v.id;
  os << '\n';
  return os.str();
}

}  // namespace

std::string slack_csv(const SlackMatrix& a, int digits) {
  std::ostringstream os;
  os << header(a);
  for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? "," : "") << a.vertices[c].id;
  os << '\n';
  for (const auto& row : a.entries) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << to_decimal(row[c].enclosure.mid(), digits);
    os << '\n';
  }
  return os.str();
}

std::string slack_sidecar(const SlackMatrix& a) {
  std::ostringstream os;
  os << header(a);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const auto& e = a.entries[r][c];
      os << r + 1 << ' ' << c + 1 << " exact " << e.exact.to_string() << " enclosure " << e.enclosure.to_text() << '\n';
    }
  }
  return os.str();
}

}  // namespace slackcert
