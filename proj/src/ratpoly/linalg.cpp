#include "slackcert/ratpoly/linalg.hpp"

namespace slackcert {

namespace {

template <class T, class Div>
T bareiss(Matrix<T> m, Div exact_divide) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("det: matrix not square");
  }
  if (n == 0) return T(1);
  int sign = 1;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_exact_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_exact_zero(m[r][k])) ++r;
      if (r == n) return T(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T cross = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(cross, prev);
      }
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  T d = m[n - 1][n - 1];
  return sign < 0 ? T(T(0) - d) : d;
}

}  // namespace

MultiPoly det_bareiss(Matrix<MultiPoly> m) {
  return bareiss(std::move(m), [](const MultiPoly& p, const MultiPoly& d) {
    if (d.is_constant()) return p * (1 / d.constant_value());
    auto q = exact_div(p, d);
    if (!q) throw std::logic_error("Bareiss step division was not exact");
    return *q;
  });
}

Rational det_bareiss(Matrix<Rational> m) {
  return bareiss(std::move(m), [](const Rational& p, const Rational& d) { return Rational(p / d); });
}

std::vector<std::size_t> row_reduce(Matrix<Rational>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank_exact(Matrix<Rational> m) { return row_reduce(m).size(); }

Matrix<Rational> nullspace_exact(Matrix<Rational> m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<Rational> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_exact(const Matrix<Rational>& m, const std::vector<Rational>& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve_exact: size mismatch");
  if (m.empty()) return std::vector<Rational>{};
  const std::size_t cols = m[0].size();
  Matrix<Rational> aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

std::optional<Matrix<Rational>> inverse_exact(const Matrix<Rational>& m) {
  const std::size_t n = m.size();
  Matrix<Rational> aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw std::invalid_argument("inverse_exact: not square");
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? 1 : 0);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<Rational> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
  return inv;
}

}  // namespace slackcert
