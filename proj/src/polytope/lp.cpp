#include "slackcert/polytope/lp.hpp"

#include <optional>

namespace slackcert {

namespace {

// Tableau rows 0..m-1 are constraints with rhs in the last column; basis[r] is the basic
// column of row r. The objective row holds reduced costs for maximization.
struct Tableau {
  Matrix<Rational> rows;
  std::vector<Rational> obj;
  Rational obj_value;
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  void pivot(std::size_t r, std::size_t col) {
    Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (obj[col] != 0) {
      Rational f = obj[col];
      for (std::size_t j = 0; j < ncols; ++j) obj[j] -= f * rows[r][j];
      obj_value += f * rows[r][ncols];
    }
    basis[r] = col;
  }

  // Returns false when unbounded. `allowed` limits entering columns.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][*enter] <= 0) continue;
        Rational ratio = rows[r][ncols] / rows[r][*enter];
        if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const Matrix<Rational>& A, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw std::invalid_argument("solve_lp: rhs size mismatch");
  Tableau tab;
  tab.ncols = n + m;
  tab.rows.assign(m, std::vector<Rational>(n + m + 1, 0));
  tab.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (A[r].size() != n) throw std::invalid_argument("solve_lp: row size mismatch");
    int s = b[r] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tab.rows[r][j] = s * A[r][j];
    tab.rows[r][n + r] = 1;
    tab.rows[r][n + m] = s * b[r];
    tab.basis[r] = n + r;
  }
  // Phase one: maximize -sum(artificials), expressed in the nonbasic columns.
  tab.obj.assign(n + m, 0);
  tab.obj_value = 0;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < n; ++j) tab.obj[j] += tab.rows[r][j];
    tab.obj_value -= tab.rows[r][n + m];
  }
  tab.optimize(n + m);
  LpResult out;
  if (tab.obj_value != 0) return out;

  // Drive artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t r = 0; r < tab.rows.size();) {
    if (tab.basis[r] < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab.rows[r][j] != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      tab.pivot(r, *col);
      ++r;
    } else {
      tab.rows.erase(tab.rows.begin() + static_cast<long>(r));
      tab.basis.erase(tab.basis.begin() + static_cast<long>(r));
    }
  }
  // Phase two with the true objective.
  tab.obj.assign(n + m, 0);
  for (std::size_t j = 0; j < n; ++j) tab.obj[j] = c[j];
  tab.obj_value = 0;
  for (std::size_t r = 0; r < tab.rows.size(); ++r) {
    std::size_t bcol = tab.basis[r];
    if (tab.obj[bcol] == 0) continue;
    Rational f = tab.obj[bcol];
    for (std::size_t j = 0; j < tab.ncols; ++j) tab.obj[j] -= f * tab.rows[r][j];
    tab.obj_value += f * tab.rows[r][tab.ncols];
  }
  if (!tab.optimize(n)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.x.assign(n, 0);
  for (std::size_t r = 0; r < tab.rows.size(); ++r) out.x[tab.basis[r]] = tab.rows[r][tab.ncols];
  out.value = 0;
  for (std::size_t j = 0; j < n; ++j) out.value += c[j] * out.x[j];
  return out;
}

}  // namespace slackcert
