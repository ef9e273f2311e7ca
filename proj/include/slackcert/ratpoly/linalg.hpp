#ifndef SLACKCERT_RATPOLY_LINALG_HPP
#define SLACKCERT_RATPOLY_LINALG_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slackcert/ratpoly/multipoly.hpp"
#include "slackcert/ratpoly/rational.hpp"

namespace slackcert {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool is_exact_zero(const MultiPoly& p) { return p.is_zero(); }
inline bool is_exact_zero(const Rational& q) { return q == 0; }
template <class T>
bool is_exact_zero(const T&) {
  return false;
}

namespace detail {

// Minors of the bottom rows of `rows` (rows first..end) over column subsets, built
// bottom-up by expansion along the first remaining row. Result indexed by column mask.
template <class T>
std::vector<std::optional<T>> bottom_minors(const Matrix<T>& rows, std::size_t first, std::size_t ncols) {
  const std::size_t nrows = rows.size();
  const std::size_t full = std::size_t{1} << ncols;
  std::vector<std::optional<T>> cur(full);
  {
    const auto& last = rows[nrows - 1];
    for (std::size_t c = 0; c < ncols; ++c) cur[std::size_t{1} << c] = last[c];
  }
  for (std::size_t k = nrows - 1; k-- > first;) {
    const std::size_t width = nrows - k;
    std::vector<std::optional<T>> next(full);
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != width) continue;
      T acc(0);
      bool any = false;
      for (std::size_t c = 0; c < ncols; ++c) {
        if (!(mask & (std::size_t{1} << c))) continue;
        const T& entry = rows[k][c];
        if (is_exact_zero(entry)) continue;
        const auto& minor = cur[mask & ~(std::size_t{1} << c)];
        if (!minor || is_exact_zero(*minor)) continue;
        int pos = std::popcount(mask & ((std::size_t{1} << c) - 1));
        T term = entry * *minor;
        if (pos % 2) {
          acc = any ? T(acc - term) : T(T(0) - term);
        } else {
          acc = any ? T(acc + term) : term;
        }
        any = true;
      }
      next[mask] = any ? acc : T(0);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace detail

/// Division-free determinant by memoized cofactor expansion along successive top rows.
template <class T>
T det_laplace(const Matrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("det: matrix not square");
  }
  if (n > 12) throw std::invalid_argument("det_laplace: dimension too large");
  auto minors = detail::bottom_minors(m, 0, n);
  return *minors[(std::size_t{1} << n) - 1];
}

/**
 * Generalized cross product of n-1 vectors in dimension n: the vector of signed
 * (n-1)x(n-1) cofactors, so that dot(cross_normal(rows), x) = det(rows; x).
 */
template <class T>
std::vector<T> cross_normal(const Matrix<T>& rows) {
  if (rows.empty()) throw std::invalid_argument("cross_normal: no rows");
  const std::size_t n = rows.size() + 1;
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("cross_normal: need n-1 rows of length n");
  }
  auto minors = detail::bottom_minors(rows, 0, n);
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    T minor = *minors[full & ~(std::size_t{1} << k)];
    out.push_back(((n - 1 + k) % 2) ? T(T(0) - minor) : minor);
  }
  return out;
}

template <class T, std::size_t N>
std::array<T, N> cross_normal(const std::array<std::array<T, N>, N - 1>& rows) {
  Matrix<T> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  auto v = cross_normal(m);
  std::array<T, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = std::move(v[k]);
  return out;
}

template <class T>
T dot(const std::vector<T>& x, const std::vector<T>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
  T s(0);
  for (std::size_t k = 0; k < x.size(); ++k) s = s + x[k] * y[k];
  return s;
}

template <class T, std::size_t N>
T dot(const std::array<T, N>& x, const std::array<T, N>& y) {
  T s(0);
  for (std::size_t k = 0; k < N; ++k) s = s + x[k] * y[k];
  return s;
}

/// Fraction-free (Bareiss) elimination; every division is exact by Sylvester's identity.
MultiPoly det_bareiss(Matrix<MultiPoly> m);
Rational det_bareiss(Matrix<Rational> m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix<Rational>& m);
std::size_t rank_exact(Matrix<Rational> m);
/// Basis of {x : m x = 0}.
Matrix<Rational> nullspace_exact(Matrix<Rational> m);
/// A solution of m x = b (free variables set to zero) or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_exact(const Matrix<Rational>& m, const std::vector<Rational>& b);
std::optional<Matrix<Rational>> inverse_exact(const Matrix<Rational>& m);

}  // namespace slackcert

#endif
