#ifndef SLACKCERT_WITNESS_CONSTRUCTION_HPP
#define SLACKCERT_WITNESS_CONSTRUCTION_HPP

#include <array>

#include "slackcert/ratpoly/linalg.hpp"

namespace slackcert {

template <class T>
using Vec5 = std::array<T, 5>;

/// Apex and the twelve perturbed facet points, all in homogeneous coordinates.
template <class T>
struct ConstructionInput {
  Vec5<T> omega;
  std::array<std::array<Vec5<T>, 3>, 4> f;
};

/**
 * Division-free construction over any commutative scalar type: normal[i] is the cross
 * normal of (omega, f_i1, f_i2, f_i3), unoriented; V[j] is the cross normal of
 * (e_j, normal[k] for k != j in increasing order), proportional to the chart point V_j,
 * and V_sum[j] its coordinate sum. Every chart-level quantity is a ratio of these.
 */
template <class T>
struct Construction {
  std::array<Vec5<T>, 4> normal;
  std::array<Vec5<T>, 4> V;
  std::array<T, 4> V_sum;
};

template <class T>
Construction<T> construct(const ConstructionInput<T>& in) {
  Construction<T> out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.normal[i] = cross_normal<T, 5>({in.omega, in.f[i][0], in.f[i][1], in.f[i][2]});
  }
  for (std::size_t j = 0; j < 4; ++j) {
    std::array<Vec5<T>, 4> rows;
    for (std::size_t k = 0; k < 5; ++k) rows[0][k] = T(k == j ? 1 : 0);
    std::size_t r = 1;
    for (std::size_t k = 0; k < 4; ++k) {
      if (k != j) rows[r++] = out.normal[k];
    }
    out.V[j] = cross_normal<T, 5>(rows);
    T s(0);
    for (const auto& x : out.V[j]) s = s + x;
    out.V_sum[j] = s;
  }
  return out;
}

/// det(V_1, .., V_4, last) on the homogeneous rows; divide by prod V_sum for chart points.
template <class T>
T det_with_last(const Construction<T>& c, const Vec5<T>& last) {
  Matrix<T> m;
  for (const auto& v : c.V) m.emplace_back(v.begin(), v.end());
  m.emplace_back(last.begin(), last.end());
  return det_laplace(m);
}

template <class T>
T product_of_sums(const Construction<T>& c) {
  return c.V_sum[0] * c.V_sum[1] * c.V_sum[2] * c.V_sum[3];
}

}  // namespace slackcert

#endif
