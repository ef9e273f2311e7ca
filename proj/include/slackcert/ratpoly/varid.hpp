#ifndef SLACKCERT_RATPOLY_VARID_HPP
#define SLACKCERT_RATPOLY_VARID_HPP

#include <cstdint>
#include <optional>
#include <string_view>

namespace slackcert {

// Closed, ordered alphabet. a, b, c stand for the three field generators, v_ij for the
// facet perturbations and w_k for the first four chart coordinates of the apex.
enum class Var : std::uint8_t {
  t, a, b, c,
  v11, v12, v13, v21, v22, v23, v31, v32, v33, v41, v42, v43,
  w1, w2, w3, w4,
};

inline constexpr int kVarCount = 20;

constexpr int index_of(Var v) { return static_cast<int>(v); }
constexpr Var var_at(int index) { return static_cast<Var>(index); }

/// Perturbation variable of facet group i (1..4), point j (1..3).
constexpr Var v_var(int i, int j) { return var_at(index_of(Var::v11) + 3 * (i - 1) + (j - 1)); }
/// Free apex coordinate k (1..4).
constexpr Var w_var(int k) { return var_at(index_of(Var::w1) + (k - 1)); }

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

}  // namespace slackcert

#endif
