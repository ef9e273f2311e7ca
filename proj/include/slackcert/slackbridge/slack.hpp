#ifndef SLACKCERT_SLACKBRIDGE_SLACK_HPP
#define SLACKCERT_SLACKBRIDGE_SLACK_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slackcert/polytope/geometry.hpp"
#include "slackcert/ratpoly/polyfraction.hpp"

namespace slackcert {

class ContainmentViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex of P: exact coordinates (constant fractions for rational points) and their
/// enclosure at the certified constants.
struct SlackVertex {
  std::string id;
  std::vector<PolyFraction> exact;
  IPoint enclosure;
};

SlackVertex rational_vertex(std::string id, const RPoint& x);

struct SlackEntry {
  PolyFraction exact;
  Interval enclosure;
  /// Exactly zero, or certified positive.
  bool certified_nonnegative() const;
};

/**
 * Rows are Q's facets, columns P's vertices: entry (j, i) = f_j(v_i). Functionals are
 * taken as given (facet_enum normalizes them to max |coefficient| 1). The facet list and
 * vertex coordinates are kept so that A = L G can be re-verified.
 */
struct SlackMatrix {
  std::vector<std::vector<SlackEntry>> entries;
  HPolytope facets;
  std::vector<SlackVertex> vertices;
  std::string provenance;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
  bool certified_nonnegative() const;
};

/// Throws ContainmentViolation when an entry is certified negative.
SlackMatrix slack_matrix(const std::vector<SlackVertex>& p, const HPolytope& q, std::string provenance = {});
SlackMatrix slack_matrix(const VPolytope& p, const HPolytope& q, std::string provenance = {});

/// Exact rational matrix of a slack matrix whose entries are all constant.
std::optional<Matrix<Rational>> exact_rational(const SlackMatrix& a);

struct RecoveredPoint {
  RPoint x;
  bool inside = false;
};

/// Chart point whose slack vector in q is proportional to b. Throws std::domain_error when
/// no point has slack proportional to b.
RecoveredPoint recover_point(const std::vector<Rational>& b, const HPolytope& q);

struct RankCertificate {
  std::size_t lower = 0;
  std::vector<std::size_t> minor_rows;
  std::vector<std::size_t> minor_cols;
  Interval minor;
  bool lower_exact = false;
  std::size_t upper = 0;
  std::string upper_proof;
  bool exact() const { return lower == upper; }
};

/// Exact rank of a rational matrix, with a witnessing nonzero minor.
RankCertificate rank_certify(const Matrix<Rational>& a);

/**
 * Lower bound from a nonzero minor of the expected size (exact if it can be found among
 * rational columns, otherwise certified by interval determinant); upper bound from the
 * verified factorization A = L G through the coordinate space.
 */
RankCertificate rank_certify(const SlackMatrix& a, std::size_t expected);

/// CSV of enclosure midpoints and a sidecar with exact entries and interval bounds, both
/// opened by '#' provenance lines.
std::string slack_csv(const SlackMatrix& a, int digits = 20);
std::string slack_sidecar(const SlackMatrix& a);

}  // namespace slackcert

#endif
