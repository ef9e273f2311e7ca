#ifndef SLACKCERT_VERIPIPE_PIPELINE_HPP
#define SLACKCERT_VERIPIPE_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "slackcert/polytope/synth.hpp"
#include "slackcert/slackbridge/slack.hpp"
#include "slackcert/veripipe/certificate.hpp"

namespace slackcert {

inline constexpr const char* kToolName = "slackcert";
inline constexpr const char* kToolVersion = "1.0.0";

struct VerifyConfig {
  Rational eps{1, 1000};
  long precision_max = 512;
  /// Added to pi before anything else runs; nonzero only in mutation tests.
  MultiPoly pi_tamper;
};

struct Certificate {
  VerifyConfig config;
  std::vector<CheckResult> checks;
  std::optional<SynthParams> synth;
  std::optional<SlackMatrix> slack;
  nlohmann::ordered_json constants = nlohmann::ordered_json::object();
  nlohmann::ordered_json digests = nlohmann::ordered_json::object();
  bool pass = false;
  std::vector<std::string> failing;

  const CheckResult* find(const std::string& id) const;
  nlohmann::ordered_json to_json() const;
  /// Serialized certificate, deterministic for a fixed config.
  std::string dump() const;
  std::string render_text() const;
};

/// Runs every stage in order; stages that cannot run leave their checks Unknown.
Certificate run_verify(const VerifyConfig& config = {});

/// Ids of the checks the certificate must contain for full coverage of the claims.
std::vector<std::string> required_check_manifest();

/// Constants solved at width <= 10^-(digits + 2), for printing `digits` digits.
struct ConstantsListing {
  Constants constants;
  std::vector<std::string> lines;
};
ConstantsListing list_constants(int digits);

/// Human-readable dump of the symbolic model: points, pi, conditions, normals and
/// on-slice determinants.
std::string dump_model(const WitnessModel& model);

}  // namespace slackcert

#endif
