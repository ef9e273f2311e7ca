#ifndef SLACKCERT_VERIPIPE_CERTIFICATE_HPP
#define SLACKCERT_VERIPIPE_CERTIFICATE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "slackcert/witness/checks.hpp"

namespace slackcert {

enum class CheckStatus { Proven, ProvenSymbolic, Failed, Unknown, Informational };
std::string to_string(CheckStatus s);

/**
 * One verified claim. Proven carries an enclosure excluding 0 (or its exact
 * counterpart) in `witness`; ProvenSymbolic carries a zero-remainder identity.
 * Informational checks never count towards the aggregate.
 */
struct CheckResult {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::Unknown;
  bool required = true;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  long precision = 0;  // interval bits used; 0 for exact arguments
  bool passes() const;
};

/// Sign check to result: Proven when satisfied, Failed when the sign is certified wrong,
/// Unknown otherwise, Informational when nothing is required.
CheckResult from_sign(const SignCheck& c);

nlohmann::ordered_json interval_json(const Interval& x);

std::string sha256_hex(const std::string& data);

}  // namespace slackcert

#endif
