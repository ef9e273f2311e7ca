#include "slackcert/veripipe/certificate.hpp"

#include <array>
#include <cstdio>

#include <openssl/evp.h>

namespace slackcert {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Proven: return "Proven";
    case CheckStatus::ProvenSymbolic: return "ProvenSymbolic";
    case CheckStatus::Failed: return "Failed";
    case CheckStatus::Unknown: return "Unknown";
    case CheckStatus::Informational: return "Informational";
  }
  return "Unknown";
}

bool CheckResult::passes() const { return status == CheckStatus::Proven || status == CheckStatus::ProvenSymbolic; }

nlohmann::ordered_json interval_json(const Interval& x) {
  nlohmann::ordered_json j;
  j["interval"] = x.to_text();
  j["approx"] = to_decimal(x.mid(), 20);
  return j;
}

CheckResult from_sign(const SignCheck& c) {
  CheckResult r;
  r.id = c.id;
  r.description = c.description;
  r.required = c.required != Requirement::None;
  r.precision = c.verdict.bits;
  r.witness["required"] = to_string(c.required);
  r.witness["sign"] = to_string(c.verdict.sign);
  r.witness["enclosure"] = interval_json(c.verdict.enclosure);
  if (!r.required) {
    r.status = CheckStatus::Informational;
  } else if (c.satisfied()) {
    r.status = CheckStatus::Proven;
  } else if (c.verdict.sign != Sign::Unknown) {
    r.status = CheckStatus::Failed;
  } else {
    r.status = CheckStatus::Unknown;
  }
  return r;
}

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx, md.data(), &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256 failed");
  }
  EVP_MD_CTX_free(ctx);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace slackcert
