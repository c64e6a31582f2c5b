#ifndef JACRANK_CERTIFICATE_JSON_HPP
#define JACRANK_CERTIFICATE_JSON_HPP

#include <string>

#include "jacrank/certify.hpp"

namespace jacrank {

inline constexpr const char* kCertificateSchemaVersion = "1";

// Serialization is canonical: fixed key order, two-space indentation, every
// integer written as a decimal string. Two runs over the same curve produce
// byte-identical documents.
std::string certificate_to_json(const Certificate& cert);

// Strict structural parse; rejects unknown schema versions, malformed decimal
// strings, and size inconsistencies. Semantic integrity is verify_certificate's job.
Certificate certificate_from_json(const std::string& text);

}  // namespace jacrank

#endif
