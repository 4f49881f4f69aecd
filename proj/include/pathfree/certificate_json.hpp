#pragma once

#include "pathfree/certificates.hpp"

#include <json.hpp>

#include <string>

namespace pathfree {

using Json = nlohmann::ordered_json;

/// One JSON object per certificate. Keys are emitted in a fixed order:
/// type, params, the certificate's own fields, verification_grade, derived.
/// Rationals are "p/q" strings so the output is exact and byte-stable.
Json certificate_to_json(const Certificate & cert, Json params = Json::object(), const std::string & grade = "exact",
    Json derived = Json::object());

/// Throws ParseError on a malformed object.
Certificate certificate_from_json(const Json & json);

struct CertificateCheck {
    bool ok = false;
    std::string grade;  // exact, exhaustive, sampled or refuted
    std::string reason; // the violated invariant when !ok
};

/// Re-verifies a certificate object against g. Dimensions come from params:
/// k (paths), min_length / min_width (blockades), min_y (brushes), samples /
/// seed (dense-core claims).
CertificateCheck check_certificate(const Graph & g, const Json & json);

} // namespace pathfree
