#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "trivol/formula.hpp"
#include "trivol/oracle.hpp"

namespace trivol {

/// Machine-readable output envelopes. Exact values are serialized as "p/q"
/// strings; every exact field has a sibling <name>_f64 rendition with 17
/// significant digits. schema_version is "1"; evolution is additive only.

nlohmann::json domain_json(const BoxDomain3& domain);

/// Envelope for `volume`: input, canonical form, normalization, case, volume.
nlohmann::json volume_envelope(const VolumeReport& report, const std::string& mode);

/// Envelope for `breakdown`: volume fields plus the full pipeline record.
nlohmann::json breakdown_envelope(const VolumeReport& report, const std::string& mode);

/// Envelope for `verify`: volume fields plus oracle comparisons.
nlohmann::json verify_envelope(const VolumeReport& report, const Scalar& quadrature,
                               const std::optional<McEstimate>& mc, const std::string& mode);
nlohmann::json verify_envelope_float(const VolumeReport& report, double quadrature,
                                     const std::optional<McEstimate>& mc);

}  // namespace trivol
