#pragma once

#include "pcert/certify/box.hpp"
#include "pcert/mpoly/mpoly.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace pcert {

enum class CertKind { DiscardedPositive, DiscardedNegative, MirandaCertified, IdentifiedLowerPeriod };

std::string to_string(CertKind k);
CertKind cert_kind_from_string(std::string_view s);

// Outcome of one proof step on one box. The witness holds everything needed
// to re-run the check; polynomials are referenced by index and hash.
struct Certificate {
    CertKind kind = CertKind::DiscardedPositive;
    Box box;
    nlohmann::json witness;

    nlohmann::json to_json() const;
    static Certificate from_json(const nlohmann::json& j);
};

std::string poly_hash(const MPoly& p);

// Re-runs the recorded checks against `system` (the polynomials the
// certificate was produced from). Throws Error(ReplayFailed) on mismatch.
void replay(const Certificate& c, const std::vector<MPoly>& system);

} // namespace pcert
