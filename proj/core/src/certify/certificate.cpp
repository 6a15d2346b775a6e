#include "pcert/certify/certificate.hpp"

#include "pcert/certify/bounds.hpp"
#include "pcert/certify/miranda.hpp"
#include "pcert/error.hpp"

namespace pcert {

std::string to_string(CertKind k)
{
    switch (k) {
    case CertKind::DiscardedPositive:
        return "DiscardedPositive";
    case CertKind::DiscardedNegative:
        return "DiscardedNegative";
    case CertKind::MirandaCertified:
        return "MirandaCertified";
    case CertKind::IdentifiedLowerPeriod:
        return "IdentifiedLowerPeriod";
    }
    return "?";
}

CertKind cert_kind_from_string(std::string_view s)
{
    for (CertKind k : {CertKind::DiscardedPositive, CertKind::DiscardedNegative, CertKind::MirandaCertified,
                       CertKind::IdentifiedLowerPeriod}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw Error(Errc::ParseError, "unknown certificate kind '" + std::string(s) + "'");
}

nlohmann::json Certificate::to_json() const
{
    return {{"kind", to_string(kind)}, {"box", pcert::to_json(box)}, {"witness", witness}};
}

Certificate Certificate::from_json(const nlohmann::json& j)
{
    try {
        Certificate c;
        c.kind = cert_kind_from_string(j.at("kind").get<std::string>());
        c.box = box_from_json(j.at("box"));
        c.witness = j.at("witness");
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("malformed certificate: ") + e.what());
    }
}

std::string poly_hash(const MPoly& p) { return hex64(p.hash()); }

void replay(const Certificate& c, const std::vector<MPoly>& system)
{
    try {
        switch (c.kind) {
        case CertKind::DiscardedPositive:
        case CertKind::DiscardedNegative:
            check_sign_tree(c.witness, c.box, system, c.kind == CertKind::DiscardedPositive ? 1 : -1);
            return;
        case CertKind::MirandaCertified:
            replay_miranda(c, system);
            return;
        case CertKind::IdentifiedLowerPeriod:
            replay_identification(c);
            return;
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ReplayFailed, std::string("malformed witness: ") + e.what());
    }
}

} // namespace pcert
