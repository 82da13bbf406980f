// JSON encodings: a Laurent polynomial is a list of [exponent,
// coefficient-string] pairs (coefficients as decimal strings, so nothing is
// lost to doubles); the matrices dump maps matrix name to an 8x8 array of
// canonical polynomial strings.

#pragma once

#include "verify.hpp"

#include <json.hpp>

namespace sl2tqft {

inline nlohmann::json poly_to_json(const LaurentPoly& p) {
    nlohmann::json out = nlohmann::json::array();
    // descending exponents, like the text form
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back({it->first, it->second.str()});
    return out;
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("poly_from_json: expected [exponent, coefficient] pairs");
        p += LaurentPoly::monomial(Int(pair[1].get<std::string>()), pair[0].get<int>());
    }
    return p;
}

inline nlohmann::json bivariate_to_json(const BivariatePoly& p) {
    nlohmann::json out = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        out.push_back({it->first.first, it->first.second, it->second.str()});
    return out;
}

inline nlohmann::json matrix_to_json(const CoreMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < kCoreRank; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < kCoreRank; ++c) row.push_back(to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Dump of all generator matrices plus the identity-check verdicts; the
// format consumed by golden tests and `matrices --format json`.
inline nlohmann::json matrices_dump() {
    nlohmann::json out;
    out["eta"] = matrix_to_json(eta());
    out["eta_inv"] = matrix_to_json(eta_inv());
    out["sigma"] = matrix_to_json(sigma());
    out["z_genus"] = matrix_to_json(z_genus());
    out["m"] = matrix_to_json(m_matrix());
    out["z_jplus"] = matrix_to_json(z_jplus());
    out["rz_jplus"] = matrix_to_json(rz_jplus());
    out["rz_jminus"] = matrix_to_json(rz_jminus());
    out["rz_id"] = matrix_to_json(rz_id());
    out["rz_negid"] = matrix_to_json(rz_negid());
    nlohmann::json checks;
    run_matrix_checks([&](const CheckResult& r) { checks[r.name] = r.pass ? "PASS" : "FAIL"; });
    out["identities"] = std::move(checks);
    return out;
}

}  // namespace sl2tqft
