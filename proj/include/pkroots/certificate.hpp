#pragma once

#include "pkroots/roots.hpp"
#include "pkroots/specfile.hpp"

namespace pkroots {

// Context of a CLI query, echoed into every certificate.
struct QueryInfo {
    std::string spec_name;
    std::string element_text;
    long k = 1;
    std::string series;
    std::string mode; // "coset" | "element"
};

ordered_json certificate_to_json(const RootsEngine& eng, const Certificate& cert,
                                 const QueryInfo& query,
                                 const std::optional<Matrix>& target_n = std::nullopt,
                                 const std::optional<Matrix>& target_root = std::nullopt);

ordered_json regularity_to_json(const RootsEngine& eng, const RegularityReport& rep,
                                const QueryInfo& query);

ordered_json probe_to_json(const RootsEngine& eng, const Matrix& x,
                           const std::map<long, ProbeResult>& probe, const QueryInfo& query,
                           const std::map<long, Matrix>& sample_roots);

// Independent re-check of a certificate using only exact linear algebra plus
// the spec file: no group machinery, no decision logic.
struct VerifyResult {
    bool ok = true;
    std::vector<std::string> checks;   // every claim that was recomputed
    std::vector<std::string> failures; // human-readable mismatches
    std::vector<std::string> accepted; // claims recheckable only by rerun
};

VerifyResult verify_certificate(const GroupSpec& spec, const ordered_json& cert);

} // namespace pkroots
