#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "qseries.hpp"

namespace sumsq {

struct ReportMismatch {
    // Quarter exponent for series comparisons, determinant size for
    // closed-form evaluations.
    long exponent;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    long order = 0;
    bool pass = false;
    std::optional<ReportMismatch> first_mismatch;
    std::string note;
};

VerificationReport compare_series(const std::string& id, nlohmann::json params, const QX& lhs,
                                  const QX& rhs);

nlohmann::json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
// One line: "PASS id {params}" or "FAIL id {params} at e=..: lhs != rhs".
std::string report_line(const VerificationReport& r);

}  // namespace sumsq
