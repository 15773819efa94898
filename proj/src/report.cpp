#include "report.hpp"

#include <algorithm>

namespace sumsq {

VerificationReport compare_series(const std::string& id, nlohmann::json params, const QX& lhs,
                                  const QX& rhs) {
    VerificationReport r;
    r.id = id;
    r.params = std::move(params);
    r.order = std::min(lhs.order(), rhs.order());
    Mismatch m;
    if (first_mismatch(lhs, rhs, m)) {
        r.pass = false;
        r.first_mismatch = ReportMismatch{m.exponent, to_string(m.lhs), to_string(m.rhs)};
    } else {
        r.pass = true;
    }
    return r;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j = {{"id", r.id},
                        {"params", r.params},
                        {"order", r.order},
                        {"status", r.pass ? "pass" : "fail"}};
    if (r.first_mismatch)
        j["first_mismatch"] = {{"e", r.first_mismatch->exponent},
                               {"lhs", r.first_mismatch->lhs},
                               {"rhs", r.first_mismatch->rhs}};
    else
        j["first_mismatch"] = nullptr;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.params = j.at("params");
    r.order = j.at("order").get<long>();
    r.pass = j.at("status").get<std::string>() == "pass";
    const auto& m = j.at("first_mismatch");
    if (!m.is_null())
        r.first_mismatch = ReportMismatch{m.at("e").get<long>(), m.at("lhs").get<std::string>(),
                                          m.at("rhs").get<std::string>()};
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
}

std::string report_line(const VerificationReport& r) {
    std::string s = (r.pass ? "PASS " : "FAIL ") + r.id + " " + r.params.dump() +
                    " order=" + std::to_string(r.order);
    if (r.first_mismatch)
        s += " first_mismatch e=" + std::to_string(r.first_mismatch->exponent) + " lhs=" +
             r.first_mismatch->lhs + " rhs=" + r.first_mismatch->rhs;
    if (!r.note.empty()) s += " (" + r.note + ")";
    return s;
}

}  // namespace sumsq
