#include "qx_json.hpp"

namespace sumsq {

nlohmann::json qx_to_json(const QX& a) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (long e = 0; e < a.order(); ++e)
        if (a[e] != 0) coeffs.push_back({{"e", e}, {"v", to_string(a[e])}});
    return {{"order_quarter", a.order()}, {"coeffs", coeffs}};
}

QX qx_from_json(const nlohmann::json& j) {
    long order = j.at("order_quarter").get<long>();
    QX a(order);
    for (const auto& t : j.at("coeffs")) {
        long e = t.at("e").get<long>();
        if (e < 0 || e >= order) throw Error(ErrorKind::Length, "coefficient outside order", e);
        a[e] = parse_rational(t.at("v").get<std::string>());
    }
    return a;
}

}  // namespace sumsq
