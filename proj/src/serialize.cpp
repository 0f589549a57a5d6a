#include "aybe/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace aybe {

Json to_json(const Tensor2& t) {
    Json coeffs = Json::array();
    for (const auto& [k, v] : t.coeffs())
        coeffs.push_back({std::to_string(k[0] + 1), std::to_string(k[1] + 1),
                          std::to_string(k[2] + 1), std::to_string(k[3] + 1), to_string(v)});
    return Json{{"n", t.n()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const Tensor3& t) {
    Json coeffs = Json::array();
    for (const auto& [k, v] : t.coeffs())
        coeffs.push_back({std::to_string(k[0] + 1), std::to_string(k[1] + 1),
                          std::to_string(k[2] + 1), std::to_string(k[3] + 1),
                          std::to_string(k[4] + 1), std::to_string(k[5] + 1), to_string(v)});
    return Json{{"n", t.n()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const BlockedJ& j) {
    Json ones = Json::array();
    for (int i = 0; i < j.n; ++i)
        for (int c = 0; c < j.n; ++c)
            if (j.matrix(i, c) != 0) ones.push_back({i + 1, c + 1});
    return Json{{"n", j.n}, {"split", j.split}, {"ones", std::move(ones)}};
}

Json to_json(const VerifyReport& report) {
    Json out;
    out["solution"] = report.solution;
    out["n"] = report.n;
    if (report.d) out["d"] = *report.d;
    out["seed"] = report.seed;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json point;
        for (const auto& [name, value] : c.point) point[name] = to_string(value);
        checks.push_back(
            Json{{"law", c.law}, {"point", std::move(point)}, {"residual_zero", c.residual_zero}});
    }
    out["checks"] = std::move(checks);
    if (report.symmetry_dim) out["symmetry_dim"] = *report.symmetry_dim;
    if (report.conditions)
        out["conditions"] = Json{{"a", (*report.conditions)[0]},
                                 {"b", (*report.conditions)[1]},
                                 {"c", (*report.conditions)[2]},
                                 {"d", (*report.conditions)[3]}};
    return out;
}

Json laurent_to_json(const LaurentTensor& lt, int max_order) {
    Json orders = Json::array();
    for (int k = -1; k <= max_order; ++k) {
        Json entry;
        entry["order"] = k;
        entry["coeffs"] = to_json(lt.coefficient(k))["coeffs"];
        orders.push_back(std::move(entry));
    }
    return Json{{"n", lt.n}, {"coefficients", std::move(orders)}};
}

std::string tensor2_text(const Tensor2& t) {
    std::vector<std::array<std::string, 5>> rows;
    std::array<std::size_t, 5> width{1, 1, 1, 1, 1};
    for (const auto& [k, v] : t.coeffs()) {
        std::array<std::string, 5> row{std::to_string(k[0] + 1), std::to_string(k[1] + 1),
                                       std::to_string(k[2] + 1), std::to_string(k[3] + 1),
                                       to_string(v)};
        for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
        rows.push_back(std::move(row));
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 5; ++c) {
            out << (c ? " " : "");
            out.width(static_cast<std::streamsize>(width[c]));
            out << row[c];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace aybe
