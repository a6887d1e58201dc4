#include "qmhs/serialization.hpp"

#include <sstream>
#include <stdexcept>

namespace qmhs {

json value_to_json(const Rational& v) {
    return json(v.str());
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational_from_json: expected a string");
    return Rational::from_string(j.get<std::string>());
}

json value_to_json(const Cyclotomic& v) {
    json coeffs = json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
    return json{{"n", v.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("coeffs")) {
        throw std::invalid_argument("cyclotomic_from_json: expected {n, coeffs}");
    }
    int n = j.at("n").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return Cyclotomic::from_coeffs(n, coeffs);
}

namespace {

CheckStatus status_from_string(const std::string& s) {
    if (s == "PASS") return CheckStatus::PASS;
    if (s == "FAIL") return CheckStatus::FAIL;
    if (s == "EXPECTED_DISCREPANCY_CONFIRMED") return CheckStatus::EXPECTED_DISCREPANCY_CONFIRMED;
    if (s == "UNEXPECTED_PASS") return CheckStatus::UNEXPECTED_PASS;
    throw std::invalid_argument("unknown check status \"" + s + "\"");
}

json lhs_to_json(const CheckReport& r) {
    if (const auto* q = std::get_if<Rational>(&r.lhs)) return value_to_json(*q);
    return value_to_json(std::get<Cyclotomic>(r.lhs));
}

std::string lhs_to_text(const CheckReport& r) {
    if (const auto* q = std::get_if<Rational>(&r.lhs)) return q->str();
    return value_to_text(std::get<Cyclotomic>(r.lhs));
}

}  // namespace

std::string value_to_text(const Cyclotomic& v) {
    std::string out = "[";
    bool first = true;
    for (const auto& c : v.coeffs()) {
        if (!first) out += '|';
        first = false;
        out += c.str();
    }
    return out + "]";
}

json report_to_json(const CheckReport& r) {
    json params = json::object();
    for (const auto& [name, value] : r.params.values()) params[name] = value;
    json out{
        {"id", identity_tag(r.id)},
        {"params", std::move(params)},
        {"lhs", lhs_to_json(r)},
        {"rhs", value_to_json(r.rhs)},
        {"status", to_string(r.status)},
        {"ms", r.wall_ms},
    };
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

CheckReport report_from_json(const json& j) {
    CheckReport r;
    auto id = identity_from_tag(j.at("id").get<std::string>());
    if (!id) throw std::invalid_argument("report_from_json: unknown identity tag");
    r.id = *id;
    std::map<std::string, int> params;
    for (const auto& [name, value] : j.at("params").items()) params[name] = value.get<int>();
    r.params = ParamTuple(std::move(params));
    const json& lhs = j.at("lhs");
    if (lhs.is_string()) {
        r.lhs = rational_from_json(lhs);
    } else {
        r.lhs = cyclotomic_from_json(lhs);
    }
    r.rhs = rational_from_json(j.at("rhs"));
    r.status = status_from_string(j.at("status").get<std::string>());
    r.wall_ms = j.at("ms").get<std::int64_t>();
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
}

std::string params_to_string(const ParamTuple& p) {
    std::string out;
    for (const auto& [name, value] : p.values()) {
        if (!out.empty()) out += ';';
        out += name + "=" + std::to_string(value);
    }
    return out;
}

std::string csv_header() {
    return "id,params,lhs,rhs,status,ms,note";
}

std::string report_to_csv_row(const CheckReport& r) {
    std::ostringstream os;
    os << identity_tag(r.id) << ',' << params_to_string(r.params) << ','
       << lhs_to_text(r) << ',' << r.rhs.str() << ',' << to_string(r.status) << ','
       << r.wall_ms << ',' << r.note;
    return os.str();
}

std::string report_to_text(const CheckReport& r) {
    std::ostringstream os;
    os << identity_tag(r.id) << '[' << params_to_string(r.params) << "] lhs="
       << lhs_to_text(r) << " rhs=" << r.rhs.str() << ' ' << to_string(r.status)
       << " (" << r.wall_ms << " ms)";
    if (!r.note.empty()) os << "  note: " << r.note;
    return os.str();
}

}  // namespace qmhs
