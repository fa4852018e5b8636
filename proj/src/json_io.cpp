#include "groupfn/json_io.hpp"

#include "groupfn/errors.hpp"

namespace groupfn {

namespace {

Rational rat_field(const json& j) {
    if (!j.is_string())
        throw ParseError("rationals must be strings like \"1/2\"");
    return parse_rational(j.get<std::string>());
}

std::vector<Rational> rat_list(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(rat_field(e));
    return out;
}

json rat_array(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

}  // namespace

json to_json(const PwlPeriodic& pi) {
    return json{{"f", to_string(pi.f())},
                {"breakpoints", rat_array(pi.breakpoints())},
                {"values", rat_array(pi.values())}};
}

json to_json(const FiniteGroupFunction& h) {
    return json{{"N", h.N},
                {"f_index", h.f_index},
                {"values", rat_array(h.values)}};
}

json to_json(const MinimalityVerdict& v) {
    if (v.minimal) return json{{"minimal", true}};
    json w;
    if (v.witness) {
        w = json{{"x", to_string(v.witness->x)},
                 {"y", to_string(v.witness->y)},
                 {"condition", to_string(v.witness->condition)},
                 {"slack", to_string(v.witness->slack)}};
    }
    return json{{"minimal", false}, {"witness", w}};
}

json to_json(const ExtremalityCertificate& c) {
    if (c.extreme) return json{{"extreme", true}};
    json j{{"extreme", false}};
    if (c.perturbation) j["perturbation"] = to_json(*c.perturbation);
    if (c.decomposition) {
        j["pi_plus"] = to_json(c.decomposition->first);
        j["pi_minus"] = to_json(c.decomposition->second);
    }
    return j;
}

json to_json(const FillInParameters& p) {
    return json{{"q", p.q},
                {"s_plus", to_string(p.s_plus)},
                {"s_minus", to_string(p.s_minus)},
                {"r", p.r},
                {"delta", to_string(p.delta)},
                {"epsilon", to_string(p.epsilon)},
                {"m", p.m},
                {"n", p.n},
                {"D", p.D}};
}

PwlPeriodic pwl_from_json(const json& j) {
    if (!j.is_object() || !j.contains("f") || !j.contains("breakpoints") ||
        !j.contains("values"))
        throw ParseError("function JSON needs f, breakpoints, values");
    return PwlPeriodic::from_breakpoints(rat_list(j.at("breakpoints")),
                                         rat_list(j.at("values")),
                                         rat_field(j.at("f")));
}

FiniteGroupFunction group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("f_index") ||
        !j.contains("values"))
        throw ParseError("group JSON needs N, f_index, values");
    if (!j.at("N").is_number_integer() || !j.at("f_index").is_number_integer())
        throw ParseError("N and f_index must be integers");
    FiniteGroupFunction h;
    h.N = j.at("N").get<long>();
    h.f_index = j.at("f_index").get<long>();
    h.values = rat_list(j.at("values"));
    if (h.N < 2 || static_cast<long>(h.values.size()) != h.N)
        throw ParseError("value vector length must equal N >= 2");
    if (h.f_index <= 0 || h.f_index >= h.N)
        throw ParseError("f_index must lie in 1..N-1");
    return h;
}

bool is_group_json(const json& j) {
    return j.is_object() && j.contains("N");
}

}  // namespace groupfn
