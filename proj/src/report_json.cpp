#include "kummer/report_json.hpp"

namespace kummer {

namespace {

Rational rational_field(const Json& v, const std::string& where) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return parse_rational(v.dump());
    } catch (const std::invalid_argument& e) {
        throw DocumentError("field " + where + ": " + e.what());
    }
    throw DocumentError("field " + where + ": expected a rational string like \"-3/2\"");
}

std::string line_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

DivisorDocument parse_divisor_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DocumentError("malformed JSON at " + line_of(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
    if (!doc.is_object()) throw DocumentError("document must be a JSON object");

    for (const auto& [key, _] : doc.items())
        if (key != "d1" && key != "d2" && key != "e" && key != "strategy" && key != "field_degree" &&
            key != "B_list")
            throw DocumentError("unknown field '" + key + "'");
    for (const char* key : {"d1", "d2", "e"})
        if (!doc.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");

    DivisorDocument out;
    out.input.d1 = rational_field(doc["d1"], "d1");
    out.input.d2 = rational_field(doc["d2"], "d2");

    const Json& e = doc["e"];
    if (!e.is_array() || e.size() != kGridSize) throw DocumentError("field e: expected a 4x4 array");
    for (int i = 0; i < kGridSize; ++i) {
        if (!e[i].is_array() || e[i].size() != kGridSize)
            throw DocumentError("field e[" + std::to_string(i + 1) + "]: expected 4 entries");
        for (int j = 0; j < kGridSize; ++j)
            out.input.e[i][j] =
                rational_field(e[i][j], "e[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
    }

    if (doc.contains("strategy")) {
        const Json& s = doc["strategy"];
        auto parsed = s.is_string() ? parse_strategy(s.get<std::string>()) : std::nullopt;
        if (!parsed) throw DocumentError("field strategy: expected canonical, singleton or optimize");
        out.strategy = parsed;
    }
    if (doc.contains("field_degree")) {
        const Json& n = doc["field_degree"];
        if (!n.is_number_integer() || n.get<long long>() < 1)
            throw DocumentError("field field_degree: expected an integer >= 1");
        out.field_degree = static_cast<int>(n.get<long long>());
    }
    if (doc.contains("B_list")) {
        const Json& bl = doc["B_list"];
        if (!bl.is_array()) throw DocumentError("field B_list: expected an array of positive integers");
        std::vector<std::uint64_t> bs;
        for (std::size_t k = 0; k < bl.size(); ++k) {
            if (!bl[k].is_number_unsigned() || bl[k].get<std::uint64_t>() < 1)
                throw DocumentError("field B_list[" + std::to_string(k) + "]: expected a positive integer");
            bs.push_back(bl[k].get<std::uint64_t>());
        }
        out.b_list = std::move(bs);
    }
    return out;
}

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json to_json(const DivisorClass& d) {
    Json arr = Json::array();
    for (const auto& c : d.coordinates()) arr.push_back(to_string(c));
    return arr;
}

DivisorClass divisor_from_json(const Json& j) {
    std::vector<Rational> coords;
    for (const auto& v : j) coords.push_back(rational_from_json(v));
    return DivisorClass::from_coordinates(coords);
}

Json to_json(const ConeDecomposition& d) {
    Json entries = Json::array();
    for (const auto& [p, v] : d.a) entries.push_back({{"S", p.s}, {"T", p.t}, {"a", to_string(v)}});
    return {{"a", entries}, {"c1", to_string(d.c1)}, {"c2", to_string(d.c2)}};
}

ConeDecomposition decomposition_from_json(const Json& j) {
    ConeDecomposition d;
    for (const auto& entry : j.at("a")) {
        SubsetPair p{entry.at("S").get<std::uint8_t>(), entry.at("T").get<std::uint8_t>()};
        if (!p.valid()) throw std::invalid_argument("subset mask out of range");
        d.a.emplace(p, rational_from_json(entry.at("a")));
    }
    d.c1 = rational_from_json(j.at("c1"));
    d.c2 = rational_from_json(j.at("c2"));
    return d;
}

Json to_json(const StrataReport& r) {
    Json curves = Json::array();
    for (const auto& c : r.minimal_curves) curves.push_back(c.name());
    Json j;
    j["strategy"] = to_string(r.strategy);
    j["decomposition"] = to_json(r.decomposition);
    j["gamma1"] = to_string(r.gamma1);
    j["gamma2"] = to_string(r.gamma2);
    j["c1"] = to_string(r.c1);
    j["c2"] = to_string(r.c2);
    j["denominator"] = to_string(r.denominator);
    j["alpha"] = to_string(r.alpha);
    j["case"] = {{"label", r.theorem_case.name()}, {"log_factor", r.theorem_case.log_factor}};
    j["min_degree_A"] = to_string(r.min_degree_A);
    j["minimal_curves"] = curves;
    j["condition2_ok"] = r.condition2_ok;
    j["condition2_margin"] = to_string(r.condition2_margin);
    j["curve_exponent"] = to_string(r.curve_exponent);
    j["error_exponent_q"] = r.error_exponent_q ? Json(to_string(*r.error_exponent_q)) : Json(nullptr);
    j["error_log_factor"] = r.error_log_factor;
    j["first_layer_identified"] = r.first_layer_identified;
    j["field_degree_N"] = r.field_degree_N;
    j["warnings"] = r.warnings;
    return j;
}

StrataReport report_from_json(const Json& j) {
    StrataReport r;
    auto strategy = parse_strategy(j.at("strategy").get<std::string>());
    if (!strategy) throw std::invalid_argument("unknown strategy");
    r.strategy = *strategy;
    r.decomposition = decomposition_from_json(j.at("decomposition"));
    r.gamma1 = rational_from_json(j.at("gamma1"));
    r.gamma2 = rational_from_json(j.at("gamma2"));
    r.c1 = rational_from_json(j.at("c1"));
    r.c2 = rational_from_json(j.at("c2"));
    r.denominator = rational_from_json(j.at("denominator"));
    r.alpha = rational_from_json(j.at("alpha"));

    const std::string label = j.at("case").at("label").get<std::string>();
    using L = TheoremCase::Label;
    if (label == "I") r.theorem_case.label = L::I;
    else if (label == "II") r.theorem_case.label = L::II;
    else if (label == "III") r.theorem_case.label = L::III;
    else if (label == "IV") r.theorem_case.label = L::IV;
    else throw std::invalid_argument("unknown case label " + label);
    r.theorem_case.log_factor = j.at("case").at("log_factor").get<bool>();

    r.min_degree_A = rational_from_json(j.at("min_degree_A"));
    for (const auto& c : j.at("minimal_curves")) {
        auto parsed = CurveLabel::parse(c.get<std::string>());
        if (!parsed) throw std::invalid_argument("unknown curve label");
        r.minimal_curves.push_back(*parsed);
    }
    r.condition2_ok = j.at("condition2_ok").get<bool>();
    r.condition2_margin = rational_from_json(j.at("condition2_margin"));
    r.curve_exponent = rational_from_json(j.at("curve_exponent"));
    if (!j.at("error_exponent_q").is_null()) r.error_exponent_q = rational_from_json(j.at("error_exponent_q"));
    r.error_log_factor = j.at("error_log_factor").get<bool>();
    r.first_layer_identified = j.at("first_layer_identified").get<bool>();
    r.field_degree_N = j.at("field_degree_N").get<int>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

Json to_json(const GrowthFit& f) {
    return {{"slope", f.slope}, {"intercept", f.intercept}, {"r_squared", f.r_squared}, {"n_tail", f.n_tail}};
}

}  // namespace kummer
