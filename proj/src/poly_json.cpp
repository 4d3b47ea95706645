#include "sdlab/poly_json.hpp"

#include "sdlab/error.hpp"

namespace sdlab {

using nlohmann::json;

json to_json(const LaurentPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(json::array({e, to_fraction_string(c)}));
    return json{{"terms", std::move(terms)}};
}

json to_json(const BiLaurent& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(json::array({e.first, e.second, to_fraction_string(c)}));
    return json{{"terms", std::move(terms)}};
}

namespace {

const json& terms_of(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw Error(ErrorKind::Parse, "expected an object with a \"terms\" array");
    return j.at("terms");
}

} // namespace

LaurentPoly laurent_from_json(const json& j) {
    LaurentPoly::Terms terms;
    for (const auto& t : terms_of(j)) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
            throw Error(ErrorKind::Parse, "bad term " + t.dump());
        long e = t[0].get<long>();
        if (!terms.emplace(e, parse_rational(t[1].get<std::string>())).second)
            throw Error(ErrorKind::Parse, "repeated exponent " + std::to_string(e));
    }
    return LaurentPoly::from_terms(std::move(terms));
}

BiLaurent bi_laurent_from_json(const json& j) {
    BiLaurent::Terms terms;
    for (const auto& t : terms_of(j)) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
            !t[1].is_number_integer() || !t[2].is_string())
            throw Error(ErrorKind::Parse, "bad term " + t.dump());
        BiLaurent::Exponent e{t[0].get<long>(), t[1].get<long>()};
        if (!terms.emplace(e, parse_rational(t[2].get<std::string>())).second)
            throw Error(ErrorKind::Parse, "repeated exponent " + t.dump());
    }
    return BiLaurent::from_terms(std::move(terms));
}

} // namespace sdlab
