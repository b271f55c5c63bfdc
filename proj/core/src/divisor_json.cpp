#include "superdiv/divisor_json.hpp"

#include <stdexcept>

#include <json.hpp>

#include "superdiv/polynomial_io.hpp"

namespace superdiv {

namespace {

using json = nlohmann::ordered_json;

json context_to_json(const ContextPtr& ctx) {
    return json{{"even", ctx->even_names()}, {"odd", ctx->odd_names()}};
}

ContextPtr context_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("context must be a JSON object");
    std::vector<std::string> even, odd;
    if (j.contains("even")) even = j.at("even").get<std::vector<std::string>>();
    if (j.contains("odd")) odd = j.at("odd").get<std::vector<std::string>>();
    return make_context(std::move(even), std::move(odd));
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON document");
    return j;
}

}  // namespace

std::string divisor_to_json(const Superdivisor& D) {
    json coeffs = json::array();
    for (unsigned i = 0; i < D.g; ++i)
        coeffs.push_back(json{{"a", to_string(D.a[i])}, {"b", to_string(D.b[i])}});
    json j{{"g", D.g}, {"base", context_to_json(D.base)}, {"coeffs", std::move(coeffs)}};
    return j.dump(2);
}

Superdivisor divisor_from_json(const std::string& text) {
    json j = parse_document(text);
    if (!j.is_object() || !j.contains("g") || !j.contains("base") || !j.contains("coeffs"))
        throw std::invalid_argument("divisor JSON needs fields g, base, coeffs");
    if (!j.at("g").is_number_unsigned())
        throw std::invalid_argument("divisor degree g must be a non-negative integer");
    unsigned g = j.at("g").get<unsigned>();
    ContextPtr base = context_from_json(j.at("base"));

    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != g)
        throw std::invalid_argument("divisor JSON needs exactly g coefficient pairs");
    std::vector<SuperPolynomial> a, b;
    for (const auto& pair : coeffs) {
        if (!pair.is_object() || !pair.contains("a") || !pair.contains("b"))
            throw std::invalid_argument("coefficient entries need fields a and b");
        a.push_back(parse_polynomial(base, pair.at("a").get<std::string>()));
        b.push_back(parse_polynomial(base, pair.at("b").get<std::string>()));
    }
    return make_divisor(g, base, std::move(a), std::move(b));
}

std::string morphism_to_json(const BaseMorphism& f) {
    json images = json::object();
    for (const auto& name : f.source->even_names())
        images[name] = to_string(generator_image(f, name));
    for (const auto& name : f.source->odd_names())
        images[name] = to_string(generator_image(f, name));
    json j{{"source", context_to_json(f.source)},
           {"target", context_to_json(f.target)},
           {"images", std::move(images)}};
    return j.dump(2);
}

BaseMorphism morphism_from_json(const std::string& text) {
    json j = parse_document(text);
    if (!j.is_object() || !j.contains("source") || !j.contains("target"))
        throw std::invalid_argument("morphism JSON needs fields source and target");
    ContextPtr source = context_from_json(j.at("source"));
    ContextPtr target = context_from_json(j.at("target"));
    std::map<std::string, SuperPolynomial> images;
    if (j.contains("images")) {
        const json& imgs = j.at("images");
        if (!imgs.is_object())
            throw std::invalid_argument("morphism images must be an object");
        for (const auto& [name, value] : imgs.items())
            images.emplace(name, parse_polynomial(target, value.get<std::string>()));
    }
    return make_morphism(std::move(source), std::move(target), std::move(images));
}

}  // namespace superdiv
