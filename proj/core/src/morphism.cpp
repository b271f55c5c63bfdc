#include "superdiv/morphism.hpp"

#include <stdexcept>

namespace superdiv {

BaseMorphism make_morphism(ContextPtr source, ContextPtr target,
                           std::map<std::string, SuperPolynomial> images) {
    if (!source || !target) throw std::invalid_argument("morphism requires both contexts");
    for (const auto& [name, value] : images) {
        VarRef ref = source->require(name);
        if (!same_context(value.context(), target))
            throw std::invalid_argument("image of '" + name +
                                        "' does not live in the target algebra");
        if (!value.has_homogeneous_parity())
            throw std::invalid_argument("image of '" + name + "' has mixed parity");
        if (!value.is_zero() && value.parity() != ref.parity)
            throw std::invalid_argument("morphism must preserve parity: '" + name + "'");
    }
    // Unassigned generators must exist in the target with matching parity.
    auto check_identity = [&](const std::string& name, Parity parity) {
        if (images.count(name)) return;
        auto ref = target->find(name);
        if (!ref || ref->parity != parity)
            throw std::invalid_argument("generator '" + name +
                                        "' has no image and no same-named target variable");
    };
    for (const auto& name : source->even_names()) check_identity(name, Parity::Even);
    for (const auto& name : source->odd_names()) check_identity(name, Parity::Odd);
    return BaseMorphism{std::move(source), std::move(target), std::move(images)};
}

SuperPolynomial apply(const BaseMorphism& f, const SuperPolynomial& p) {
    if (!same_context(p.context(), f.source))
        throw std::invalid_argument("polynomial does not live in the morphism's source");
    return substitute(p, f.images, f.target);
}

SuperPolynomial generator_image(const BaseMorphism& f, const std::string& name) {
    f.source->require(name);
    auto it = f.images.find(name);
    if (it != f.images.end()) return it->second;
    return SuperPolynomial::variable(f.target, name);
}

BaseMorphism compose(const BaseMorphism& outer, const BaseMorphism& inner) {
    if (!same_context(inner.target, outer.source))
        throw std::invalid_argument("morphisms do not compose: inner target != outer source");
    std::map<std::string, SuperPolynomial> images;
    for (const auto& name : inner.source->even_names())
        images.emplace(name, apply(outer, generator_image(inner, name)));
    for (const auto& name : inner.source->odd_names())
        images.emplace(name, apply(outer, generator_image(inner, name)));
    return make_morphism(inner.source, outer.target, std::move(images));
}

bool morphism_equal(const BaseMorphism& f, const BaseMorphism& g) {
    if (!same_context(f.source, g.source) || !same_context(f.target, g.target)) return false;
    for (const auto& name : f.source->even_names())
        if (generator_image(f, name) != generator_image(g, name)) return false;
    for (const auto& name : f.source->odd_names())
        if (generator_image(f, name) != generator_image(g, name)) return false;
    return true;
}

}  // namespace superdiv
