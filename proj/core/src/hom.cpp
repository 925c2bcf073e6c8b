#include "corank/hom.hpp"

namespace corank {

void AlgebraHom::validate() const {
    if (images.size() != source.size())
        throw domain_error("hom: need exactly one image per source letter");
    if (source_unital && !target_unital)
        throw domain_error("hom: unital source needs a unital target");
    for (const auto& img : images) {
        if (img.ring() != ring)
            throw domain_error("hom: image ring mismatch");
        if (!(img.alphabet() == target))
            throw domain_error("hom: image alphabet mismatch");
        if (img.unital() != target_unital)
            throw domain_error("hom: image unital flag mismatch");
    }
}

Polynomial apply_hom(const AlgebraHom& hom, const Polynomial& p) {
    hom.validate();
    if (!(p.alphabet() == hom.source) || p.ring() != hom.ring ||
        p.unital() != hom.source_unital)
        throw domain_error("hom: argument type mismatch");
    Polynomial out = Polynomial::zero(hom.target, hom.ring, hom.target_unital);
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) {
            out.add_term({}, c);
            continue;
        }
        Polynomial prod = hom.images[w[0]];
        for (std::size_t i = 1; i < w.size(); ++i)
            prod = prod * hom.images[w[i]];
        out += c * prod;
    }
    return out;
}

} // namespace corank
