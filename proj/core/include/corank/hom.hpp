#pragma once

#include "corank/poly.hpp"

namespace corank {

/// Algebra homomorphism between free algebras, given by one image per
/// source letter. Unital sources require a unital target so the empty
/// word has somewhere to go.
struct AlgebraHom {
    Alphabet source;
    Alphabet target;
    Ring ring{};
    bool source_unital = false;
    bool target_unital = false;
    std::vector<Polynomial> images;

    void validate() const;
};

Polynomial apply_hom(const AlgebraHom& hom, const Polynomial& p);

} // namespace corank
