#pragma once

#include "corank/rep.hpp"

namespace corank {

/// Generator symbols for a right-ideal presentation: t_<a>_<x>_<b> for
/// every label pair and variable, v_<b> per label, with their images
/// under the evaluation homomorphism psi and the precomputed coset
/// vectors that drive the right action.
struct SymbolTables {
    CyclicModuleRep rep;
    Alphabet t_alphabet;              // T
    Alphabet z_alphabet;              // T followed by V
    std::vector<Polynomial> psi_t;    // T images in K<X>^1
    std::vector<Polynomial> psi_v;    // V images (the representatives)
    // coset[b][x] = coset_vector(r_b * x), length = corank
    std::vector<std::vector<Vector>> coset;

    std::size_t t_count() const { return t_alphabet.size(); }
    std::size_t v_count() const { return rep.labels.size(); }
    /// T symbols are ordered by (a, x, b).
    std::size_t t_index(std::size_t a, std::size_t x, std::size_t b) const;
    void t_decode(std::size_t index, std::size_t& a, std::size_t& x, std::size_t& b) const;
};

SymbolTables build_symbol_tables(const CyclicModuleRep& rep);

/// Element of K<T> + span(V): the carrier of the * action.
struct MixedElement {
    Polynomial t_part; // non-unital over T
    Vector v_part;     // over the labels

    bool is_zero() const { return t_part.is_zero() && is_zero_vector(); }
    bool is_zero_vector() const;
    bool operator==(const MixedElement& o) const;
    bool operator!=(const MixedElement& o) const { return !(*this == o); }
};

MixedElement mixed_zero(const SymbolTables& tables);
MixedElement mixed_add(const MixedElement& a, const MixedElement& b);
MixedElement mixed_scale(const Scalar& c, const MixedElement& a);

/// The right action of K<X>^1; the empty word acts as the identity.
MixedElement star_act(const SymbolTables& tables, const MixedElement& s, const Polynomial& p);

/// phi(p) = v_1 * p.
MixedElement phi(const SymbolTables& tables, const Polynomial& p);

/// Substitution by the psi images.
Polynomial psi_eval(const SymbolTables& tables, const MixedElement& s);
Polynomial psi_eval(const SymbolTables& tables, const Polynomial& over_z);

} // namespace corank
