#pragma once

#include "corank/hom.hpp"
#include "corank/symbols.hpp"

namespace corank {

/// The lifted generator data: T symbols plus a finite family U of
/// span(V)-combinations covering the degree-zero part of the ideal, with a
/// section from the image back to K<Y>, Y = T followed by U.
struct UData {
    SymbolTables tables;
    std::vector<std::string> u_names;
    std::vector<Vector> pi_u;  // image of each u in span(V); first coordinate 0
    Matrix pi_matrix;          // |U| x (k+1), rows = pi_u
    Alphabet y_alphabet;       // T names then U names
    Submodule m_generators;    // relations among pi_u inside K^|U|

    std::size_t u_count() const { return u_names.size(); }
    std::size_t t_count() const { return tables.t_count(); }
    /// Letter index of u_j inside Y.
    std::size_t u_letter(std::size_t j) const { return t_count() + j; }
};

/// Canonical U: a canonical basis of {c : c_1 = 0 and sum_b c_b r_b lies
/// in the ideal}, i.e. the V-combinations with image in the ideal.
UData compute_u_data(const SymbolTables& tables);

/// Same, but with a caller-chosen list of V-combinations; the list must
/// span the canonical solution module (redundancy is allowed and shows up
/// in m_generators).
UData compute_u_data(const SymbolTables& tables, const std::vector<Vector>& custom_pi_u);

/// Section of pi on K<T> + pi(span U): t-part is copied verbatim, the
/// V-part is rewritten canonically over the u symbols. Throws when the
/// V-part is outside span(pi_u).
Polynomial rho_section(const UData& ud, const MixedElement& s);

/// pi on K<Y>: u letters may only occur as isolated degree-one terms.
MixedElement pi_project(const UData& ud, const Polynomial& lifted);

/// r ⋆ p = rho(pi(r) * p).
Polynomial starbar_act(const UData& ud, const Polynomial& lifted, const Polynomial& p);

/// Lift of an ideal member into K<Y>; throws when p is not a member.
Polynomial phibar(const UData& ud, const Polynomial& p);

/// Substitution sending each Y symbol to its witness in K<X>.
AlgebraHom psibar_hom(const UData& ud);
Polynomial psibar_eval(const UData& ud, const Polynomial& over_y);

/// Witness of a single Y letter (non-unital polynomial over X).
Polynomial y_witness(const UData& ud, std::size_t letter);

} // namespace corank
