#include "corank/rewriting.hpp"

namespace corank {

namespace {

UData finish_u_data(SymbolTables tables, std::vector<Vector> pi_u) {
    UData ud;
    ud.tables = std::move(tables);
    const Ring ring = ud.tables.rep.ring;
    const std::size_t nl = ud.tables.rep.labels.size();

    ud.pi_u = std::move(pi_u);
    ud.pi_matrix = Matrix(ring, ud.pi_u.size(), nl);
    for (std::size_t j = 0; j < ud.pi_u.size(); ++j) {
        if (ud.pi_u[j].size() != nl) throw domain_error("u image has the wrong length");
        if (!ud.pi_u[j][0].is_zero())
            throw domain_error("u image has a nonzero unit coordinate");
        for (std::size_t c = 0; c < nl; ++c) ud.pi_matrix.at(j, c) = ud.pi_u[j][c];
    }

    std::vector<std::string> y_names = ud.tables.t_alphabet.names();
    ud.u_names.reserve(ud.pi_u.size());
    for (std::size_t j = 0; j < ud.pi_u.size(); ++j) {
        std::string name = "u" + std::to_string(j + 1);
        ud.u_names.push_back(name);
        y_names.push_back(std::move(name));
    }
    ud.y_alphabet = Alphabet(std::move(y_names));
    ud.m_generators = relations_among(ring, nl, ud.pi_u);
    return ud;
}

Submodule canonical_u_module(const SymbolTables& tables) {
    const Ring ring = tables.rep.ring;
    const std::size_t nl = tables.rep.labels.size();
    const std::size_t k = tables.rep.corank();

    // unit-coordinate extraction: c maps to (c_1)
    Matrix unit_coord(ring, nl, 1);
    unit_coord.at(0, 0) = Scalar::one(ring);
    // class map: c maps to sum over labels of c_b * class(r_b)
    Matrix class_map(ring, nl, nl);
    for (std::size_t b = 1; b <= k; ++b) {
        const Vector cls =
            tables.rep.class_vector(tables.rep.representatives[b - 1]);
        for (std::size_t c = 0; c < nl; ++c) class_map.at(b, c) = cls[c];
    }
    return preimage_of_span_multi(
        ring, nl, {unit_coord, class_map},
        {Submodule::zero(ring, 1), tables.rep.relations});
}

} // namespace

UData compute_u_data(const SymbolTables& tables) {
    const Submodule sol = canonical_u_module(tables);
    std::vector<Vector> pi_u;
    for (std::size_t i = 0; i < sol.rank(); ++i) pi_u.push_back(sol.basis().row(i));
    return finish_u_data(tables, std::move(pi_u));
}

UData compute_u_data(const SymbolTables& tables, const std::vector<Vector>& custom_pi_u) {
    const Submodule sol = canonical_u_module(tables);
    const Submodule given =
        Submodule::span(tables.rep.ring, tables.rep.labels.size(), custom_pi_u);
    if (given != sol)
        throw domain_error("custom u images do not span the canonical solution module");
    return finish_u_data(tables, custom_pi_u);
}

Polynomial rho_section(const UData& ud, const MixedElement& s) {
    Polynomial out = Polynomial::zero(ud.y_alphabet, ud.tables.rep.ring, false);
    for (const auto& [w, c] : s.t_part.terms()) out.add_term(w, c);
    if (!s.is_zero_vector()) {
        const auto coeffs = solve_left(ud.pi_matrix, s.v_part);
        if (!coeffs)
            throw domain_error("element is outside the image of the section");
        for (std::size_t j = 0; j < ud.u_count(); ++j)
            if (!(*coeffs)[j].is_zero())
                out.add_term({static_cast<std::uint32_t>(ud.u_letter(j))}, (*coeffs)[j]);
    }
    return out;
}

MixedElement pi_project(const UData& ud, const Polynomial& lifted) {
    if (lifted.alphabet() != ud.y_alphabet)
        throw domain_error("polynomial is not over the lifted alphabet");
    MixedElement s = mixed_zero(ud.tables);
    const std::size_t nt = ud.t_count();
    for (const auto& [w, c] : lifted.terms()) {
        bool pure_t = true;
        for (std::uint32_t letter : w)
            if (letter >= nt) pure_t = false;
        if (pure_t) {
            if (w.empty()) throw domain_error("unit has no projection");
            s.t_part.add_term(w, c);
            continue;
        }
        if (w.size() != 1)
            throw domain_error("u symbols may only occur as degree-one terms");
        const std::size_t j = w[0] - nt;
        for (std::size_t b = 0; b < s.v_part.size(); ++b)
            s.v_part[b] = s.v_part[b] + c * ud.pi_u[j][b];
    }
    return s;
}

Polynomial starbar_act(const UData& ud, const Polynomial& lifted, const Polynomial& p) {
    return rho_section(ud, star_act(ud.tables, pi_project(ud, lifted), p));
}

Polynomial phibar(const UData& ud, const Polynomial& p) {
    if (!ud.tables.rep.is_member(p))
        throw domain_error("polynomial is not a member of the right ideal");
    return rho_section(ud, phi(ud.tables, p.embed_unital()));
}

AlgebraHom psibar_hom(const UData& ud) {
    AlgebraHom hom;
    hom.source = ud.y_alphabet;
    hom.target = ud.tables.rep.alphabet;
    hom.ring = ud.tables.rep.ring;
    hom.source_unital = false;
    hom.target_unital = true;
    hom.images = ud.tables.psi_t;
    for (std::size_t j = 0; j < ud.u_count(); ++j) {
        Polynomial img = Polynomial::zero(ud.tables.rep.alphabet, hom.ring, true);
        for (std::size_t b = 0; b < ud.pi_u[j].size(); ++b)
            if (!ud.pi_u[j][b].is_zero())
                img = img + ud.pi_u[j][b] * ud.tables.rep.representative(b);
        hom.images.push_back(std::move(img));
    }
    return hom;
}

Polynomial psibar_eval(const UData& ud, const Polynomial& over_y) {
    AlgebraHom hom = psibar_hom(ud);
    hom.source_unital = over_y.unital();
    return apply_hom(hom, over_y).restrict_nonunital();
}

Polynomial y_witness(const UData& ud, std::size_t letter) {
    return psibar_eval(
        ud, Polynomial::variable(ud.y_alphabet, ud.tables.rep.ring, false, letter));
}

} // namespace corank
