#include "corank/symbols.hpp"
#include "corank/hom.hpp"

namespace corank {

std::size_t SymbolTables::t_index(std::size_t a, std::size_t x, std::size_t b) const {
    const std::size_t nl = rep.labels.size();
    return (a * rep.alphabet.size() + x) * nl + b;
}

void SymbolTables::t_decode(std::size_t index, std::size_t& a, std::size_t& x, std::size_t& b) const {
    const std::size_t nl = rep.labels.size();
    b = index % nl;
    index /= nl;
    x = index % rep.alphabet.size();
    a = index / rep.alphabet.size();
}

SymbolTables build_symbol_tables(const CyclicModuleRep& rep) {
    SymbolTables tables;
    tables.rep = rep;
    const std::size_t nl = rep.labels.size();
    const std::size_t nx = rep.alphabet.size();
    const std::size_t k = rep.corank();

    std::vector<std::string> t_names;
    t_names.reserve(nl * nx * nl);
    for (std::size_t a = 0; a < nl; ++a)
        for (std::size_t x = 0; x < nx; ++x)
            for (std::size_t b = 0; b < nl; ++b)
                t_names.push_back("t_" + rep.labels[a] + "_" + rep.alphabet.name(x) + "_" +
                                  rep.labels[b]);
    std::vector<std::string> z_names = t_names;
    for (std::size_t b = 0; b < nl; ++b) z_names.push_back("v_" + rep.labels[b]);
    tables.t_alphabet = Alphabet(t_names);
    tables.z_alphabet = Alphabet(z_names);

    tables.coset.assign(nl, std::vector<Vector>(nx));
    for (std::size_t b = 0; b < nl; ++b) {
        const Polynomial rb = rep.representative(b);
        for (std::size_t x = 0; x < nx; ++x) {
            const Polynomial rbx = (rb * Polynomial::variable(rep.alphabet, rep.ring, true, x))
                                       .restrict_nonunital();
            tables.coset[b][x] = rep.coset_vector(rbx);
        }
    }

    tables.psi_v.reserve(nl);
    for (std::size_t b = 0; b < nl; ++b) tables.psi_v.push_back(rep.representative(b));

    tables.psi_t.reserve(t_names.size());
    for (std::size_t a = 0; a < nl; ++a)
        for (std::size_t x = 0; x < nx; ++x) {
            Polynomial head = (rep.representative(a) *
                               Polynomial::variable(rep.alphabet, rep.ring, true, x));
            for (std::size_t c = 1; c <= k; ++c) {
                const Scalar& co = tables.coset[a][x][c - 1];
                if (!co.is_zero()) head = head - co * rep.representative(c);
            }
            for (std::size_t b = 0; b < nl; ++b) {
                Polynomial image = head * rep.representative(b);
                if (!rep.is_member(image.restrict_nonunital()))
                    throw domain_error("symbol image escapes the right ideal");
                tables.psi_t.push_back(image);
            }
        }
    return tables;
}

bool MixedElement::is_zero_vector() const {
    for (const auto& c : v_part)
        if (!c.is_zero()) return false;
    return true;
}

bool MixedElement::operator==(const MixedElement& o) const {
    return t_part == o.t_part && v_part == o.v_part;
}

MixedElement mixed_zero(const SymbolTables& tables) {
    MixedElement s;
    s.t_part = Polynomial::zero(tables.t_alphabet, tables.rep.ring, false);
    s.v_part = zero_vector(tables.rep.ring, tables.rep.labels.size());
    return s;
}

MixedElement mixed_add(const MixedElement& a, const MixedElement& b) {
    MixedElement out;
    out.t_part = a.t_part + b.t_part;
    out.v_part = add(a.v_part, b.v_part);
    return out;
}

MixedElement mixed_scale(const Scalar& c, const MixedElement& a) {
    MixedElement out;
    out.t_part = c * a.t_part;
    out.v_part = scale(c, a.v_part);
    return out;
}

namespace {

MixedElement act_letter(const SymbolTables& tables, const MixedElement& s, std::size_t x) {
    const std::size_t k = tables.rep.corank();
    MixedElement out = mixed_zero(tables);
    for (const auto& [w, c] : s.t_part.terms()) {
        std::size_t a, y, b;
        tables.t_decode(w.back(), a, y, b);
        Word prefix(w.begin(), w.end() - 1);
        Word head = prefix;
        head.push_back(static_cast<std::uint32_t>(tables.t_index(a, y, 0)));
        head.push_back(static_cast<std::uint32_t>(tables.t_index(b, x, 0)));
        out.t_part.add_term(head, c);
        const Vector& cos = tables.coset[b][x];
        for (std::size_t cc = 1; cc <= k; ++cc) {
            if (cos[cc - 1].is_zero()) continue;
            Word tail = prefix;
            tail.push_back(static_cast<std::uint32_t>(tables.t_index(a, y, cc)));
            out.t_part.add_term(tail, c * cos[cc - 1]);
        }
    }
    for (std::size_t b = 0; b < tables.rep.labels.size(); ++b) {
        const Scalar& beta = s.v_part[b];
        if (beta.is_zero()) continue;
        out.t_part.add_term({static_cast<std::uint32_t>(tables.t_index(b, x, 0))}, beta);
        const Vector& cos = tables.coset[b][x];
        for (std::size_t cc = 1; cc <= k; ++cc)
            out.v_part[cc] = out.v_part[cc] + beta * cos[cc - 1];
    }
    return out;
}

} // namespace

MixedElement star_act(const SymbolTables& tables, const MixedElement& s, const Polynomial& p) {
    if (p.alphabet() != tables.rep.alphabet)
        throw domain_error("action polynomial is over the wrong alphabet");
    MixedElement out = mixed_zero(tables);
    for (const auto& [w, c] : p.terms()) {
        MixedElement cur = s;
        for (std::uint32_t x : w) cur = act_letter(tables, cur, x);
        out = mixed_add(out, mixed_scale(c, cur));
    }
    return out;
}

MixedElement phi(const SymbolTables& tables, const Polynomial& p) {
    MixedElement unit = mixed_zero(tables);
    unit.v_part[0] = Scalar::one(tables.rep.ring);
    return star_act(tables, unit, p);
}

Polynomial psi_eval(const SymbolTables& tables, const MixedElement& s) {
    AlgebraHom hom;
    hom.source = tables.t_alphabet;
    hom.target = tables.rep.alphabet;
    hom.ring = tables.rep.ring;
    hom.source_unital = false;
    hom.target_unital = true;
    hom.images = tables.psi_t;
    Polynomial out = apply_hom(hom, s.t_part);
    for (std::size_t b = 0; b < tables.rep.labels.size(); ++b)
        if (!s.v_part[b].is_zero()) out = out + s.v_part[b] * tables.psi_v[b];
    return out;
}

Polynomial psi_eval(const SymbolTables& tables, const Polynomial& over_z) {
    if (over_z.alphabet() != tables.z_alphabet)
        throw domain_error("polynomial is not over the symbol alphabet");
    AlgebraHom hom;
    hom.source = tables.z_alphabet;
    hom.target = tables.rep.alphabet;
    hom.ring = tables.rep.ring;
    hom.source_unital = over_z.unital();
    hom.target_unital = true;
    hom.images = tables.psi_t;
    hom.images.insert(hom.images.end(), tables.psi_v.begin(), tables.psi_v.end());
    return apply_hom(hom, over_z);
}

} // namespace corank
