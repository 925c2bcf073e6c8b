#include "corank/presentation.hpp"
#include "corank/rng.hpp"

#include <algorithm>

namespace corank {

namespace {

Scalar random_scalar(Rng& rng, const Ring& ring) {
    if (ring.kind == RingKind::prime_field)
        return Scalar(ring, Int(rng.below(static_cast<std::uint64_t>(ring.p))));
    Int num(rng.range(-9, 9));
    if (ring.kind == RingKind::rationals && rng.below(3) == 0)
        return Scalar(ring, num, Int(rng.range(1, 4)));
    return Scalar(ring, num);
}

Polynomial random_nonunital(Rng& rng, const Alphabet& a, const Ring& ring,
                            std::size_t max_deg) {
    Polynomial p = Polynomial::zero(a, ring, false);
    const std::size_t terms = 1 + rng.below(5);
    for (std::size_t t = 0; t < terms; ++t) {
        const std::size_t len = 1 + rng.below(max_deg);
        Word w;
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(static_cast<std::uint32_t>(rng.below(a.size())));
        p.add_term(w, random_scalar(rng, ring));
    }
    return p;
}

} // namespace

Presentation present_right_ideal(const UData& ud) {
    Presentation pres;
    pres.ring = ud.tables.rep.ring;
    pres.base_alphabet = ud.tables.rep.alphabet;
    pres.gen_alphabet = ud.y_alphabet;

    const std::size_t ny = ud.y_alphabet.size();
    pres.witnesses.reserve(ny);
    for (std::size_t y = 0; y < ny; ++y) pres.witnesses.push_back(y_witness(ud, y));

    // linear relations among the u symbols
    for (std::size_t i = 0; i < ud.m_generators.rank(); ++i) {
        const Vector row = ud.m_generators.basis().row(i);
        Polynomial rel = Polynomial::zero(ud.y_alphabet, pres.ring, false);
        for (std::size_t j = 0; j < ud.u_count(); ++j)
            if (!row[j].is_zero())
                rel.add_term({static_cast<std::uint32_t>(ud.u_letter(j))}, row[j]);
        pres.relations.push_back(std::move(rel));
        ++pres.w_u_count;
    }

    // each generator equals the lift of its witness
    for (std::size_t y = 0; y < ny; ++y) {
        Polynomial rel = Polynomial::variable(ud.y_alphabet, pres.ring, false, y) -
                         phibar(ud, pres.witnesses[y]);
        pres.relations.push_back(std::move(rel));
        ++pres.w_y_count;
    }

    // products rewrite through the action
    for (std::size_t z = 0; z < ny; ++z) {
        const Polynomial zvar = Polynomial::variable(ud.y_alphabet, pres.ring, false, z);
        for (std::size_t y = 0; y < ny; ++y) {
            Polynomial rel =
                Polynomial::monomial(ud.y_alphabet, pres.ring, false,
                                     {static_cast<std::uint32_t>(z),
                                      static_cast<std::uint32_t>(y)},
                                     Scalar::one(pres.ring)) -
                starbar_act(ud, zvar, pres.witnesses[y]);
            pres.relations.push_back(std::move(rel));
            ++pres.w_yy_count;
        }
    }

    for (const Polynomial& rel : pres.relations)
        if (!psibar_eval(ud, rel).is_zero())
            throw domain_error("presentation relation fails to vanish under evaluation");
    return pres;
}

Presentation present_right_ideal(const CyclicModuleRep& rep) {
    return present_right_ideal(compute_u_data(build_symbol_tables(rep)));
}

Presentation simplify_presentation(const Presentation& pres) {
    const std::size_t n = pres.gen_alphabet.size();
    std::vector<std::size_t> remap(n, Alphabet::npos);
    std::vector<std::string> kept_names;
    std::vector<Polynomial> kept_witnesses;
    for (std::size_t y = 0; y < n; ++y) {
        if (pres.witnesses[y].is_zero()) continue;
        remap[y] = kept_names.size();
        kept_names.push_back(pres.gen_alphabet.name(y));
        kept_witnesses.push_back(pres.witnesses[y]);
    }

    Presentation out;
    out.ring = pres.ring;
    out.base_alphabet = pres.base_alphabet;
    out.gen_alphabet = Alphabet(kept_names);
    out.witnesses = std::move(kept_witnesses);

    const auto translate = [&](const Polynomial& rel) {
        Polynomial mapped = Polynomial::zero(out.gen_alphabet, pres.ring, false);
        for (const auto& [w, c] : rel.terms()) {
            Word nw;
            bool dropped = false;
            for (std::uint32_t letter : w) {
                if (remap[letter] == Alphabet::npos) {
                    dropped = true;
                    break;
                }
                nw.push_back(static_cast<std::uint32_t>(remap[letter]));
            }
            if (!dropped) mapped.add_term(nw, c);
        }
        return mapped;
    };

    std::size_t index = 0;
    const auto take = [&](std::size_t count, std::size_t& counter, bool skip_singletons) {
        for (std::size_t i = 0; i < count; ++i, ++index) {
            const Polynomial& rel = pres.relations[index];
            if (skip_singletons && rel.terms().size() == 1) continue;
            Polynomial mapped = translate(rel);
            if (mapped.is_zero()) continue;
            out.relations.push_back(std::move(mapped));
            ++counter;
        }
    };
    take(pres.w_u_count, out.w_u_count, false);
    take(pres.w_y_count, out.w_y_count, true);
    take(pres.w_yy_count, out.w_yy_count, false);
    take(pres.extra_count, out.extra_count, false);
    return out;
}

VerificationReport verify_presentation(const CyclicModuleRep& rep, const Presentation& pres,
                                       std::size_t deg_cap, std::size_t samples,
                                       std::uint64_t seed) {
    VerificationReport report;

    // soundness: every relation collapses under witness substitution
    AlgebraHom witness_hom;
    witness_hom.source = pres.gen_alphabet;
    witness_hom.target = pres.base_alphabet;
    witness_hom.ring = pres.ring;
    witness_hom.source_unital = false;
    witness_hom.target_unital = false;
    witness_hom.images = pres.witnesses;
    for (std::size_t i = 0; i < pres.relations.size(); ++i)
        if (!apply_hom(witness_hom, pres.relations[i]).is_zero())
            report.failed_relations.push_back(i);
    report.sound = report.failed_relations.empty();

    // lift-evaluate identity on random members
    const SymbolTables tables = build_symbol_tables(rep);
    const UData ud = compute_u_data(tables);
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        Polynomial q = random_nonunital(rng, rep.alphabet, rep.ring, std::max<std::size_t>(deg_cap, 1));
        const Vector coset = rep.coset_vector(q);
        Polynomial p = q;
        for (std::size_t b = 1; b <= rep.corank(); ++b)
            if (!coset[b - 1].is_zero())
                p = p - coset[b - 1] * rep.representatives[b - 1];
        if (p.is_zero()) continue;
        ++report.identity_samples;
        if (psibar_eval(ud, phibar(ud, p)) != p) ++report.identity_failures;
    }

    // completeness: witness products span the members degree by degree
    report.complete = true;
    std::vector<std::pair<Polynomial, std::size_t>> gens; // witness, degree
    for (const Polynomial& w : pres.witnesses)
        if (!w.is_zero()) gens.emplace_back(w, static_cast<std::size_t>(w.degree()));
    for (std::size_t d = 1; d <= deg_cap; ++d) {
        const std::vector<Word> monomials = enumerate_words(rep.alphabet, 1, d);
        std::map<Word, std::size_t, WordLess> index;
        for (std::size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = i;
        const auto coords = [&](const Polynomial& p) {
            Vector v = zero_vector(rep.ring, monomials.size());
            for (const auto& [w, c] : p.terms()) v[index.at(w)] = c;
            return v;
        };
        const auto from_coords = [&](const Vector& v) {
            Polynomial p = Polynomial::zero(rep.alphabet, rep.ring, false);
            for (std::size_t i = 0; i < monomials.size(); ++i)
                if (!v[i].is_zero()) p.add_term(monomials[i], v[i]);
            return p;
        };

        Matrix class_rows(rep.ring, monomials.size(), rep.dim());
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            const Vector cls = rep.class_vector(
                Polynomial::monomial(rep.alphabet, rep.ring, false, monomials[i],
                                     Scalar::one(rep.ring)));
            for (std::size_t j = 0; j < rep.dim(); ++j) class_rows.at(i, j) = cls[j];
        }
        const Submodule members = preimage_of_span(class_rows, rep.relations);

        // span of witness products, graded by total witness degree
        std::vector<Submodule> bucket(d + 1, Submodule::zero(rep.ring, monomials.size()));
        for (std::size_t w = 1; w <= d; ++w) {
            std::vector<Vector> candidates;
            for (const auto& [g, dg] : gens) {
                if (dg == w) candidates.push_back(coords(g));
                if (dg >= w) continue;
                const Submodule& lower = bucket[w - dg];
                for (std::size_t i = 0; i < lower.rank(); ++i)
                    candidates.push_back(coords(from_coords(lower.basis().row(i)) * g));
            }
            bucket[w] = Submodule::span(rep.ring, monomials.size(), std::move(candidates));
        }
        Submodule achieved = Submodule::zero(rep.ring, monomials.size());
        for (std::size_t w = 1; w <= d; ++w) achieved = achieved.sum(bucket[w]);

        DegreeCheck check;
        check.degree = d;
        check.expected_rank = members.rank();
        check.achieved_rank = achieved.rank();
        check.matched = (achieved == members);
        if (!check.matched) report.complete = false;
        report.degree_checks.push_back(check);
    }
    return report;
}

} // namespace corank
