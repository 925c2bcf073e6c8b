#include "corank/rep.hpp"

namespace corank {

namespace {

Vector flatten(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            v.push_back(m.at(i, j));
    return v;
}

Matrix unflatten(Ring ring, std::size_t n, const Vector& v) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = v[i * n + j];
    return m;
}

} // namespace

std::string ideal_class_name(IdealClass c) {
    switch (c) {
    case IdealClass::submodule_only: return "submodule_only";
    case IdealClass::subalgebra: return "subalgebra";
    case IdealClass::right_ideal: return "right_ideal";
    case IdealClass::two_sided_ideal: return "two_sided_ideal";
    }
    return "?";
}

Polynomial CyclicModuleRep::representative(std::size_t label_index) const {
    if (label_index >= labels.size())
        throw domain_error("representative: label index out of range");
    if (label_index == 0)
        return Polynomial::one(alphabet, ring);
    return representatives[label_index - 1].embed_unital();
}

Vector CyclicModuleRep::act(const Vector& v, const Polynomial& p) const {
    if (v.size() != dim())
        throw domain_error("act: vector has wrong rank");
    Vector out = zero_vector(ring, dim());
    for (const auto& [w, c] : p.terms()) {
        Vector cur = v;
        for (auto letter : w)
            cur = mul(cur, action[letter]);
        out = add(out, scale(c, cur));
    }
    return out;
}

Vector CyclicModuleRep::class_vector(const Polynomial& p) const {
    if (p.unital())
        throw domain_error("class_vector: expected a non-unital polynomial");
    if (!(p.alphabet() == alphabet) || p.ring() != ring)
        throw domain_error("class_vector: wrong alphabet or ring");
    return act(unit_vector(ring, dim(), 0), p);
}

Vector CyclicModuleRep::coset_vector(const Polynomial& p) const {
    Vector residue = relations.reduce(class_vector(p)).residue;
    // solve residue = sum_b c_b g_b + (element of N)
    Matrix stacked(ring, 0, dim());
    for (std::size_t b = 1; b < dim(); ++b)
        stacked.append_row(unit_vector(ring, dim(), b));
    for (std::size_t i = 0; i < relations.basis().rows(); ++i)
        stacked.append_row(relations.basis().row(i));
    auto y = solve_left(stacked, residue);
    if (!y)
        throw domain_error("coset_vector: class not expressible over the basis (V3/V4)");
    return Vector(y->begin(), y->begin() + static_cast<long>(corank()));
}

bool CyclicModuleRep::is_member(const Polynomial& p) const {
    return relations.contains(class_vector(p));
}

ValidationReport CyclicModuleRep::validate() const {
    ValidationReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };

    if (labels.empty() || labels[0] != "1")
        fail("structure: basis labels must start with \"1\"");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                fail("structure: duplicate basis label \"" + labels[i] + "\"");
    if (representatives.size() + 1 != labels.size())
        fail("structure: need exactly one representative per non-unit label");
    if (action.size() != alphabet.size())
        fail("structure: need exactly one action matrix per variable");
    for (const auto& m : action)
        if (m.rows() != dim() || m.cols() != dim() || m.ring() != ring)
            fail("structure: action matrix shape or ring mismatch");
    if (relations.ambient() != dim() || relations.ring() != ring)
        fail("structure: relation lattice has wrong ambient rank or ring");
    for (const auto& r : representatives)
        if (r.unital() || !(r.alphabet() == alphabet) || r.ring() != ring)
            fail("structure: representatives must be non-unital polynomials over X");
    if (!report.ok)
        return report;

    for (std::size_t b = 1; b < dim(); ++b) {
        Vector diff = sub(class_vector(representatives[b - 1]), unit_vector(ring, dim(), b));
        if (!relations.contains(diff))
            fail("V1 violated: class of representative \"" + labels[b] +
                 "\" is not its basis vector modulo N");
    }
    for (std::size_t x = 0; x < alphabet.size(); ++x)
        for (std::size_t i = 0; i < relations.basis().rows(); ++i)
            if (!relations.contains(mul(relations.basis().row(i), action[x])))
                fail("V2 violated: N is not invariant under the action of \"" +
                     alphabet.name(x) + "\"");

    std::vector<Vector> span_b_gens;
    for (std::size_t b = 1; b < dim(); ++b)
        span_b_gens.push_back(unit_vector(ring, dim(), b));
    for (std::size_t i = 0; i < relations.basis().rows(); ++i)
        span_b_gens.push_back(relations.basis().row(i));
    Submodule span_b = Submodule::span(ring, dim(), span_b_gens);
    for (std::size_t x = 0; x < alphabet.size(); ++x) {
        if (!span_b.contains(mul(unit_vector(ring, dim(), 0), action[x])))
            fail("V3 violated: e acted by \"" + alphabet.name(x) +
                 "\" leaves span{b} + N");
        for (std::size_t b = 1; b < dim(); ++b)
            if (!span_b.contains(mul(unit_vector(ring, dim(), b), action[x])))
                fail("V4 violated: basis vector \"" + labels[b] + "\" acted by \"" +
                     alphabet.name(x) + "\" leaves span{b} + N");
    }
    if (!report.ok)
        return report;

    // R is always a right ideal. Two-sidedness: with A* the span closure of
    // all action words, H* = { m in A* : e*m in N } equals the span of
    // rho(R), so R is two-sided iff e*rho(x)*h stays in N for all x and all
    // basis elements h of H*.
    const std::size_t n = dim();
    std::vector<Vector> astar_gens;
    for (const auto& m : action)
        astar_gens.push_back(flatten(m));
    Submodule astar = Submodule::span(ring, n * n, astar_gens);
    while (true) {
        std::vector<Vector> next_gens;
        for (std::size_t i = 0; i < astar.basis().rows(); ++i) {
            Matrix m = unflatten(ring, n, astar.basis().row(i));
            for (const auto& a : action)
                next_gens.push_back(flatten(m * a));
        }
        Submodule next = astar.sum(Submodule::span(ring, n * n, next_gens));
        if (next == astar)
            break;
        astar = next;
    }
    Matrix top_rows(ring, astar.basis().rows(), n);
    for (std::size_t i = 0; i < astar.basis().rows(); ++i) {
        const Vector full = astar.basis().row(i);
        top_rows.set_row(i, Vector(full.begin(), full.begin() + static_cast<long>(n)));
    }
    Submodule hstar_coords = preimage_of_span(top_rows, relations);
    bool two_sided = true;
    for (std::size_t i = 0; i < hstar_coords.basis().rows(); ++i) {
        Vector coeffs = hstar_coords.basis().row(i);
        Vector hv = zero_vector(ring, n * n);
        for (std::size_t j = 0; j < astar.basis().rows(); ++j)
            hv = add(hv, scale(coeffs[j], astar.basis().row(j)));
        Matrix h = unflatten(ring, n, hv);
        for (const auto& a : action) {
            Vector e0 = unit_vector(ring, n, 0);
            if (!relations.contains(mul(mul(e0, a), h))) {
                two_sided = false;
                break;
            }
        }
        if (!two_sided)
            break;
    }
    report.ideal_class = two_sided ? IdealClass::two_sided_ideal : IdealClass::right_ideal;
    return report;
}

Vector AlgebraRep::multiply(const Vector& a, const Vector& b) const {
    const std::size_t k = rank();
    if (a.size() != k || b.size() != k)
        throw domain_error("multiply: rank mismatch");
    Vector out = zero_vector(ring, k);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < k; ++j) {
            if (b[j].is_zero())
                continue;
            out = add(out, scale(a[i] * b[j], structure[i][j]));
        }
    }
    return out;
}

Vector AlgebraRep::image_of(const Polynomial& p) const {
    if (p.unital())
        throw domain_error("image_of: expected a non-unital polynomial");
    if (!(p.alphabet() == alphabet) || p.ring() != ring)
        throw domain_error("image_of: wrong alphabet or ring");
    Vector out = zero_vector(ring, rank());
    for (const auto& [w, c] : p.terms()) {
        Vector cur = images[w[0]];
        for (std::size_t i = 1; i < w.size(); ++i)
            cur = multiply(cur, images[w[i]]);
        out = add(out, scale(c, cur));
    }
    return out;
}

Submodule AlgebraRep::effective_marked() const { return marked.sum(relations); }

bool AlgebraRep::is_member(const Polynomial& p) const {
    return effective_marked().contains(image_of(p));
}

ValidationReport AlgebraRep::validate() const {
    ValidationReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };
    const std::size_t k = rank();

    for (std::size_t i = 0; i < basis_names.size(); ++i)
        for (std::size_t j = i + 1; j < basis_names.size(); ++j)
            if (basis_names[i] == basis_names[j])
                fail("structure: duplicate basis name \"" + basis_names[i] + "\"");
    if (images.size() != alphabet.size())
        fail("structure: need exactly one image vector per variable");
    for (const auto& v : images)
        if (v.size() != k)
            fail("structure: image vector has wrong rank");
    if (structure.size() != k)
        fail("structure: product table must have one row per basis element");
    for (const auto& row : structure) {
        if (row.size() != k)
            fail("structure: product table must be square");
        for (const auto& v : row)
            if (v.size() != k)
                fail("structure: product vector has wrong rank");
    }
    if (relations.ambient() != k || marked.ambient() != k)
        fail("structure: relation or marked submodule has wrong ambient rank");
    if (!report.ok)
        return report;

    for (std::size_t i = 0; i < relations.basis().rows(); ++i) {
        Vector n = relations.basis().row(i);
        for (std::size_t j = 0; j < k; ++j) {
            Vector ej = unit_vector(ring, k, j);
            if (!relations.contains(multiply(n, ej)) || !relations.contains(multiply(ej, n)))
                fail("compatibility violated: products of relations with \"" +
                     basis_names[j] + "\" leave the relation lattice");
        }
    }
    for (std::size_t i = 0; i < k && report.ok; ++i)
        for (std::size_t j = 0; j < k && report.ok; ++j)
            for (std::size_t l = 0; l < k; ++l) {
                Vector ei = unit_vector(ring, k, i);
                Vector ej = unit_vector(ring, k, j);
                Vector el = unit_vector(ring, k, l);
                Vector lhs = multiply(multiply(ei, ej), el);
                Vector rhs = multiply(ei, multiply(ej, el));
                if (!relations.contains(sub(lhs, rhs))) {
                    fail("associativity violated modulo relations at (" + basis_names[i] +
                         ", " + basis_names[j] + ", " + basis_names[l] + ")");
                    break;
                }
            }
    if (!report.ok)
        return report;

    Submodule generated = closure_submodule(
        *this, Submodule::span(ring, k, images), ClosureMode::subalgebra);
    if (generated.sum(relations) != Submodule::full(ring, k))
        fail("surjectivity violated: images do not generate Q");
    if (!report.ok)
        return report;

    Submodule target = effective_marked();
    auto closed_under = [&](bool right_side) {
        for (std::size_t i = 0; i < marked.basis().rows(); ++i) {
            Vector s = marked.basis().row(i);
            for (std::size_t j = 0; j < k; ++j) {
                Vector ej = unit_vector(ring, k, j);
                Vector prod = right_side ? multiply(s, ej) : multiply(ej, s);
                if (!target.contains(prod))
                    return false;
            }
        }
        return true;
    };
    bool sub_closed = true;
    for (std::size_t i = 0; i < marked.basis().rows() && sub_closed; ++i)
        for (std::size_t j = 0; j < marked.basis().rows() && sub_closed; ++j)
            if (!target.contains(multiply(marked.basis().row(i), marked.basis().row(j))))
                sub_closed = false;
    if (!sub_closed)
        report.ideal_class = IdealClass::submodule_only;
    else if (!closed_under(true))
        report.ideal_class = IdealClass::subalgebra;
    else if (!closed_under(false))
        report.ideal_class = IdealClass::right_ideal;
    else
        report.ideal_class = IdealClass::two_sided_ideal;
    return report;
}

Submodule closure_submodule(const AlgebraRep& rep, const Submodule& seed, ClosureMode mode) {
    const std::size_t k = rep.rank();
    if (seed.ambient() != k)
        throw domain_error("closure_submodule: ambient mismatch");
    Submodule current = seed;
    while (true) {
        std::vector<Vector> fresh;
        for (std::size_t i = 0; i < current.basis().rows(); ++i) {
            Vector v = current.basis().row(i);
            if (mode == ClosureMode::left_right_ideal) {
                for (std::size_t j = 0; j < k; ++j) {
                    Vector ej = unit_vector(rep.ring, k, j);
                    fresh.push_back(rep.multiply(v, ej));
                    fresh.push_back(rep.multiply(ej, v));
                }
            } else {
                for (std::size_t j = 0; j < current.basis().rows(); ++j)
                    fresh.push_back(rep.multiply(v, current.basis().row(j)));
            }
        }
        Submodule next = current.sum(Submodule::span(rep.ring, k, fresh));
        if (next == current)
            return current;
        current = next;
    }
}

AlgebraRep reduce_to_ideal(const AlgebraRep& rep) {
    ValidationReport report = rep.validate();
    if (!report.ok)
        throw domain_error("reduce_to_ideal: invalid representation: " + report.violations[0]);
    if (report.ideal_class == IdealClass::submodule_only)
        throw domain_error("reduce_to_ideal: marked submodule is not a subalgebra");
    const std::size_t k = rep.rank();
    const Ring ring = rep.ring;

    // H' = { s in S+N : s q_j, q_i s, q_i s q_j all stay in S+N }.
    Submodule target = rep.effective_marked();
    const std::size_t m = target.rank();
    std::vector<Matrix> maps;
    std::vector<Submodule> spans;
    auto add_condition = [&](auto&& transform) {
        Matrix mat(ring, m, k);
        for (std::size_t i = 0; i < m; ++i)
            mat.set_row(i, transform(target.basis().row(i)));
        maps.push_back(std::move(mat));
        spans.push_back(target);
    };
    for (std::size_t j = 0; j < k; ++j) {
        Vector ej = unit_vector(ring, k, j);
        add_condition([&](const Vector& s) { return rep.multiply(s, ej); });
        add_condition([&](const Vector& s) { return rep.multiply(ej, s); });
        for (std::size_t i = 0; i < k; ++i) {
            Vector ei = unit_vector(ring, k, i);
            add_condition(
                [&](const Vector& s) { return rep.multiply(rep.multiply(ei, s), ej); });
        }
    }
    Submodule coeffs = preimage_of_span_multi(ring, m, maps, spans);
    std::vector<Vector> h_gens;
    for (std::size_t i = 0; i < coeffs.basis().rows(); ++i) {
        Vector c = coeffs.basis().row(i);
        Vector h = zero_vector(ring, k);
        for (std::size_t j = 0; j < m; ++j)
            h = add(h, scale(c[j], target.basis().row(j)));
        h_gens.push_back(std::move(h));
    }
    Submodule hprime = Submodule::span(ring, k, h_gens);
    Submodule ideal = closure_submodule(rep, hprime, ClosureMode::left_right_ideal);

    QuotientCoordinates qc = quotient_coordinates(ideal);
    const std::size_t g = qc.pres.generator_count;
    AlgebraRep out;
    out.ring = ring;
    out.alphabet = rep.alphabet;
    for (std::size_t i = 0; i < g; ++i)
        out.basis_names.push_back("q" + std::to_string(i + 1));
    std::vector<Vector> rel_rows;
    for (std::size_t i = 0; i < qc.pres.relation_rows.rows(); ++i)
        rel_rows.push_back(qc.pres.relation_rows.row(i));
    out.relations = Submodule::span(ring, g, rel_rows);
    out.structure.assign(g, std::vector<Vector>(g, zero_vector(ring, g)));
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j)
            out.structure[i][j] =
                mul(rep.multiply(qc.section.row(i), qc.section.row(j)), qc.forward);
    for (const auto& img : rep.images)
        out.images.push_back(mul(img, qc.forward));
    std::vector<Vector> marked_rows;
    for (std::size_t i = 0; i < rep.marked.basis().rows(); ++i)
        marked_rows.push_back(mul(rep.marked.basis().row(i), qc.forward));
    out.marked = Submodule::span(ring, g, marked_rows);
    return out;
}

} // namespace corank
