#include "support.hpp"

namespace corank::testsupport {

Scalar random_scalar(Ring ring, Rng& rng, std::int64_t max_abs) {
    switch (ring.kind) {
        case RingKind::integers:
            return Scalar(ring, rng.range(-max_abs, max_abs));
        case RingKind::rationals: {
            std::int64_t den = rng.range(1, 9);
            return Scalar(ring, Int(rng.range(-max_abs, max_abs)), Int(den));
        }
        case RingKind::prime_field:
            return Scalar(ring, rng.range(0, ring.p - 1));
    }
    return Scalar::zero(ring);
}

Matrix random_matrix(Ring ring, Rng& rng, std::size_t rows, std::size_t cols,
                     std::int64_t max_abs) {
    Matrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(ring, rng, max_abs);
    return m;
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw domain_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Scalar::one(m.ring());
    if (n == 1) return m.at(0, 0);
    Scalar acc = Scalar::zero(m.ring());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Matrix minor(m.ring(), n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Scalar term = m.at(0, j) * determinant(minor);
        if (j % 2) term = -term;
        acc += term;
    }
    return acc;
}

} // namespace corank::testsupport

namespace corank::testsupport {

CyclicModuleRep make_aug1(Ring ring) {
    CyclicModuleRep rep;
    rep.ring = ring;
    rep.alphabet = Alphabet({"x"});
    rep.labels = {"1", "x"};
    rep.representatives = {Polynomial::variable(rep.alphabet, ring, false, 0)};
    rep.relations = Submodule::zero(ring, 2);
    Matrix act(ring, 2, 2);
    act.at(0, 1) = Scalar::one(ring);
    act.at(1, 1) = Scalar::one(ring);
    rep.action = {act};
    return rep;
}

CyclicModuleRep make_zeven() {
    CyclicModuleRep rep = make_aug1(Ring::integers());
    Vector two = zero_vector(rep.ring, 2);
    two[1] = Scalar(rep.ring, 2);
    rep.relations = Submodule::span(rep.ring, 2, {two});
    return rep;
}

CyclicModuleRep make_rnt() {
    CyclicModuleRep rep;
    rep.ring = Ring::rationals();
    rep.alphabet = Alphabet({"x", "y"});
    rep.labels = {"1", "b1", "b2"};
    const Polynomial x = Polynomial::variable(rep.alphabet, rep.ring, false, 0);
    const Polynomial y = Polynomial::variable(rep.alphabet, rep.ring, false, 1);
    rep.representatives = {x, (x.embed_unital() * y.embed_unital()).restrict_nonunital()};
    rep.relations = Submodule::zero(rep.ring, 3);
    Matrix ax(rep.ring, 3, 3);
    ax.at(0, 1) = Scalar::one(rep.ring);
    Matrix ay(rep.ring, 3, 3);
    ay.at(1, 2) = Scalar::one(rep.ring);
    rep.action = {ax, ay};
    return rep;
}

AlgebraRep make_sub2() {
    AlgebraRep rep;
    rep.ring = Ring::rationals();
    rep.alphabet = Alphabet({"x"});
    rep.basis_names = {"t", "t2"};
    rep.relations = Submodule::zero(rep.ring, 2);
    rep.structure.assign(2, std::vector<Vector>(2, zero_vector(rep.ring, 2)));
    rep.structure[0][0][1] = Scalar::one(rep.ring);
    rep.images = {Vector{Scalar::one(rep.ring), Scalar::zero(rep.ring)}};
    Vector t2 = zero_vector(rep.ring, 2);
    t2[1] = Scalar::one(rep.ring);
    rep.marked = Submodule::span(rep.ring, 2, {t2});
    return rep;
}

AlgebraRep make_f2gen() {
    AlgebraRep rep;
    rep.ring = Ring::prime_field(2);
    rep.alphabet = Alphabet({"x", "y"});
    rep.basis_names = {"q"};
    rep.relations = Submodule::zero(rep.ring, 1);
    rep.structure.assign(1, std::vector<Vector>(1, zero_vector(rep.ring, 1)));
    rep.images = {Vector{Scalar::one(rep.ring)}, Vector{Scalar::one(rep.ring)}};
    rep.marked = Submodule::zero(rep.ring, 1);
    return rep;
}

CyclicModuleRep random_rep(Rng& rng, Ring ring, std::size_t max_vars,
                           std::size_t max_corank) {
    const std::size_t nx = 1 + rng.below(max_vars);
    const std::size_t k = 1 + rng.below(max_corank);

    CyclicModuleRep rep;
    rep.ring = ring;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nx; ++i) names.push_back("x" + std::to_string(i + 1));
    rep.alphabet = Alphabet(names);
    rep.labels = {"1"};
    for (std::size_t b = 1; b <= k; ++b) rep.labels.push_back("b" + std::to_string(b));

    // first variable shifts 1 -> b1 -> ... -> bk, then a random tail
    Matrix shift(ring, k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i) shift.at(i, i + 1) = Scalar::one(ring);
    for (std::size_t c = 1; c <= k; ++c) shift.at(k, c) = random_scalar(ring, rng, 3);
    rep.action = {shift};
    for (std::size_t x = 1; x < nx; ++x) {
        Matrix m(ring, k + 1, k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t c = 1; c <= k; ++c) m.at(i, c) = random_scalar(ring, rng, 3);
        rep.action.push_back(m);
    }

    Word w;
    for (std::size_t b = 1; b <= k; ++b) {
        w.push_back(0);
        rep.representatives.push_back(
            Polynomial::monomial(rep.alphabet, ring, false, w, Scalar::one(ring)));
    }

    const std::uint64_t mode = rng.below(4);
    if (mode == 0) {
        rep.relations = Submodule::zero(ring, k + 1);
    } else {
        const Scalar m = ring.is_field() ? Scalar::one(ring) : Scalar(ring, Int(mode));
        std::vector<Vector> rows;
        for (std::size_t b = 1; b <= k; ++b) {
            Vector v = zero_vector(ring, k + 1);
            v[b] = m;
            rows.push_back(std::move(v));
        }
        rep.relations = Submodule::span(ring, k + 1, rows);
    }
    return rep;
}

Polynomial random_poly(Rng& rng, const Alphabet& a, Ring ring, std::size_t max_deg,
                       std::size_t max_terms, std::int64_t max_abs) {
    Polynomial p = Polynomial::zero(a, ring, false);
    const std::size_t terms = 1 + rng.below(max_terms);
    for (std::size_t t = 0; t < terms; ++t) {
        Word w;
        const std::size_t len = 1 + rng.below(max_deg);
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(static_cast<std::uint32_t>(rng.below(a.size())));
        p.add_term(w, random_scalar(ring, rng, max_abs));
    }
    return p;
}

Polynomial random_member(Rng& rng, const CyclicModuleRep& rep, std::size_t max_deg) {
    const Polynomial q = random_poly(rng, rep.alphabet, rep.ring, max_deg);
    const Vector coset = rep.coset_vector(q);
    Polynomial p = q;
    for (std::size_t b = 1; b <= rep.corank(); ++b)
        if (!coset[b - 1].is_zero()) p = p - coset[b - 1] * rep.representatives[b - 1];
    return p;
}

} // namespace corank::testsupport
