#include "doctest.h"

#include "corank/linalg.hpp"
#include "support.hpp"

#include <vector>

using namespace corank;
using namespace corank::testsupport;

namespace {

Ring Z = Ring::integers();

Vector vec(Ring r, std::vector<std::int64_t> xs) {
    Vector v;
    for (auto x : xs) v.push_back(Scalar(r, x));
    return v;
}

Matrix mat(Ring r, std::vector<std::vector<std::int64_t>> rows) {
    Matrix m(r, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Scalar(r, rows[i][j]);
    return m;
}

void check_hnf_shape(const Matrix& h) {
    const bool field = h.ring().is_field();
    long last_pivot = -1;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t j = 0;
        while (j < h.cols() && h.at(i, j).is_zero()) ++j;
        if (j == h.cols()) { seen_zero_row = true; continue; }
        CHECK_FALSE(seen_zero_row); // zero rows must come last
        CHECK(static_cast<long>(j) > last_pivot);
        last_pivot = static_cast<long>(j);
        if (field) {
            CHECK(h.at(i, j).is_one());
            for (std::size_t k = 0; k < i; ++k) CHECK(h.at(k, j).is_zero());
        } else {
            CHECK(h.at(i, j).num() > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(h.at(k, j).num() >= 0);
                CHECK(h.at(k, j).num() < h.at(i, j).num());
            }
        }
    }
}

} // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("hermite form of a pinned example") {
    Matrix m = mat(Z, {{2, 0}, {3, 3}});
    auto [h, u] = hnf(m);
    CHECK(h == mat(Z, {{1, 3}, {0, 6}}));
    CHECK(u * m == h);
    Scalar d = determinant(u);
    CHECK((d == Scalar(Z, 1) || d == Scalar(Z, -1)));
}

TEST_CASE("smith form of a pinned example") {
    Matrix m = mat(Z, {{2, 0}, {0, 3}});
    auto [s, u, v] = snf(m);
    CHECK(s == mat(Z, {{1, 0}, {0, 6}}));
    CHECK(u * m * v == s);
}

TEST_CASE("kernel of a pinned map") {
    // (a, b) -> 2a + 4b
    Matrix m = mat(Z, {{2}, {4}});
    Submodule k = left_kernel(m);
    CHECK(k == Submodule::span(Z, 2, {vec(Z, {-2, 1})}));
}

TEST_CASE("canonical solve of a pinned system") {
    Matrix m = mat(Z, {{1, 0}, {0, 2}});
    auto x = solve_left(m, vec(Z, {3, 4}));
    REQUIRE(x.has_value());
    CHECK(*x == vec(Z, {3, 2}));
    CHECK_FALSE(solve_left(mat(Z, {{2}}), vec(Z, {1})).has_value());
}

TEST_CASE("submodule reduction of a pinned vector") {
    Submodule s = Submodule::span(Z, 2, {vec(Z, {0, 2})});
    auto r = s.reduce(vec(Z, {1, 5}));
    CHECK(r.residue == vec(Z, {1, 1}));
    CHECK_FALSE(r.in_submodule);
    CHECK(s.reduce(vec(Z, {0, -6})).in_submodule);
}

TEST_CASE("intersection of pinned lattices") {
    Submodule a = Submodule::span(Z, 2, {vec(Z, {2, 0}), vec(Z, {0, 1})});
    Submodule b = Submodule::span(Z, 2, {vec(Z, {1, 1})});
    CHECK(intersect(a, b) == Submodule::span(Z, 2, {vec(Z, {2, 2})}));
}

TEST_CASE("quotient presentation of a pinned lattice") {
    Submodule s = Submodule::span(Z, 2, {vec(Z, {2, 0}), vec(Z, {0, 1})});
    ModulePresentation p = quotient_presentation(s);
    CHECK(p.generator_count == 1);
    CHECK(p.free_rank == 0);
    REQUIRE(p.invariant_factors.size() == 1);
    CHECK(p.invariant_factors[0] == Scalar(Z, 2));
}

TEST_CASE("quotient presentation ignores redundant generators") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng.below(4);
        std::size_t g = 1 + rng.below(4);
        std::vector<Vector> gens;
        for (std::size_t i = 0; i < g; ++i) gens.push_back(random_matrix(Z, rng, 1, n, 9).row(0));
        Submodule s = Submodule::span(Z, n, gens);
        // duplicate and recombine the generating list
        std::vector<Vector> gens2 = gens;
        for (std::size_t i = 0; i + 1 < gens.size(); i += 2) gens2.push_back(add(gens[i], gens[i + 1]));
        gens2.push_back(gens.front());
        Submodule s2 = Submodule::span(Z, n, gens2);
        CHECK(s == s2);
        CHECK(quotient_presentation(s).same_quotient(quotient_presentation(s2)));
    }
}

TEST_CASE("normal forms on random matrices") {
    std::vector<Ring> rings = {Z, Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3),
                               Ring::prime_field(5)};
    Rng rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        Ring ring = rings[trial % rings.size()];
        std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        Matrix m = random_matrix(ring, rng, rows, cols, 100);

        auto [h, u] = hnf(m);
        CHECK(u * m == h);
        check_hnf_shape(h);
        CHECK(determinant(u).is_unit());

        auto [s, su, sv] = snf(m);
        CHECK(su * m * sv == s);
        CHECK(determinant(su).is_unit());
        CHECK(determinant(sv).is_unit());
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = 0; j < s.cols(); ++j)
                if (i != j) CHECK(s.at(i, j).is_zero());
        auto d = diagonal(s);
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i].is_zero()) CHECK(d[i + 1].is_zero());
            else CHECK(d[i].divides(d[i + 1]));
        }
        if (!ring.is_field())
            for (const auto& di : d) CHECK(di.num() >= 0);

        Submodule k = left_kernel(m);
        for (std::size_t i = 0; i < k.basis().rows(); ++i)
            CHECK(is_zero(mul(k.basis().row(i), m)));
    }
}

TEST_CASE("kernel matches brute force over small prime fields") {
    for (std::int64_t p : {2, 3}) {
        Ring f = Ring::prime_field(p);
        Rng rng(100 + p);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
            Matrix m = random_matrix(f, rng, rows, cols, p - 1);
            Submodule k = left_kernel(m);
            std::size_t count = 0;
            std::size_t total = 1;
            for (std::size_t i = 0; i < rows; ++i) total *= p;
            for (std::size_t code = 0; code < total; ++code) {
                std::size_t c = code;
                Vector v = zero_vector(f, rows);
                for (std::size_t i = 0; i < rows; ++i) { v[i] = Scalar(f, (std::int64_t)(c % p)); c /= p; }
                if (is_zero(mul(v, m))) {
                    ++count;
                    CHECK(k.contains(v));
                }
            }
            std::size_t expect = 1;
            for (std::size_t i = 0; i < k.rank(); ++i) expect *= p;
            CHECK(count == expect);
        }
    }
}

TEST_CASE("solve is canonical and additive on solvable targets") {
    std::vector<Ring> rings = {Z, Ring::rationals(), Ring::prime_field(5)};
    Rng rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Ring ring = rings[trial % rings.size()];
        std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(4);
        Matrix m = random_matrix(ring, rng, rows, cols, 9);
        Vector x1 = random_matrix(ring, rng, 1, rows, 9).row(0);
        Vector x2 = random_matrix(ring, rng, 1, rows, 9).row(0);
        Vector b1 = mul(x1, m), b2 = mul(x2, m);
        auto s1 = solve_left(m, b1), s2 = solve_left(m, b2), s12 = solve_left(m, add(b1, b2));
        REQUIRE(s1.has_value());
        REQUIRE(s2.has_value());
        REQUIRE(s12.has_value());
        CHECK(mul(*s1, m) == b1);
        CHECK(mul(*s2, m) == b2);
        CHECK(add(*s1, *s2) == *s12);
        // determinism
        CHECK(solve_left(m, b1) == s1);
    }
}

TEST_CASE("reduction is constant on cosets") {
    std::vector<Ring> rings = {Z, Ring::rationals(), Ring::prime_field(3)};
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        Ring ring = rings[trial % rings.size()];
        std::size_t n = 1 + rng.below(5);
        std::vector<Vector> gens;
        for (std::size_t i = 0; i < 1 + rng.below(3); ++i)
            gens.push_back(random_matrix(ring, rng, 1, n, 9).row(0));
        Submodule s = Submodule::span(ring, n, gens);
        Vector v = random_matrix(ring, rng, 1, n, 9).row(0);
        Vector shift = zero_vector(ring, n);
        for (const auto& g : gens) shift = add(shift, scale(random_scalar(ring, rng, 5), g));
        CHECK(s.reduce(v).residue == s.reduce(add(v, shift)).residue);
        CHECK(s.reduce(shift).in_submodule);
        CHECK(is_zero(s.reduce(zero_vector(ring, n)).residue));
    }
}

TEST_CASE("intersection is symmetric and correct on field spans") {
    Ring q = Ring::rationals();
    Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng.below(4);
        auto rand_span = [&](std::size_t g) {
            std::vector<Vector> gens;
            for (std::size_t i = 0; i < g; ++i) gens.push_back(random_matrix(q, rng, 1, n, 5).row(0));
            return Submodule::span(q, n, gens);
        };
        Submodule a = rand_span(1 + rng.below(3)), b = rand_span(1 + rng.below(3));
        Submodule c = intersect(a, b);
        CHECK(c == intersect(b, a));
        CHECK(a.contains(c));
        CHECK(b.contains(c));
        CHECK(c.rank() == a.rank() + b.rank() - a.sum(b).rank());
    }
}

TEST_SUITE_END();
