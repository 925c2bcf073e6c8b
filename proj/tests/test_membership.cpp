#include "doctest.h"
#include "support.hpp"

#include "corank/membership.hpp"

using namespace corank;
using namespace corank::testsupport;

TEST_SUITE_BEGIN("membership");

namespace {

Polynomial word_poly(const Alphabet& a, Ring r, const std::vector<std::size_t>& letters) {
    Word w;
    for (std::size_t i : letters) w.push_back(static_cast<std::uint32_t>(i));
    return Polynomial::monomial(a, r, false, w, Scalar::one(r));
}

} // namespace

TEST_CASE("right-sided certificate for a shifted generator") {
    const Ring z = Ring::integers();
    const Alphabet x1({"x"});
    const Polynomial x = Polynomial::variable(x1, z, false, 0);
    const Polynomial gen = word_poly(x1, z, {0, 0}) - x; // x^2 - x
    const Polynomial target = word_poly(x1, z, {0, 0, 0}) - word_poly(x1, z, {0, 0});

    const auto cert = ideal_membership_bounded({gen}, target, IdealSide::right, 1);
    REQUIRE(cert.has_value());
    CHECK(evaluate_certificate({gen}, *cert, x1, z, false) == target);
    for (const auto& term : cert->terms) {
        CHECK(term.left.empty());
        CHECK(term.right.size() <= 1);
    }
}

TEST_CASE("side discipline: left multipliers need the two-sided search") {
    const Ring z = Ring::integers();
    const Alphabet xy({"x", "y"});
    const Polynomial gen = word_poly(xy, z, {0}); // x
    const Polynomial target = word_poly(xy, z, {1, 0}); // y*x

    CHECK_FALSE(ideal_membership_bounded({gen}, target, IdealSide::right, 4).has_value());
    const auto cert = ideal_membership_bounded({gen}, target, IdealSide::two_sided, 4);
    REQUIRE(cert.has_value());
    CHECK(evaluate_certificate({gen}, *cert, xy, z, false) == target);
}

TEST_CASE("certificates combine several generators") {
    const Ring q = Ring::rationals();
    const Alphabet xy({"x", "y"});
    const Polynomial g1 = word_poly(xy, q, {0, 1}) - word_poly(xy, q, {1, 0}); // xy - yx
    const Polynomial g2 = word_poly(xy, q, {0, 0}); // x^2
    // x^2*y - y*x^2 = x(xy - yx) + (xy - yx)x  and also via x^2 rows
    const Polynomial target = word_poly(xy, q, {0, 0, 1}) - word_poly(xy, q, {1, 0, 0});
    const auto cert = ideal_membership_bounded({g1, g2}, target, IdealSide::two_sided, 2);
    REQUIRE(cert.has_value());
    CHECK(evaluate_certificate({g1, g2}, *cert, xy, q, false) == target);
}

TEST_CASE("absent within cap does not mean non-membership") {
    const Ring z = Ring::integers();
    const Alphabet x1({"x"});
    const Polynomial gen = Polynomial::variable(x1, z, false, 0);
    Word high(5, 0);
    const Polynomial target = Polynomial::monomial(x1, z, false, high, Scalar::one(z));
    CHECK_FALSE(ideal_membership_bounded({gen}, target, IdealSide::right, 1).has_value());
    CHECK(ideal_membership_bounded({gen}, target, IdealSide::right, 4).has_value());
}

TEST_CASE("integer targets need integer combinations") {
    const Ring z = Ring::integers();
    const Alphabet x1({"x"});
    const Polynomial gen = Scalar(z, 2) * Polynomial::variable(x1, z, false, 0); // 2x
    const Polynomial odd = Polynomial::variable(x1, z, false, 0);
    CHECK_FALSE(ideal_membership_bounded({gen}, odd, IdealSide::two_sided, 3).has_value());
    const Polynomial even = Scalar(z, 6) * Polynomial::variable(x1, z, false, 0);
    CHECK(ideal_membership_bounded({gen}, even, IdealSide::two_sided, 3).has_value());
}

TEST_CASE("semigroup relation family stays independent") {
    // v x^i y - w x^i z for i <= N never reach the (N+1)-st relation
    const Ring z = Ring::integers();
    const Alphabet a({"v", "w", "x", "y", "z"});
    const auto relation = [&](std::size_t n) {
        std::vector<std::size_t> left{0};
        std::vector<std::size_t> right{1};
        for (std::size_t i = 0; i < n; ++i) {
            left.push_back(2);
            right.push_back(2);
        }
        left.push_back(3);
        right.push_back(4);
        return word_poly(a, z, left) - word_poly(a, z, right);
    };
    for (std::size_t n_max = 0; n_max <= 4; ++n_max) {
        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i <= n_max; ++i) gens.push_back(relation(i));
        const Polynomial target = relation(n_max + 1);
        for (std::size_t cap = 0; cap <= 6; cap += 2)
            CHECK_FALSE(
                ideal_membership_bounded(gens, target, IdealSide::two_sided, cap).has_value());
    }
}

TEST_CASE("semigroup substitution identity") {
    const Ring z = Ring::integers();
    const Alphabet abc({"a", "b", "c"});
    const Polynomial a = Polynomial::variable(abc, z, true, 0);
    const Polynomial b = Polynomial::variable(abc, z, true, 1);
    const Polynomial c = Polynomial::variable(abc, z, true, 2);
    const Polynomial v = b * a;
    const Polynomial w = b * a * a;
    const Polynomial x = a * a * a;
    const Polynomial y = a * a * c;
    const Polynomial zz = a * c;
    Polynomial xn = Polynomial::one(abc, z);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(v * xn * y == w * xn * zz);
        xn = xn * x;
    }
}

TEST_CASE("left-normed bracket expansion") {
    const Ring z = Ring::integers();
    const Alphabet xy({"x", "y"});
    const Polynomial x = Polynomial::variable(xy, z, true, 0);
    const Polynomial y = Polynomial::variable(xy, z, true, 1);

    Polynomial bracket = y;
    for (std::size_t n = 1; n <= 8; ++n) {
        bracket = bracket * x - x * bracket;
        Polynomial expansion = Polynomial::zero(xy, z, true);
        Int binom = 1; // C(n, 0)
        for (std::size_t i = 0; i <= n; ++i) {
            Polynomial term = Polynomial::one(xy, z);
            for (std::size_t k = 0; k < n - i; ++k) term = term * x;
            term = term * y;
            for (std::size_t k = 0; k < i; ++k) term = term * x;
            Scalar coeff(z, binom);
            if ((n - i) % 2) coeff = -coeff;
            expansion += coeff * term;
            binom = binom * Int(n - i) / Int(i + 1);
        }
        CHECK(bracket == expansion);
    }
}

TEST_SUITE_END();
