#include "doctest.h"
#include "support.hpp"

#include "corank/poly.hpp"

using namespace corank;
using namespace corank::testsupport;

TEST_SUITE_BEGIN("poly");

namespace {
const Alphabet xy({"x", "y"});

Polynomial up(Ring r, const char* w) {
    Word word;
    for (const char* c = w; *c; ++c) word.push_back(*c == 'x' ? 0 : 1);
    return Polynomial::monomial(xy, r, true, word, Scalar::one(r));
}
} // namespace

TEST_CASE("degree and constant bookkeeping") {
    const Ring q = Ring::rationals();
    CHECK(Polynomial::zero(xy, q, true).degree() == -1);
    CHECK(Polynomial::one(xy, q).degree() == 0);
    CHECK(up(q, "xyx").degree() == 3);
    CHECK(Polynomial::one(xy, q).constant_coefficient() == Scalar::one(q));
}

TEST_CASE("addition cancels and multiplication concatenates") {
    const Ring z = Ring::integers();
    const Polynomial x = up(z, "x");
    const Polynomial y = up(z, "y");
    CHECK((x - x).is_zero());
    CHECK(x * y == up(z, "xy"));
    CHECK((x + y) * (x - y) == up(z, "xx") - up(z, "xy") + up(z, "yx") - up(z, "yy"));
}

TEST_CASE("ring axioms hold on random polynomials") {
    for (Ring ring : {Ring::integers(), Ring::rationals(), Ring::prime_field(5)}) {
        Rng rng(0xabcdef01u + static_cast<unsigned>(ring.kind));
        for (int i = 0; i < 40; ++i) {
            const Polynomial a = random_poly(rng, xy, ring, 3).embed_unital();
            const Polynomial b = random_poly(rng, xy, ring, 3).embed_unital();
            const Polynomial c = random_poly(rng, xy, ring, 3).embed_unital();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a + b == b + a);
        }
    }
}

TEST_CASE("degree is additive for nonzero factors") {
    for (Ring ring : {Ring::integers(), Ring::prime_field(3)}) {
        Rng rng(77);
        for (int i = 0; i < 60; ++i) {
            const Polynomial a = random_poly(rng, xy, ring, 4);
            const Polynomial b = random_poly(rng, xy, ring, 4);
            if (a.is_zero() || b.is_zero()) continue;
            CHECK((a * b).degree() == a.degree() + b.degree());
        }
    }
}

TEST_CASE("non-unital polynomials reject constant terms") {
    const Ring q = Ring::rationals();
    Polynomial p = Polynomial::zero(xy, q, false);
    CHECK_THROWS_AS(p.add_term({}, Scalar::one(q)), domain_error);
    CHECK_THROWS_AS(Polynomial::one(xy, q).restrict_nonunital(), domain_error);
    const Polynomial x = Polynomial::variable(xy, q, false, 0);
    CHECK(x.embed_unital().restrict_nonunital() == x);
    CHECK(x.embed_unital().unital());
}

TEST_CASE("mixing unital and non-unital operands is a type error") {
    const Ring q = Ring::rationals();
    const Polynomial a = Polynomial::variable(xy, q, false, 0);
    const Polynomial b = Polynomial::variable(xy, q, true, 0);
    CHECK_THROWS_AS((void)(a + b), domain_error);
    CHECK_THROWS_AS((void)(a * b), domain_error);
    const Alphabet other({"x"});
    const Polynomial c = Polynomial::variable(other, q, false, 0);
    CHECK_THROWS_AS((void)(a + c), domain_error);
}

TEST_CASE("formatting is canonical") {
    const Ring q = Ring::rationals();
    const Ring z = Ring::integers();
    CHECK(format_poly(Polynomial::zero(xy, q, true)) == "0");
    CHECK(format_poly(Polynomial::one(xy, q)) == "1");

    const Polynomial x = Polynomial::variable(xy, z, true, 0);
    const Polynomial y = Polynomial::variable(xy, z, true, 1);
    CHECK(format_poly(x * x - x) == "x^2 - x");
    CHECK(format_poly(Scalar(z, 2) * (x * y) - y * x + Polynomial::one(xy, z)) ==
          "2*x*y - y*x + 1");
    // degree descending, then length-lex ascending inside a degree
    CHECK(format_poly(y + x + x * y * x) == "x*y*x + x + y");
    CHECK(format_poly(-x) == "-x");
    CHECK(format_poly(Scalar(q, 3, 4) * Polynomial::variable(xy, q, true, 1)) == "3/4*y");
    CHECK(format_poly(x * x * x) == "x^3");
    CHECK(format_poly(x * x * y) == "x^2*y");
}

TEST_SUITE_END();
