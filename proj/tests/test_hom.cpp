#include "doctest.h"
#include "support.hpp"

#include "corank/hom.hpp"

using namespace corank;
using namespace corank::testsupport;

TEST_SUITE_BEGIN("hom");

namespace {

AlgebraHom sample_hom(Ring ring) {
    AlgebraHom h;
    h.source = Alphabet({"a", "b"});
    h.target = Alphabet({"x", "y"});
    h.ring = ring;
    h.source_unital = true;
    h.target_unital = true;
    const Polynomial x = Polynomial::variable(h.target, ring, true, 0);
    const Polynomial y = Polynomial::variable(h.target, ring, true, 1);
    h.images = {x * y - y, x + y * y};
    return h;
}

} // namespace

TEST_CASE("words map to image products in order") {
    const Ring z = Ring::integers();
    AlgebraHom h = sample_hom(z);
    const Polynomial a = Polynomial::variable(h.source, z, true, 0);
    const Polynomial b = Polynomial::variable(h.source, z, true, 1);
    CHECK(apply_hom(h, a) == h.images[0]);
    CHECK(apply_hom(h, a * b) == h.images[0] * h.images[1]);
    CHECK(apply_hom(h, b * a) == h.images[1] * h.images[0]);
    CHECK(apply_hom(h, Polynomial::one(h.source, z)) == Polynomial::one(h.target, z));
}

TEST_CASE("apply_hom is a ring homomorphism on random input") {
    for (Ring ring : {Ring::integers(), Ring::prime_field(5)}) {
        AlgebraHom h = sample_hom(ring);
        Rng rng(123);
        for (int i = 0; i < 30; ++i) {
            const Polynomial p = random_poly(rng, h.source, ring, 3).embed_unital();
            const Polynomial q = random_poly(rng, h.source, ring, 3).embed_unital();
            CHECK(apply_hom(h, p + q) == apply_hom(h, p) + apply_hom(h, q));
            CHECK(apply_hom(h, p * q) == apply_hom(h, p) * apply_hom(h, q));
        }
    }
}

TEST_CASE("non-unital sources stay non-unital") {
    const Ring q = Ring::rationals();
    AlgebraHom h = sample_hom(q);
    h.source_unital = false;
    h.target_unital = false;
    h.images = {Polynomial::variable(h.target, q, false, 0),
                Polynomial::variable(h.target, q, false, 1)};
    const Polynomial p = Polynomial::variable(h.source, q, false, 0);
    const Polynomial out = apply_hom(h, p);
    CHECK_FALSE(out.unital());
    CHECK(out == h.images[0]);
}

TEST_CASE("validate rejects inconsistent data") {
    const Ring z = Ring::integers();
    AlgebraHom h = sample_hom(z);
    h.images.pop_back();
    CHECK_THROWS_AS(h.validate(), domain_error);

    AlgebraHom g = sample_hom(z);
    g.images[0] = Polynomial::variable(Alphabet({"z1"}), z, true, 0);
    CHECK_THROWS_AS(g.validate(), domain_error);

    AlgebraHom f = sample_hom(z);
    f.ring = Ring::rationals();
    CHECK_THROWS_AS(f.validate(), domain_error);
}

TEST_SUITE_END();
