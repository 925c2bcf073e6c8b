#include "doctest.h"
#include "support.hpp"

#include "corank/parse.hpp"
#include "corank/rewriting.hpp"

using namespace corank;
using namespace corank::testsupport;

TEST_SUITE_BEGIN("rewriting");

namespace {

Polynomial y_monomial(const UData& ud, const std::vector<std::size_t>& letters,
                      const Scalar& c) {
    Word w;
    for (std::size_t i : letters) w.push_back(static_cast<std::uint32_t>(i));
    return Polynomial::monomial(ud.y_alphabet, ud.tables.rep.ring, false, w, c);
}

/// Random element of the domain of pi: T-only words plus isolated u terms.
Polynomial random_lifted(Rng& rng, const UData& ud) {
    const Ring ring = ud.tables.rep.ring;
    Polynomial t_words = random_poly(rng, ud.tables.t_alphabet, ring, 3);
    Polynomial out = Polynomial::zero(ud.y_alphabet, ring, false);
    for (const auto& [w, c] : t_words.terms()) out.add_term(w, c);
    for (std::size_t j = 0; j < ud.u_count(); ++j)
        out.add_term({static_cast<std::uint32_t>(ud.u_letter(j))},
                     random_scalar(ring, rng, 9));
    return out;
}

} // namespace

TEST_CASE("canonical degree-zero generators") {
    SUBCASE("even-sum module needs one u symbol") {
        UData ud = compute_u_data(build_symbol_tables(make_zeven()));
        REQUIRE(ud.u_count() == 1);
        CHECK(ud.u_names[0] == "u1");
        CHECK(ud.pi_u[0] == Vector{Scalar::zero(ud.tables.rep.ring), Scalar(ud.tables.rep.ring, 2)});
        CHECK(ud.y_alphabet.size() == 5);
        CHECK(ud.y_alphabet.name(4) == "u1");
        CHECK(ud.m_generators.rank() == 0);
        CHECK(y_witness(ud, ud.u_letter(0)) ==
              parse_poly(ud.tables.rep.alphabet, ud.tables.rep.ring, false, "2*x"));
    }
    SUBCASE("trivial lattices need none") {
        for (CyclicModuleRep rep : {make_aug1(Ring::integers()), make_rnt()}) {
            UData ud = compute_u_data(build_symbol_tables(rep));
            CHECK(ud.u_count() == 0);
            CHECK(ud.y_alphabet.size() == ud.t_count());
        }
    }
}

TEST_CASE("pinned star action on the even-sum module") {
    UData ud = compute_u_data(build_symbol_tables(make_zeven()));
    const Ring z = ud.tables.rep.ring;
    const Polynomial x = Polynomial::variable(ud.tables.rep.alphabet, z, false, 0);

    Polynomial u1 = y_monomial(ud, {4}, Scalar::one(z));
    Polynomial expected = y_monomial(ud, {2}, Scalar(z, 2)) + u1; // 2 t_x_x_1 + u1
    CHECK(starbar_act(ud, u1, x) == expected);

    Polynomial lift = phibar(ud, parse_poly(ud.tables.rep.alphabet, z, false, "2*x"));
    CHECK(lift == y_monomial(ud, {0}, Scalar(z, 2)) + u1); // 2 t_1_x_1 + u1
}

TEST_CASE("section and projection invert each other") {
    Rng rng(8101);
    std::vector<CyclicModuleRep> reps = {make_zeven(), make_aug1(Ring::rationals()), make_rnt()};
    for (int i = 0; i < 4; ++i)
        reps.push_back(random_rep(rng, i % 2 ? Ring::integers() : Ring::prime_field(5), 2, 2));

    for (const auto& rep : reps) {
        UData ud = compute_u_data(build_symbol_tables(rep));
        for (int trial = 0; trial < 8; ++trial) {
            Polynomial r = random_lifted(rng, ud);
            CHECK(rho_section(ud, pi_project(ud, r)) == r);

            MixedElement s = pi_project(ud, random_lifted(rng, ud));
            CHECK(pi_project(ud, rho_section(ud, s)) == s);
        }
    }
}

TEST_CASE("projection intertwines the star actions") {
    Rng rng(8201);
    std::vector<CyclicModuleRep> reps = {make_zeven(), make_rnt()};
    for (int i = 0; i < 4; ++i)
        reps.push_back(random_rep(rng, Ring::rationals(), 2, 3));

    for (const auto& rep : reps) {
        UData ud = compute_u_data(build_symbol_tables(rep));
        for (int trial = 0; trial < 8; ++trial) {
            Polynomial r = random_lifted(rng, ud);
            Polynomial p = random_poly(rng, rep.alphabet, rep.ring, 4);
            CHECK(pi_project(ud, starbar_act(ud, r, p)) ==
                  star_act(ud.tables, pi_project(ud, r), p));
        }
    }
}

TEST_CASE("lifts substitute back to the member") {
    Rng rng(8301);
    std::vector<CyclicModuleRep> reps = {make_zeven(), make_aug1(Ring::integers()), make_rnt()};
    for (int i = 0; i < 6; ++i)
        reps.push_back(random_rep(rng,
                                  i % 3 == 0   ? Ring::integers()
                                  : i % 3 == 1 ? Ring::rationals()
                                               : Ring::prime_field(3),
                                  3, 3));

    for (const auto& rep : reps) {
        UData ud = compute_u_data(build_symbol_tables(rep));
        for (int trial = 0; trial < 10; ++trial) {
            Polynomial m = random_member(rng, rep, 5);
            CHECK(psibar_eval(ud, phibar(ud, m)) == m);
        }
    }
}

TEST_CASE("redundant custom generators produce relations") {
    SymbolTables tables = build_symbol_tables(make_zeven());
    const Ring z = tables.rep.ring;
    Vector two{Scalar::zero(z), Scalar(z, 2)};
    Vector four{Scalar::zero(z), Scalar(z, 4)};
    UData ud = compute_u_data(tables, {two, four});

    REQUIRE(ud.u_count() == 2);
    CHECK(y_witness(ud, ud.u_letter(1)) ==
          parse_poly(tables.rep.alphabet, z, false, "4*x"));
    REQUIRE(ud.m_generators.rank() == 1);
    CHECK(ud.m_generators.contains(Vector{Scalar(z, 2), Scalar(z, -1)}));
}

TEST_CASE("degenerate inputs are refused") {
    SymbolTables tables = build_symbol_tables(make_zeven());
    const Ring z = tables.rep.ring;

    SUBCASE("custom generators must span the canonical module") {
        Vector four{Scalar::zero(z), Scalar(z, 4)};
        CHECK_THROWS_AS(compute_u_data(tables, {four}), domain_error);
        Vector bad_unit{Scalar::one(z), Scalar(z, 2)};
        CHECK_THROWS_AS(compute_u_data(tables, {bad_unit}), domain_error);
    }
    SUBCASE("section is partial") {
        UData ud = compute_u_data(tables);
        MixedElement s = mixed_zero(tables);
        s.v_part[1] = Scalar::one(z); // odd multiple of v_x
        CHECK_THROWS_AS(rho_section(ud, s), domain_error);
    }
    SUBCASE("projection rejects embedded u letters") {
        UData ud = compute_u_data(tables);
        Polynomial bad = Polynomial::monomial(ud.y_alphabet, z, false, {4, 4}, Scalar::one(z));
        CHECK_THROWS_AS(pi_project(ud, bad), domain_error);
    }
    SUBCASE("lifting requires membership") {
        UData ud = compute_u_data(tables);
        Polynomial x = Polynomial::variable(tables.rep.alphabet, z, false, 0);
        CHECK_THROWS_AS(phibar(ud, x), domain_error);
    }
}

TEST_SUITE_END();
