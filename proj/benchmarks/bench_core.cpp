#include <benchmark/benchmark.h>

#include "corank/membership.hpp"
#include "corank/presentation.hpp"
#include "corank/rng.hpp"

using namespace corank;

namespace {

Matrix random_int_matrix(Rng& rng, std::size_t n) {
    Matrix m(Ring::integers(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Scalar(Ring::integers(), rng.range(-100, 100));
    return m;
}

Polynomial random_poly(Rng& rng, const Alphabet& a, Ring ring, std::size_t deg,
                       std::size_t terms) {
    Polynomial p = Polynomial::zero(a, ring, false);
    for (std::size_t t = 0; t < terms; ++t) {
        Word w;
        const std::size_t len = 1 + rng.below(deg);
        for (std::size_t i = 0; i < len; ++i)
            w.push_back(static_cast<std::uint32_t>(rng.below(a.size())));
        p.add_term(w, Scalar(ring, rng.range(-9, 9)));
    }
    return p;
}

CyclicModuleRep even_sum_module() {
    CyclicModuleRep rep;
    rep.ring = Ring::integers();
    rep.alphabet = Alphabet({"x"});
    rep.labels = {"1", "x"};
    rep.representatives = {Polynomial::variable(rep.alphabet, rep.ring, false, 0)};
    Vector two = zero_vector(rep.ring, 2);
    two[1] = Scalar(rep.ring, 2);
    rep.relations = Submodule::span(rep.ring, 2, {two});
    Matrix act(rep.ring, 2, 2);
    act.at(0, 1) = Scalar::one(rep.ring);
    act.at(1, 1) = Scalar::one(rep.ring);
    rep.action = {act};
    return rep;
}

void BM_SpanNormalForm(benchmark::State& state) {
    Rng rng(1);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(random_int_matrix(rng, n).row(0));
    for (auto _ : state) {
        Submodule s = Submodule::span(Ring::integers(), n, rows);
        benchmark::DoNotOptimize(s.rank());
    }
}
BENCHMARK(BM_SpanNormalForm)->Arg(4)->Arg(6)->Arg(8);

void BM_PolyMultiply(benchmark::State& state) {
    Rng rng(2);
    const Alphabet a({"x", "y", "z"});
    const Ring ring = Ring::integers();
    const Polynomial p = random_poly(rng, a, ring, 6, 12);
    const Polynomial q = random_poly(rng, a, ring, 6, 12);
    for (auto _ : state) benchmark::DoNotOptimize(p * q);
}
BENCHMARK(BM_PolyMultiply);

void BM_PresentRightIdeal(benchmark::State& state) {
    const CyclicModuleRep rep = even_sum_module();
    for (auto _ : state) {
        Presentation pres = present_right_ideal(rep);
        benchmark::DoNotOptimize(pres.relations.size());
    }
}
BENCHMARK(BM_PresentRightIdeal);

void BM_LiftMember(benchmark::State& state) {
    const CyclicModuleRep rep = even_sum_module();
    const UData ud = compute_u_data(build_symbol_tables(rep));
    Rng rng(3);
    Polynomial q = random_poly(rng, rep.alphabet, rep.ring, 6, 6);
    const Vector coset = rep.coset_vector(q);
    for (std::size_t b = 1; b <= rep.corank(); ++b)
        if (!coset[b - 1].is_zero()) q = q - coset[b - 1] * rep.representatives[b - 1];
    for (auto _ : state) benchmark::DoNotOptimize(psibar_eval(ud, phibar(ud, q)));
}
BENCHMARK(BM_LiftMember);

void BM_MembershipSearch(benchmark::State& state) {
    const Alphabet a({"x", "y"});
    const Ring ring = Ring::integers();
    Polynomial x = Polynomial::variable(a, ring, false, 0);
    Polynomial y = Polynomial::variable(a, ring, false, 1);
    Polynomial g = (x.embed_unital() * y.embed_unital() -
                    y.embed_unital() * x.embed_unital())
                       .restrict_nonunital();
    Polynomial target = (x.embed_unital() * x.embed_unital() * y.embed_unital() -
                         y.embed_unital() * x.embed_unital() * x.embed_unital())
                            .restrict_nonunital();
    const std::size_t cap = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            ideal_membership_bounded({g}, target, IdealSide::two_sided, cap));
}
BENCHMARK(BM_MembershipSearch)->Arg(2)->Arg(4);

} // namespace

BENCHMARK_MAIN();
