#pragma once

#include "corank/linalg.hpp"
#include "corank/rep.hpp"
#include "corank/rng.hpp"

namespace corank::testsupport {

Scalar random_scalar(Ring ring, Rng& rng, std::int64_t max_abs = 100);
Matrix random_matrix(Ring ring, Rng& rng, std::size_t rows, std::size_t cols,
                     std::int64_t max_abs = 100);

/// Laplace expansion; fine for the small sizes used in tests.
Scalar determinant(const Matrix& m);

/// Augmentation-style co-rank 1 module: one variable, r = x, every word
/// acts as the single non-unit basis vector. Members are the polynomials
/// whose coefficients sum to zero.
CyclicModuleRep make_aug1(Ring ring);

/// Same action over Z with the relation 2g = 0; members have even
/// coefficient sum, and the canonical u symbol carries witness 2x.
CyclicModuleRep make_zeven();

/// Co-rank 2 over Q on two variables with r_b1 = x, r_b2 = x*y; a right
/// ideal that is not two-sided.
CyclicModuleRep make_rnt();

/// Rank-2 algebra Q = span(t, t^2) with t^3 = 0, pi(x) = t, marked
/// submodule <t^2>.
AlgebraRep make_sub2();

/// Rank-1 F_2 algebra with trivial product and pi(x) = pi(y) = 1.
AlgebraRep make_f2gen();

/// Valid representation with 1..max_vars variables and co-rank
/// 1..max_corank: the first variable shifts the basis (so powers of it are
/// representatives), the rest act randomly into the non-unit coordinates,
/// and the relation lattice is a random integer multiple of that span.
CyclicModuleRep random_rep(Rng& rng, Ring ring, std::size_t max_vars,
                           std::size_t max_corank);

Polynomial random_poly(Rng& rng, const Alphabet& a, Ring ring, std::size_t max_deg,
                       std::size_t max_terms = 4, std::int64_t max_abs = 9);

/// Random member of the right ideal: a random polynomial minus the coset
/// combination of the representatives.
Polynomial random_member(Rng& rng, const CyclicModuleRep& rep, std::size_t max_deg);

} // namespace corank::testsupport
