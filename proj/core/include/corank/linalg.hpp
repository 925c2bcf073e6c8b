#pragma once

#include "corank/matrix.hpp"

#include <optional>
#include <vector>

namespace corank {

/// Row Hermite form: u * input = h with u unimodular, h in row echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot),
/// zero rows last. Over fields this is the reduced row echelon form.
struct HnfResult {
    Matrix h;
    Matrix u;
};
HnfResult hnf(const Matrix& m);

/// Smith form: u * input * v = s, s diagonal with a nonnegative divisibility
/// chain d1 | d2 | ... Over fields the diagonal is 1,...,1,0,...
struct SnfResult {
    Matrix s;
    Matrix u;
    Matrix v;
};
SnfResult snf(const Matrix& m);

std::vector<Scalar> diagonal(const Matrix& m);

/// Inverse of a square matrix whose inverse exists over the ring.
Matrix inverse_unimodular(const Matrix& m);

class Submodule;

/// Basis of {c : c * m = 0} as a submodule of K^rows.
Submodule left_kernel(const Matrix& m);

/// Canonical x with x * m = b (echelon back-substitution, free coordinates
/// zero), or nullopt when no solution exists over the ring.
std::optional<Vector> solve_left(const Matrix& m, const Vector& b);

/// Finitely generated submodule of K^ambient, kept with a canonical
/// echelon basis so equality and membership are syntactic.
class Submodule {
  public:
    Submodule() = default;

    static Submodule zero(Ring ring, std::size_t ambient);
    static Submodule span(Ring ring, std::size_t ambient, std::vector<Vector> generators);
    static Submodule full(Ring ring, std::size_t ambient);

    Ring ring() const { return ring_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<Vector>& generators() const { return gens_; }

    struct Reduction {
        Vector residue;
        bool in_submodule;
    };
    /// Canonical residue of v modulo the submodule; constant on cosets.
    Reduction reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const Submodule& o) const;
    Submodule sum(const Submodule& o) const;
    bool operator==(const Submodule& o) const;
    bool operator!=(const Submodule& o) const { return !(*this == o); }

    friend Submodule intersect(const Submodule& a, const Submodule& b);

  private:
    Ring ring_{};
    std::size_t ambient_ = 0;
    std::vector<Vector> gens_;
    Matrix basis_;
};

Submodule intersect(const Submodule& a, const Submodule& b);

/// Relations among a (possibly redundant) generating list: the left kernel
/// of the row matrix of `generators`.
Submodule relations_among(Ring ring, std::size_t ambient, const std::vector<Vector>& generators);

/// {c : c * m lies in w} as a submodule of K^rows(m).
Submodule preimage_of_span(const Matrix& m, const Submodule& w);

/// {c : c * images[t] lies in spans[t] for every t}.
Submodule preimage_of_span_multi(Ring ring, std::size_t dim,
                                 const std::vector<Matrix>& images,
                                 const std::vector<Submodule>& spans);

/// Minimal presentation of K^ambient / s via the Smith form of the
/// relation lattice: unit invariant factors dropped, zero factors counted
/// as free generators.
struct ModulePresentation {
    std::size_t generator_count = 0;
    Matrix relation_rows;
    std::vector<Scalar> invariant_factors; // non-unit, nonzero
    std::size_t free_rank = 0;

    bool same_quotient(const ModulePresentation& o) const;
};
ModulePresentation quotient_presentation(const Submodule& s);

/// Smith-based coordinate change for K^n / s: forward maps old coordinates
/// onto the surviving generators, section lifts them back.
struct QuotientCoordinates {
    ModulePresentation pres;
    Matrix forward; // n x generator_count
    Matrix section; // generator_count x n
};
QuotientCoordinates quotient_coordinates(const Submodule& s);

} // namespace corank
