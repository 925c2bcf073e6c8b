#pragma once

#include "corank/linalg.hpp"
#include "corank/poly.hpp"

namespace corank {

enum class IdealClass { submodule_only, subalgebra, right_ideal, two_sided_ideal };

std::string ideal_class_name(IdealClass c);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    IdealClass ideal_class = IdealClass::submodule_only;
};

/// A right ideal R of finite co-rank presented through the cyclic right
/// module it defines: basis labels "1", b_1..b_k, one action matrix per
/// variable, a relation lattice N, and representative polynomials whose
/// classes are the basis vectors. R = { p : class(p) in N }.
class CyclicModuleRep {
  public:
    Ring ring{};
    Alphabet alphabet;
    std::vector<std::string> labels;          // "1", b_1, ..., b_k
    std::vector<Polynomial> representatives;  // r_{b_1}..r_{b_k}, non-unital
    Submodule relations;                      // N <= K^(k+1)
    std::vector<Matrix> action;               // one (k+1)x(k+1) matrix per variable

    std::size_t dim() const { return labels.size(); }
    std::size_t corank() const { return labels.size() - 1; }

    /// r_b as a unital polynomial; index 0 gives the empty word.
    Polynomial representative(std::size_t label_index) const;

    /// e * rho(p): the module class of p. Accepts non-unital input only.
    Vector class_vector(const Polynomial& p) const;
    /// v * rho(p) for an arbitrary module vector v.
    Vector act(const Vector& v, const Polynomial& p) const;

    /// Canonical c with class(p) == sum c_b g_b (mod N); length = corank.
    /// Constant on R-cosets, zero on members.
    Vector coset_vector(const Polynomial& p) const;

    bool is_member(const Polynomial& p) const;

    /// Structural checks, V1-V4, and ideal-class decision.
    ValidationReport validate() const;
};

/// A subalgebra B = pi^{-1}(S) of finite co-rank presented through a
/// surjection pi onto a structure-constant algebra Q = K^rank / N_Q with
/// marked submodule S.
class AlgebraRep {
  public:
    Ring ring{};
    Alphabet alphabet;
    std::vector<std::string> basis_names;        // q_1..q_k
    Submodule relations;                         // N_Q <= K^k
    std::vector<std::vector<Vector>> structure;  // q_i * q_j as a vector, k x k
    std::vector<Vector> images;                  // pi(x) per variable
    Submodule marked;                            // S <= K^k

    std::size_t rank() const { return basis_names.size(); }

    /// Bilinear product through the structure constants.
    Vector multiply(const Vector& a, const Vector& b) const;
    /// pi(p) for non-unital p.
    Vector image_of(const Polynomial& p) const;
    /// S + N_Q, the membership target.
    Submodule effective_marked() const;

    bool is_member(const Polynomial& p) const;

    ValidationReport validate() const;
};

enum class ClosureMode { left_right_ideal, subalgebra };

/// Smallest submodule containing seed and closed under the requested
/// products with Q (left/right multiplication by basis vectors, or
/// internal products). Terminates by Noetherian stabilization.
Submodule closure_submodule(const AlgebraRep& rep, const Submodule& seed, ClosureMode mode);

/// Reduction of a finite co-rank subalgebra to an enclosed two-sided
/// ideal: computes the kernel H' of the component map, the ideal J it
/// generates, and returns the same B presented over Q/J, where the ideal
/// I = pi^{-1}(J) is the kernel of the new surjection and B/I is the new
/// marked submodule.
AlgebraRep reduce_to_ideal(const AlgebraRep& rep);

} // namespace corank
