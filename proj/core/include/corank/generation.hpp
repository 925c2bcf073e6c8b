#pragma once

#include "corank/rep.hpp"

#include <optional>

namespace corank {

/// Subalgebra-generation input: an algebra representation whose marked
/// submodule is (at least) a subalgebra S, plus the subset Y of variables
/// whose images, together with S, span the quotient.
struct GenerationSpec {
    AlgebraRep rep;
    std::vector<std::size_t> y_subset; // variable indices, strictly increasing

    void validate() const;
};

/// One generator of the preimage subalgebra B, with the word it came from.
struct BGenerator {
    Word source;       // base word (U part) or empty (Z part)
    Polynomial value;  // non-unital over the base alphabet
    bool from_kernel = false;
};

struct GeneratingSet {
    std::vector<BGenerator> u_part; // w - gamma(w) over the short words
    std::vector<BGenerator> z_part; // linear kernel combinations
    std::size_t dropped_zero_u = 0; // short words with w - gamma(w) == 0
    std::vector<Polynomial> all() const;
};

/// gamma(p): the canonical Y-linear polynomial with pi(p) == pi(gamma(p))
/// modulo the marked submodule.
Polynomial gamma_linearize(const GenerationSpec& spec, const Polynomial& p);

/// Finite generating set of B = pi^{-1}(S) as a non-unital algebra.
GeneratingSet finite_generating_set(const GenerationSpec& spec);

/// Explicit algebra combination over a generating set: leaves index the
/// generators, internal nodes are scalar combinations and products.
struct AlgebraCombination {
    struct Node {
        enum class Kind { leaf, sum, product };
        Kind kind = Kind::leaf;
        std::size_t leaf = 0;
        std::vector<std::pair<Scalar, std::size_t>> summands;
        std::vector<std::size_t> factors;
    };
    Alphabet alphabet;
    Ring ring{};
    std::vector<Node> nodes;
    std::size_t root = 0;

    Polynomial evaluate(const std::vector<Polynomial>& generators) const;
    std::string render(const std::vector<Polynomial>& generators) const;
};

/// Rewrite a member of B as a combination of the generating set; degree
/// strictly decreases along the recursion. Throws when p is not a member.
AlgebraCombination rewrite_member(const GenerationSpec& spec, const GeneratingSet& gens,
                                  const Polynomial& p);

} // namespace corank
