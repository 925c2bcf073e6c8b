#pragma once

#include "corank/membership.hpp"
#include "corank/presentation.hpp"

namespace corank {

/// One abstract ideal generator with its witness in the base algebra.
struct NamedGenerator {
    std::string name;
    Polynomial witness; // non-unital over the base alphabet
};

struct ComposeResult {
    std::vector<Polynomial> i_generators; // over the base alphabet
    Presentation presentation;            // of the extension, on the base variables
    std::vector<Polynomial> products;     // p for x*gen then gen*x, flattened
};

/// Given abstract generators of an ideal and relations W for it, search
/// (within the degree cap) for rewriting products expressing x*gen and
/// gen*x inside the ideal, and assemble generators of the full preimage
/// ideal. Absent means the bounded search was inconclusive.
std::optional<ComposeResult>
compose_extension(const Alphabet& base, Ring ring,
                  const std::vector<NamedGenerator>& r_generators,
                  const std::vector<Polynomial>& b_relations, std::size_t deg_cap);

/// Generators, over the presentation symbols, of the ideal of R generated
/// by i_generators; both inclusions are certified by bounded membership
/// searches. Absent means inconclusive.
std::optional<std::vector<Polynomial>>
restrict_ideal_generators(const UData& ud, const Presentation& pres,
                          const std::vector<Polynomial>& i_generators,
                          std::size_t deg_cap);

/// Presentation of R / (ideal generated by i_generators) on the Y symbols:
/// the right-ideal presentation with restricted ideal generators appended.
std::optional<Presentation>
present_quotient_subalgebra(const CyclicModuleRep& rep,
                            const std::vector<Polynomial>& i_generators,
                            std::size_t deg_cap);

} // namespace corank
