#pragma once

#include "corank/rewriting.hpp"

namespace corank {

/// Finite presentation of a right ideal as an abstract (non-unital)
/// algebra: one generator per Y symbol, each carrying its witness in the
/// base algebra, plus the three relation families.
struct Presentation {
    Ring ring;
    Alphabet base_alphabet;
    Alphabet gen_alphabet;
    std::vector<Polynomial> witnesses; // non-unital over base_alphabet
    std::vector<Polynomial> relations; // non-unital over gen_alphabet
    std::size_t w_u_count = 0;         // linear relations among the u symbols
    std::size_t w_y_count = 0;         // y - lift(witness(y))
    std::size_t w_yy_count = 0;        // z y - z * witness(y)
    std::size_t extra_count = 0;       // appended ideal generators, if any
};

Presentation present_right_ideal(const CyclicModuleRep& rep);
Presentation present_right_ideal(const UData& ud);

/// Drops generators whose witness is zero (their defining relation is the
/// bare generator) and erases them from the remaining relations.
Presentation simplify_presentation(const Presentation& pres);

struct DegreeCheck {
    std::size_t degree = 0;
    std::size_t expected_rank = 0;
    std::size_t achieved_rank = 0;
    bool matched = false;
};

struct VerificationReport {
    bool sound = false;
    std::vector<std::size_t> failed_relations;
    std::size_t identity_samples = 0;
    std::size_t identity_failures = 0;
    std::vector<DegreeCheck> degree_checks;
    bool complete = false;

    bool ok() const { return sound && identity_failures == 0 && complete; }
};

/// Checks a presentation against the representation it came from:
/// relation witnesses vanish, lift-then-evaluate is the identity on random
/// members, and for each degree up to deg_cap the witness products span
/// exactly the members of that degree.
VerificationReport verify_presentation(const CyclicModuleRep& rep, const Presentation& pres,
                                       std::size_t deg_cap, std::size_t samples,
                                       std::uint64_t seed);

} // namespace corank
