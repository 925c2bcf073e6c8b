#pragma once

#include "corank/extension.hpp"
#include "corank/generation.hpp"
#include "corank/parse.hpp"

#include <json.hpp>

namespace corank {

using Json = nlohmann::ordered_json;

Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(Ring ring, const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(Ring ring, const Json& j, std::size_t expected);

/// Submodules travel as lists of generator rows.
Json submodule_to_json(const Submodule& s);
Submodule submodule_from_json(Ring ring, std::size_t ambient, const Json& j);

Json cyclic_rep_to_json(const CyclicModuleRep& rep);
CyclicModuleRep cyclic_rep_from_json(const Json& j);

Json algebra_rep_to_json(const AlgebraRep& rep);
AlgebraRep algebra_rep_from_json(const Json& j);

Json presentation_to_json(const Presentation& pres);
Presentation presentation_from_json(const Json& j);

/// Parsed problem document: exactly one representation payload plus the
/// optional task-specific fields.
struct ProblemDocument {
    std::string kind; // "cyclic_module" | "algebra" | "extension"
    std::optional<CyclicModuleRep> cyclic;
    std::optional<AlgebraRep> algebra;
    std::vector<std::size_t> y_subset;
    std::vector<Polynomial> ideal_generators;
    std::vector<Polynomial> rewrite_targets;
    // extension payload
    Ring ring{};
    Alphabet base_alphabet;
    std::vector<NamedGenerator> r_generators;
    std::vector<Polynomial> b_relations;
    // optional parameter block
    std::optional<std::size_t> deg_cap;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<bool> simplify;
};

ProblemDocument problem_from_json(const Json& j);

Json validation_to_json(const ValidationReport& report);
Json verification_to_json(const VerificationReport& report);

/// Canonical byte rendering used by every tool output.
std::string render_document(const Json& j);

} // namespace corank
