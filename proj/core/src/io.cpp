#include "corank/io.hpp"

#include <algorithm>

namespace corank {

namespace {

const Json& expect(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw domain_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string expect_string(const Json& j, const char* what) {
    if (!j.is_string()) throw domain_error(std::string(what) + " must be a string");
    return j.get<std::string>();
}

const Json& expect_array(const Json& j, const char* what) {
    if (!j.is_array()) throw domain_error(std::string(what) + " must be an array");
    return j;
}

std::size_t expect_size(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw domain_error(std::string(what) + " must be a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    std::vector<std::string> out;
    for (const Json& item : expect_array(j, what)) out.push_back(expect_string(item, what));
    return out;
}

Alphabet alphabet_from(const Json& j) {
    return Alphabet(string_list(j, "variables"));
}

} // namespace

Json ring_to_json(const Ring& ring) {
    Json j = Json::object();
    switch (ring.kind) {
        case RingKind::integers: j["kind"] = "Z"; break;
        case RingKind::rationals: j["kind"] = "Q"; break;
        case RingKind::prime_field:
            j["kind"] = "Fp";
            j["p"] = ring.p;
            break;
    }
    return j;
}

Ring ring_from_json(const Json& j) {
    const std::string kind = expect_string(expect(j, "kind"), "ring kind");
    if (kind == "Z") return Ring::integers();
    if (kind == "Q") return Ring::rationals();
    if (kind == "Fp") {
        const Json& p = expect(j, "p");
        if (!p.is_number_integer() && !p.is_number_unsigned())
            throw domain_error("field characteristic must be an integer");
        return Ring::prime_field(p.get<std::int64_t>());
    }
    throw domain_error("unknown ring kind \"" + kind + "\"");
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(Ring ring, const Json& j) {
    if (j.is_string()) return scalar_from_string(ring, j.get<std::string>());
    if (j.is_number_integer() || j.is_number_unsigned())
        return Scalar(ring, Int(j.get<std::int64_t>()));
    throw domain_error("scalar must be a string or an integer");
}

Json vector_to_json(const Vector& v) {
    Json j = Json::array();
    for (const Scalar& c : v) j.push_back(scalar_to_json(c));
    return j;
}

Vector vector_from_json(Ring ring, const Json& j, std::size_t expected) {
    const Json& arr = expect_array(j, "vector");
    if (arr.size() != expected)
        throw domain_error("vector has length " + std::to_string(arr.size()) +
                           ", expected " + std::to_string(expected));
    Vector v;
    for (const Json& item : arr) v.push_back(scalar_from_json(ring, item));
    return v;
}

Json submodule_to_json(const Submodule& s) {
    Json j = Json::array();
    for (std::size_t i = 0; i < s.rank(); ++i) j.push_back(vector_to_json(s.basis().row(i)));
    return j;
}

Submodule submodule_from_json(Ring ring, std::size_t ambient, const Json& j) {
    std::vector<Vector> rows;
    for (const Json& item : expect_array(j, "submodule"))
        rows.push_back(vector_from_json(ring, item, ambient));
    return Submodule::span(ring, ambient, std::move(rows));
}

Json cyclic_rep_to_json(const CyclicModuleRep& rep) {
    Json j = Json::object();
    j["kind"] = "cyclic_module";
    j["ring"] = ring_to_json(rep.ring);
    j["variables"] = rep.alphabet.names();
    j["basis"] = rep.labels;
    Json reps = Json::object();
    for (std::size_t b = 1; b < rep.labels.size(); ++b)
        reps[rep.labels[b]] = format_poly(rep.representatives[b - 1]);
    j["representatives"] = std::move(reps);
    j["relations"] = submodule_to_json(rep.relations);
    Json action = Json::object();
    for (std::size_t x = 0; x < rep.alphabet.size(); ++x) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < rep.dim(); ++i)
            rows.push_back(vector_to_json(rep.action[x].row(i)));
        action[rep.alphabet.name(x)] = std::move(rows);
    }
    j["action"] = std::move(action);
    return j;
}

CyclicModuleRep cyclic_rep_from_json(const Json& j) {
    CyclicModuleRep rep;
    rep.ring = ring_from_json(expect(j, "ring"));
    rep.alphabet = alphabet_from(expect(j, "variables"));
    rep.labels = string_list(expect(j, "basis"), "basis");
    if (rep.labels.empty() || rep.labels[0] != "1")
        throw domain_error("basis must start with the unit label \"1\"");

    const Json& reps = expect(j, "representatives");
    if (!reps.is_object()) throw domain_error("representatives must be an object");
    for (std::size_t b = 1; b < rep.labels.size(); ++b) {
        if (!reps.contains(rep.labels[b]))
            throw domain_error("missing representative for label \"" + rep.labels[b] + "\"");
        rep.representatives.push_back(parse_poly(
            rep.alphabet, rep.ring, false,
            expect_string(reps.at(rep.labels[b]), "representative")));
    }

    rep.relations = submodule_from_json(rep.ring, rep.labels.size(), expect(j, "relations"));

    const Json& action = expect(j, "action");
    if (!action.is_object()) throw domain_error("action must be an object");
    for (std::size_t x = 0; x < rep.alphabet.size(); ++x) {
        const std::string& name = rep.alphabet.name(x);
        if (!action.contains(name))
            throw domain_error("missing action matrix for variable \"" + name + "\"");
        const Json& rows = expect_array(action.at(name), "action matrix");
        if (rows.size() != rep.labels.size())
            throw domain_error("action matrix for \"" + name + "\" has the wrong shape");
        Matrix m(rep.ring, rep.labels.size(), rep.labels.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Vector row = vector_from_json(rep.ring, rows[i], rep.labels.size());
            for (std::size_t c = 0; c < row.size(); ++c) m.at(i, c) = row[c];
        }
        rep.action.push_back(std::move(m));
    }
    return rep;
}

Json algebra_rep_to_json(const AlgebraRep& rep) {
    Json j = Json::object();
    j["kind"] = "algebra";
    j["ring"] = ring_to_json(rep.ring);
    j["variables"] = rep.alphabet.names();
    j["basis"] = rep.basis_names;
    j["relations"] = submodule_to_json(rep.relations);
    Json structure = Json::array();
    for (std::size_t i = 0; i < rep.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < rep.rank(); ++jj)
            row.push_back(vector_to_json(rep.structure[i][jj]));
        structure.push_back(std::move(row));
    }
    j["structure_constants"] = std::move(structure);
    Json images = Json::object();
    for (std::size_t x = 0; x < rep.alphabet.size(); ++x)
        images[rep.alphabet.name(x)] = vector_to_json(rep.images[x]);
    j["images"] = std::move(images);
    j["marked_submodule"] = submodule_to_json(rep.marked);
    return j;
}

AlgebraRep algebra_rep_from_json(const Json& j) {
    AlgebraRep rep;
    rep.ring = ring_from_json(expect(j, "ring"));
    rep.alphabet = alphabet_from(expect(j, "variables"));
    rep.basis_names = string_list(expect(j, "basis"), "basis");
    const std::size_t k = rep.basis_names.size();
    rep.relations = submodule_from_json(rep.ring, k, expect(j, "relations"));

    const Json& structure = expect_array(expect(j, "structure_constants"), "structure_constants");
    if (structure.size() != k)
        throw domain_error("structure_constants must have one row per basis element");
    for (std::size_t i = 0; i < k; ++i) {
        const Json& row = expect_array(structure[i], "structure_constants row");
        if (row.size() != k)
            throw domain_error("structure_constants must be a square table");
        std::vector<Vector> prods;
        for (std::size_t jj = 0; jj < k; ++jj)
            prods.push_back(vector_from_json(rep.ring, row[jj], k));
        rep.structure.push_back(std::move(prods));
    }

    const Json& images = expect(j, "images");
    if (!images.is_object()) throw domain_error("images must be an object");
    for (std::size_t x = 0; x < rep.alphabet.size(); ++x) {
        const std::string& name = rep.alphabet.name(x);
        if (!images.contains(name))
            throw domain_error("missing image for variable \"" + name + "\"");
        rep.images.push_back(vector_from_json(rep.ring, images.at(name), k));
    }
    rep.marked = submodule_from_json(rep.ring, k, expect(j, "marked_submodule"));
    return rep;
}

Json presentation_to_json(const Presentation& pres) {
    Json j = Json::object();
    j["kind"] = "presentation";
    j["ring"] = ring_to_json(pres.ring);
    j["variables"] = pres.base_alphabet.names();
    Json gens = Json::array();
    for (std::size_t i = 0; i < pres.gen_alphabet.size(); ++i) {
        Json g = Json::object();
        g["name"] = pres.gen_alphabet.name(i);
        g["witness"] = format_poly(pres.witnesses[i]);
        gens.push_back(std::move(g));
    }
    j["generators"] = std::move(gens);
    Json rels = Json::array();
    for (const Polynomial& rel : pres.relations) rels.push_back(format_poly(rel));
    j["relations"] = std::move(rels);
    Json counts = Json::object();
    counts["linear"] = pres.w_u_count;
    counts["defining"] = pres.w_y_count;
    counts["products"] = pres.w_yy_count;
    counts["ideal"] = pres.extra_count;
    j["counts"] = std::move(counts);
    return j;
}

Presentation presentation_from_json(const Json& j) {
    Presentation pres;
    pres.ring = ring_from_json(expect(j, "ring"));
    pres.base_alphabet = alphabet_from(expect(j, "variables"));
    std::vector<std::string> names;
    std::vector<std::string> witness_texts;
    for (const Json& g : expect_array(expect(j, "generators"), "generators")) {
        names.push_back(expect_string(expect(g, "name"), "generator name"));
        witness_texts.push_back(expect_string(expect(g, "witness"), "generator witness"));
    }
    pres.gen_alphabet = Alphabet(names);
    for (const std::string& text : witness_texts)
        pres.witnesses.push_back(parse_poly(pres.base_alphabet, pres.ring, false, text));
    for (const Json& rel : expect_array(expect(j, "relations"), "relations"))
        pres.relations.push_back(parse_poly(pres.gen_alphabet, pres.ring, false,
                                            expect_string(rel, "relation")));
    const Json& counts = expect(j, "counts");
    pres.w_u_count = expect_size(expect(counts, "linear"), "counts.linear");
    pres.w_y_count = expect_size(expect(counts, "defining"), "counts.defining");
    pres.w_yy_count = expect_size(expect(counts, "products"), "counts.products");
    pres.extra_count = expect_size(expect(counts, "ideal"), "counts.ideal");
    if (pres.w_u_count + pres.w_y_count + pres.w_yy_count + pres.extra_count !=
        pres.relations.size())
        throw domain_error("relation counts do not add up");
    return pres;
}

ProblemDocument problem_from_json(const Json& j) {
    ProblemDocument doc;
    doc.kind = expect_string(expect(j, "kind"), "kind");
    if (doc.kind == "cyclic_module") {
        doc.cyclic = cyclic_rep_from_json(j);
        doc.ring = doc.cyclic->ring;
        if (j.contains("ideal_generators"))
            for (const Json& g : expect_array(j.at("ideal_generators"), "ideal_generators"))
                doc.ideal_generators.push_back(
                    parse_poly(doc.cyclic->alphabet, doc.cyclic->ring, false,
                               expect_string(g, "ideal generator")));
    } else if (doc.kind == "algebra") {
        doc.algebra = algebra_rep_from_json(j);
        doc.ring = doc.algebra->ring;
        if (j.contains("y_subset")) {
            for (const std::string& name : string_list(j.at("y_subset"), "y_subset")) {
                const std::size_t idx = doc.algebra->alphabet.index_of(name);
                if (idx == Alphabet::npos)
                    throw domain_error("unknown variable \"" + name + "\" in y_subset");
                doc.y_subset.push_back(idx);
            }
            std::sort(doc.y_subset.begin(), doc.y_subset.end());
            if (std::adjacent_find(doc.y_subset.begin(), doc.y_subset.end()) !=
                doc.y_subset.end())
                throw domain_error("duplicate variable in y_subset");
        }
        if (j.contains("rewrite"))
            for (const Json& t : expect_array(j.at("rewrite"), "rewrite"))
                doc.rewrite_targets.push_back(
                    parse_poly(doc.algebra->alphabet, doc.algebra->ring, false,
                               expect_string(t, "rewrite target")));
    } else if (doc.kind == "extension") {
        doc.ring = ring_from_json(expect(j, "ring"));
        doc.base_alphabet = alphabet_from(expect(j, "variables"));
        std::vector<std::string> gen_names;
        for (const Json& g : expect_array(expect(j, "r_generators"), "r_generators")) {
            NamedGenerator ng;
            ng.name = expect_string(expect(g, "name"), "generator name");
            ng.witness = parse_poly(doc.base_alphabet, doc.ring, false,
                                    expect_string(expect(g, "witness"), "generator witness"));
            gen_names.push_back(ng.name);
            doc.r_generators.push_back(std::move(ng));
        }
        const Alphabet gen_alphabet(gen_names);
        for (const Json& rel : expect_array(expect(j, "b_relations"), "b_relations"))
            doc.b_relations.push_back(parse_poly(gen_alphabet, doc.ring, false,
                                                 expect_string(rel, "relation")));
    } else {
        throw domain_error("unknown document kind \"" + doc.kind + "\"");
    }

    if (j.contains("params")) {
        const Json& params = j.at("params");
        if (!params.is_object()) throw domain_error("params must be an object");
        if (params.contains("deg_cap"))
            doc.deg_cap = expect_size(params.at("deg_cap"), "params.deg_cap");
        if (params.contains("samples"))
            doc.samples = expect_size(params.at("samples"), "params.samples");
        if (params.contains("seed"))
            doc.seed = static_cast<std::uint64_t>(expect_size(params.at("seed"), "params.seed"));
        if (params.contains("simplify")) {
            if (!params.at("simplify").is_boolean())
                throw domain_error("params.simplify must be a boolean");
            doc.simplify = params.at("simplify").get<bool>();
        }
    }
    return doc;
}

Json validation_to_json(const ValidationReport& report) {
    Json j = Json::object();
    j["kind"] = "validation";
    j["ok"] = report.ok;
    j["violations"] = report.violations;
    j["classification"] = ideal_class_name(report.ideal_class);
    return j;
}

Json verification_to_json(const VerificationReport& report) {
    Json j = Json::object();
    j["kind"] = "verification";
    j["ok"] = report.ok();
    j["sound"] = report.sound;
    j["failed_relations"] = report.failed_relations;
    j["identity_samples"] = report.identity_samples;
    j["identity_failures"] = report.identity_failures;
    Json degrees = Json::array();
    for (const DegreeCheck& check : report.degree_checks) {
        Json d = Json::object();
        d["degree"] = check.degree;
        d["expected_rank"] = check.expected_rank;
        d["achieved_rank"] = check.achieved_rank;
        d["matched"] = check.matched;
        degrees.push_back(std::move(d));
    }
    j["degrees"] = std::move(degrees);
    j["complete"] = report.complete;
    return j;
}

std::string render_document(const Json& j) { return j.dump(2) + "\n"; }

} // namespace corank
