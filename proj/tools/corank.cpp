#include "corank/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace corank;

struct Options {
    std::string input;
    std::string out;
    std::string presentation_path;
    std::size_t deg_cap = 5;
    std::size_t samples = 25;
    std::uint64_t seed = 1;
    bool deg_cap_set = false;
    bool samples_set = false;
    bool seed_set = false;
    bool simplify = false;
    bool timings = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot open input file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw domain_error("input is not valid JSON");
    return j;
}

void resolve_params(Options& opt, const ProblemDocument& doc) {
    if (!opt.deg_cap_set && doc.deg_cap) opt.deg_cap = *doc.deg_cap;
    if (!opt.samples_set && doc.samples) opt.samples = *doc.samples;
    if (!opt.seed_set && doc.seed) opt.seed = *doc.seed;
    if (doc.simplify && *doc.simplify) opt.simplify = true;
}

const CyclicModuleRep& require_cyclic(const ProblemDocument& doc) {
    if (!doc.cyclic)
        throw domain_error("this command needs a \"cyclic_module\" document");
    return *doc.cyclic;
}

const AlgebraRep& require_algebra(const ProblemDocument& doc) {
    if (!doc.algebra) throw domain_error("this command needs an \"algebra\" document");
    return *doc.algebra;
}

void require_valid(const ValidationReport& report) {
    if (report.ok) return;
    std::string message = "representation is invalid";
    for (const std::string& v : report.violations) message += "; " + v;
    throw domain_error(message);
}

Json presentation_payload(const Presentation& pres) { return presentation_to_json(pres); }

int run_check_input(const ProblemDocument& doc, Json& out) {
    if (doc.cyclic) {
        out = validation_to_json(doc.cyclic->validate());
        out["corank"] = doc.cyclic->labels.size() - 1;
    } else if (doc.algebra) {
        out = validation_to_json(doc.algebra->validate());
        out["rank"] = doc.algebra->rank();
    } else {
        ValidationReport report;
        report.ok = true;
        out = validation_to_json(report);
        out.erase("classification");
    }
    return 0;
}

int run_present(const ProblemDocument& doc, Options& opt, Json& out) {
    const CyclicModuleRep& rep = require_cyclic(doc);
    require_valid(rep.validate());
    if (doc.ideal_generators.empty()) {
        Presentation pres = present_right_ideal(rep);
        if (opt.simplify) pres = simplify_presentation(pres);
        out = presentation_payload(pres);
        return 0;
    }
    const auto pres = present_quotient_subalgebra(rep, doc.ideal_generators, opt.deg_cap);
    if (!pres) {
        out = Json::object();
        out["kind"] = "inconclusive";
        out["reason"] = "bounded ideal restriction failed at degree cap " +
                        std::to_string(opt.deg_cap);
        return 3;
    }
    Presentation result = *pres;
    if (opt.simplify) result = simplify_presentation(result);
    out = presentation_payload(result);
    return 0;
}

int run_restrict(const ProblemDocument& doc, Options& opt, Json& out) {
    const CyclicModuleRep& rep = require_cyclic(doc);
    const ValidationReport report = rep.validate();
    require_valid(report);
    if (report.ideal_class != IdealClass::two_sided_ideal)
        throw domain_error("the right ideal is not two-sided");
    if (doc.ideal_generators.empty())
        throw domain_error("\"ideal_generators\" is required for restrict");
    const UData ud = compute_u_data(build_symbol_tables(rep));
    const Presentation pres = present_right_ideal(ud);
    const auto restricted =
        restrict_ideal_generators(ud, pres, doc.ideal_generators, opt.deg_cap);
    if (!restricted) {
        out = Json::object();
        out["kind"] = "inconclusive";
        out["reason"] = "bounded membership searches failed at degree cap " +
                        std::to_string(opt.deg_cap);
        return 3;
    }
    out = Json::object();
    out["kind"] = "restricted_generators";
    Json gens = Json::array();
    Json witnesses = Json::array();
    for (const Polynomial& g : *restricted) {
        gens.push_back(format_poly(g));
        witnesses.push_back(format_poly(psibar_eval(ud, g)));
    }
    out["generators"] = std::move(gens);
    out["witnesses"] = std::move(witnesses);
    return 0;
}

int run_compose(const ProblemDocument& doc, Options& opt, Json& out) {
    if (doc.kind != "extension")
        throw domain_error("this command needs an \"extension\" document");
    const auto result = compose_extension(doc.base_alphabet, doc.ring, doc.r_generators,
                                          doc.b_relations, opt.deg_cap);
    if (!result) {
        out = Json::object();
        out["kind"] = "inconclusive";
        out["reason"] = "bounded rewriting search failed at degree cap " +
                        std::to_string(opt.deg_cap);
        return 3;
    }
    out = Json::object();
    out["kind"] = "extension_result";
    Json gens = Json::array();
    for (const Polynomial& g : result->i_generators) gens.push_back(format_poly(g));
    out["i_generators"] = std::move(gens);
    Json products = Json::array();
    for (const Polynomial& p : result->products) products.push_back(format_poly(p));
    out["products"] = std::move(products);
    out["presentation"] = presentation_payload(result->presentation);
    return 0;
}

int run_verify(const ProblemDocument& doc, Options& opt, Json& out) {
    const CyclicModuleRep& rep = require_cyclic(doc);
    require_valid(rep.validate());
    if (opt.presentation_path.empty())
        throw domain_error("--presentation is required for verify");
    const Json pj = parse_json(read_input(opt.presentation_path));
    const Presentation pres = presentation_from_json(pj);
    if (pres.base_alphabet != rep.alphabet || !(pres.ring == rep.ring))
        throw domain_error("presentation does not match the representation");
    const VerificationReport report =
        verify_presentation(rep, pres, opt.deg_cap, opt.samples, opt.seed);
    out = verification_to_json(report);
    return 0;
}

int run_generate(const ProblemDocument& doc, Options& opt, Json& out) {
    (void)opt;
    GenerationSpec spec;
    spec.rep = require_algebra(doc);
    spec.y_subset = doc.y_subset;
    spec.validate();
    const GeneratingSet gens = finite_generating_set(spec);
    out = Json::object();
    out["kind"] = "generating_set";
    Json generators = Json::array();
    Json provenance = Json::array();
    for (const BGenerator& g : gens.u_part) {
        generators.push_back(format_poly(g.value));
        Json item = Json::object();
        item["word"] = format_poly(Polynomial::monomial(
            spec.rep.alphabet, spec.rep.ring, false, g.source, Scalar::one(spec.rep.ring)));
        item["kind"] = "U";
        provenance.push_back(std::move(item));
    }
    for (const BGenerator& g : gens.z_part) {
        generators.push_back(format_poly(g.value));
        Json item = Json::object();
        item["word"] = "";
        item["kind"] = "Z";
        provenance.push_back(std::move(item));
    }
    out["generators"] = std::move(generators);
    out["provenance"] = std::move(provenance);
    out["dropped_zero_u"] = gens.dropped_zero_u;
    const std::vector<Polynomial> flat = gens.all();
    Json rewrites = Json::array();
    for (const Polynomial& target : doc.rewrite_targets) {
        const AlgebraCombination comb = rewrite_member(spec, gens, target);
        Json item = Json::object();
        item["target"] = format_poly(target);
        item["combination"] = comb.render(flat);
        item["check"] = (comb.evaluate(flat) == target);
        rewrites.push_back(std::move(item));
    }
    out["rewrites"] = std::move(rewrites);
    return 0;
}

int run_reduce(const ProblemDocument& doc, Options& opt, Json& out) {
    (void)opt;
    const AlgebraRep& rep = require_algebra(doc);
    out = algebra_rep_to_json(reduce_to_ideal(rep));
    return 0;
}

int dispatch(const std::string& command, Options& opt) {
    const auto started = std::chrono::steady_clock::now();
    const Json input = parse_json(read_input(opt.input));
    ProblemDocument doc = problem_from_json(input);
    resolve_params(opt, doc);
    const auto parsed = std::chrono::steady_clock::now();

    Json out;
    int code = 0;
    if (command == "check-input")
        code = run_check_input(doc, out);
    else if (command == "present")
        code = run_present(doc, opt, out);
    else if (command == "restrict")
        code = run_restrict(doc, opt, out);
    else if (command == "compose")
        code = run_compose(doc, opt, out);
    else if (command == "verify")
        code = run_verify(doc, opt, out);
    else if (command == "generate")
        code = run_generate(doc, opt, out);
    else if (command == "reduce")
        code = run_reduce(doc, opt, out);

    out["command"] = command;
    out["status"] = code == 0 ? "ok" : "inconclusive";

    if (opt.timings) {
        const auto finished = std::chrono::steady_clock::now();
        const auto ms = [](auto a, auto b) {
            return std::chrono::duration_cast<std::chrono::milliseconds>(b - a).count();
        };
        Json timings = Json::object();
        timings["parse_ms"] = ms(started, parsed);
        timings["compute_ms"] = ms(parsed, finished);
        timings["total_ms"] = ms(started, finished);
        out["timings"] = std::move(timings);
    }

    const std::string rendered = render_document(out);
    if (opt.out.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw domain_error("cannot open output file \"" + opt.out + "\"");
        f << rendered;
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite co-rank ideal toolkit"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&](CLI::App* cmd, bool takes_presentation) {
        cmd->add_option("input", opt.input, "problem document (JSON), or - for stdin")
            ->required();
        cmd->add_option("--out", opt.out, "write the result document here");
        cmd->add_option("--deg-cap", opt.deg_cap, "degree cap for bounded searches");
        cmd->add_option("--samples", opt.samples, "random samples for verification");
        cmd->add_option("--seed", opt.seed, "random seed");
        cmd->add_flag("--simplify", opt.simplify, "drop zero-witness generators");
        cmd->add_flag("--timings", opt.timings, "append wall-clock timings");
        if (takes_presentation)
            cmd->add_option("--presentation", opt.presentation_path,
                            "presentation document to verify");
    };

    for (const char* name : {"check-input", "present", "restrict", "compose", "verify",
                             "generate", "reduce"})
        add_common(app.add_subcommand(name, ""), std::string(name) == "verify");

    app.get_subcommand("check-input")->description("validate and classify a representation");
    app.get_subcommand("present")->description("present a right ideal (or a quotient by one)");
    app.get_subcommand("restrict")->description("restrict ideal generators to the presentation");
    app.get_subcommand("compose")->description("assemble the preimage ideal of an extension");
    app.get_subcommand("verify")->description("check a presentation against its representation");
    app.get_subcommand("generate")->description("finite generating set of a subalgebra preimage");
    app.get_subcommand("reduce")->description("reduce a subalgebra to an enclosed ideal");

    CLI11_PARSE(app, argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    opt.deg_cap_set = sub->count("--deg-cap") > 0;
    opt.samples_set = sub->count("--samples") > 0;
    opt.seed_set = sub->count("--seed") > 0;

    try {
        return dispatch(sub->get_name(), opt);
    } catch (const corank::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
