#include "corank/generation.hpp"

#include <map>

namespace corank {

namespace {

Matrix y_image_matrix(const GenerationSpec& spec) {
    const std::size_t k = spec.rep.rank();
    Matrix m(spec.rep.ring, spec.y_subset.size(), k);
    for (std::size_t i = 0; i < spec.y_subset.size(); ++i)
        for (std::size_t j = 0; j < k; ++j)
            m.at(i, j) = spec.rep.images[spec.y_subset[i]][j];
    return m;
}

Matrix stacked_solve_matrix(const GenerationSpec& spec, const Submodule& marked) {
    const Matrix ym = y_image_matrix(spec);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < ym.rows(); ++i) rows.push_back(ym.row(i));
    for (std::size_t i = 0; i < marked.rank(); ++i) rows.push_back(marked.basis().row(i));
    return Matrix::from_rows(spec.rep.ring, spec.rep.rank(), rows);
}

} // namespace

void GenerationSpec::validate() const {
    const ValidationReport report = rep.validate();
    if (!report.ok) throw domain_error("invalid algebra representation");
    if (report.ideal_class == IdealClass::submodule_only)
        throw domain_error("marked submodule is not a subalgebra");
    if (y_subset.empty() && rep.rank() > 0 &&
        rep.effective_marked().rank() < rep.rank())
        throw domain_error("empty variable subset cannot generate the quotient");
    for (std::size_t i = 0; i < y_subset.size(); ++i) {
        if (y_subset[i] >= rep.alphabet.size())
            throw domain_error("variable subset index out of range");
        if (i > 0 && y_subset[i] <= y_subset[i - 1])
            throw domain_error("variable subset must be strictly increasing");
    }
    std::vector<Vector> gens;
    for (std::size_t y : y_subset) gens.push_back(rep.images[y]);
    const Submodule spanned =
        Submodule::span(rep.ring, rep.rank(), gens).sum(rep.effective_marked());
    if (spanned != Submodule::full(rep.ring, rep.rank()))
        throw domain_error("variable images do not generate the quotient");
}

Polynomial gamma_linearize(const GenerationSpec& spec, const Polynomial& p) {
    const Submodule marked = spec.rep.effective_marked();
    const Matrix m = stacked_solve_matrix(spec, marked);
    const auto sol = solve_left(m, spec.rep.image_of(p));
    if (!sol) throw domain_error("polynomial image is outside the generated span");
    Polynomial out = Polynomial::zero(spec.rep.alphabet, spec.rep.ring, false);
    for (std::size_t i = 0; i < spec.y_subset.size(); ++i)
        if (!(*sol)[i].is_zero())
            out.add_term({static_cast<std::uint32_t>(spec.y_subset[i])}, (*sol)[i]);
    return out;
}

GeneratingSet finite_generating_set(const GenerationSpec& spec) {
    GeneratingSet out;
    for (const Word& w : enumerate_words(spec.rep.alphabet, 1, 3)) {
        const Polynomial mono = Polynomial::monomial(spec.rep.alphabet, spec.rep.ring,
                                                     false, w, Scalar::one(spec.rep.ring));
        Polynomial val = mono - gamma_linearize(spec, mono);
        if (val.is_zero()) {
            ++out.dropped_zero_u;
            continue;
        }
        out.u_part.push_back({w, std::move(val), false});
    }
    const Submodule kernel = preimage_of_span(y_image_matrix(spec), spec.rep.effective_marked());
    for (std::size_t i = 0; i < kernel.rank(); ++i) {
        const Vector row = kernel.basis().row(i);
        Polynomial val = Polynomial::zero(spec.rep.alphabet, spec.rep.ring, false);
        for (std::size_t j = 0; j < spec.y_subset.size(); ++j)
            if (!row[j].is_zero())
                val.add_term({static_cast<std::uint32_t>(spec.y_subset[j])}, row[j]);
        out.z_part.push_back({{}, std::move(val), true});
    }
    return out;
}

std::vector<Polynomial> GeneratingSet::all() const {
    std::vector<Polynomial> out;
    for (const auto& g : u_part) out.push_back(g.value);
    for (const auto& g : z_part) out.push_back(g.value);
    return out;
}

Polynomial AlgebraCombination::evaluate(const std::vector<Polynomial>& generators) const {
    std::vector<std::optional<Polynomial>> memo(nodes.size());
    const auto eval = [&](auto&& self, std::size_t id) -> const Polynomial& {
        if (memo[id]) return *memo[id];
        const Node& node = nodes[id];
        switch (node.kind) {
            case Node::Kind::leaf:
                memo[id] = generators.at(node.leaf);
                break;
            case Node::Kind::sum: {
                Polynomial acc = Polynomial::zero(alphabet, ring, false);
                for (const auto& [c, child] : node.summands)
                    acc = acc + c * self(self, child);
                memo[id] = std::move(acc);
                break;
            }
            case Node::Kind::product: {
                Polynomial acc = self(self, node.factors.at(0));
                for (std::size_t i = 1; i < node.factors.size(); ++i)
                    acc = acc * self(self, node.factors[i]);
                memo[id] = std::move(acc);
                break;
            }
        }
        return *memo[id];
    };
    if (nodes.empty()) throw domain_error("empty combination");
    return eval(eval, root);
}

std::string AlgebraCombination::render(const std::vector<Polynomial>& generators) const {
    const auto text = [&](auto&& self, std::size_t id, bool parenthesize_sum) -> std::string {
        const Node& node = nodes[id];
        switch (node.kind) {
            case Node::Kind::leaf:
                return "(" + format_poly(generators.at(node.leaf)) + ")";
            case Node::Kind::product: {
                std::string s;
                for (std::size_t i = 0; i < node.factors.size(); ++i) {
                    if (i) s += "*";
                    s += self(self, node.factors[i], true);
                }
                return s;
            }
            case Node::Kind::sum: {
                if (node.summands.empty()) return "0";
                std::string s;
                for (std::size_t i = 0; i < node.summands.size(); ++i) {
                    const auto& [c, child] = node.summands[i];
                    if (i) s += " + ";
                    if (!(c == Scalar::one(c.ring()))) s += c.to_string() + "*";
                    s += self(self, child, true);
                }
                if (parenthesize_sum && node.summands.size() > 1) return "(" + s + ")";
                return s;
            }
        }
        return {};
    };
    if (nodes.empty()) throw domain_error("empty combination");
    return text(text, root, false);
}

AlgebraCombination rewrite_member(const GenerationSpec& spec, const GeneratingSet& gens,
                                  const Polynomial& p) {
    if (p.unital()) throw domain_error("member must be non-unital");
    if (!spec.rep.is_member(p))
        throw domain_error("polynomial is not a member of the subalgebra");

    AlgebraCombination comb;
    comb.alphabet = spec.rep.alphabet;
    comb.ring = spec.rep.ring;
    std::map<Word, std::size_t, WordLess> u_of_word; // word -> generator index
    for (std::size_t i = 0; i < gens.u_part.size(); ++i)
        u_of_word[gens.u_part[i].source] = i;
    const std::size_t z_offset = gens.u_part.size();

    Matrix z_matrix(spec.rep.ring, gens.z_part.size(), spec.y_subset.size());
    for (std::size_t i = 0; i < gens.z_part.size(); ++i)
        for (std::size_t j = 0; j < spec.y_subset.size(); ++j)
            z_matrix.at(i, j) = gens.z_part[i].value.coefficient(
                {static_cast<std::uint32_t>(spec.y_subset[j])});

    std::map<std::size_t, std::size_t> leaf_node; // generator index -> node id
    const auto leaf = [&](std::size_t gen_index) {
        const auto it = leaf_node.find(gen_index);
        if (it != leaf_node.end()) return it->second;
        AlgebraCombination::Node node;
        node.kind = AlgebraCombination::Node::Kind::leaf;
        node.leaf = gen_index;
        comb.nodes.push_back(node);
        leaf_node[gen_index] = comb.nodes.size() - 1;
        return comb.nodes.size() - 1;
    };

    const auto build = [&](auto&& self, const Polynomial& q) -> std::size_t {
        AlgebraCombination::Node node;
        node.kind = AlgebraCombination::Node::Kind::sum;
        const long deg = q.degree();
        if (deg >= 0 && deg <= 3) {
            Vector y_coords = zero_vector(spec.rep.ring, spec.y_subset.size());
            for (const auto& [w, c] : q.terms()) {
                const Polynomial mono = Polynomial::monomial(
                    spec.rep.alphabet, spec.rep.ring, false, w, Scalar::one(spec.rep.ring));
                const Polynomial linear = gamma_linearize(spec, mono);
                if (!(mono - linear).is_zero())
                    node.summands.emplace_back(c, leaf(u_of_word.at(w)));
                for (std::size_t j = 0; j < spec.y_subset.size(); ++j) {
                    const Scalar lc = linear.coefficient(
                        {static_cast<std::uint32_t>(spec.y_subset[j])});
                    if (!lc.is_zero()) y_coords[j] = y_coords[j] + c * lc;
                }
            }
            const auto zsol = solve_left(z_matrix, y_coords);
            if (!zsol)
                throw domain_error("linear part escapes the kernel generators");
            for (std::size_t i = 0; i < gens.z_part.size(); ++i)
                if (!(*zsol)[i].is_zero())
                    node.summands.emplace_back((*zsol)[i], leaf(z_offset + i));
        } else if (deg > 3) {
            Polynomial remainder = q;
            std::vector<std::pair<Word, Scalar>> top;
            for (const auto& [w, c] : q.terms())
                if (static_cast<long>(w.size()) == deg) top.emplace_back(w, c);
            for (const auto& [w, c] : top) {
                AlgebraCombination::Node product;
                product.kind = AlgebraCombination::Node::Kind::product;
                Polynomial prod = Polynomial::one(spec.rep.alphabet, spec.rep.ring);
                std::size_t pos = 0;
                while (pos < w.size()) {
                    const std::size_t chunk = (w.size() - pos == 3) ? 3 : 2;
                    const Word block(w.begin() + static_cast<long>(pos),
                                     w.begin() + static_cast<long>(pos + chunk));
                    product.factors.push_back(leaf(u_of_word.at(block)));
                    prod = prod * gens.u_part[u_of_word.at(block)].value.embed_unital();
                    pos += chunk;
                }
                comb.nodes.push_back(product);
                node.summands.emplace_back(c, comb.nodes.size() - 1);
                remainder = remainder - c * prod.restrict_nonunital();
            }
            if (remainder.degree() >= deg)
                throw domain_error("rewriting failed to lower the degree");
            if (!remainder.is_zero())
                node.summands.emplace_back(Scalar::one(spec.rep.ring),
                                           self(self, remainder));
        }
        comb.nodes.push_back(node);
        return comb.nodes.size() - 1;
    };

    comb.root = build(build, p);
    return comb;
}

} // namespace corank
