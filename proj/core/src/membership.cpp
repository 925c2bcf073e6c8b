#include "corank/membership.hpp"

#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace corank {

namespace {

struct Candidate {
    Word left;
    std::size_t generator;
    Word right;
};

bool matches_at(const Word& w, const Word& sub, std::size_t pos) {
    for (std::size_t i = 0; i < sub.size(); ++i)
        if (w[pos + i] != sub[i])
            return false;
    return true;
}

} // namespace

std::optional<MembershipCertificate>
ideal_membership_bounded(const std::vector<Polynomial>& generators,
                         const Polynomial& target, IdealSide side,
                         std::size_t deg_cap) {
    const Ring ring = target.ring();
    const Alphabet& alphabet = target.alphabet();
    for (const auto& g : generators) {
        if (g.ring() != ring || !(g.alphabet() == alphabet))
            throw domain_error("membership: generators and target must share ring and alphabet");
    }
    if (target.is_zero())
        return MembershipCertificate{};

    // Grow the connected component of the target's support: a monomial w
    // reaches candidate (l, g, r) when some term of g occurs in w as a
    // subword with prefix l and suffix r of length <= deg_cap; the
    // candidate's remaining monomials are then reachable too. Restricting
    // any certificate to this component leaves a certificate, so the
    // pruned exact solve is still complete for the cap.
    std::vector<Candidate> rows;
    std::set<std::tuple<Word, std::size_t, Word>> row_keys;
    std::set<Word, WordLess> seen;
    std::deque<Word> queue;
    for (const auto& [w, c] : target.terms()) {
        seen.insert(w);
        queue.push_back(w);
    }
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            const Polynomial& g = generators[gi];
            if (g.is_zero())
                continue;
            for (const auto& [gw, gc] : g.terms()) {
                if (gw.size() > w.size())
                    continue;
                std::size_t last = w.size() - gw.size();
                for (std::size_t pos = 0; pos <= last; ++pos) {
                    if (pos > deg_cap || last - pos > deg_cap)
                        continue;
                    if (side == IdealSide::right && pos != 0)
                        continue;
                    if (!matches_at(w, gw, pos))
                        continue;
                    Word left(w.begin(), w.begin() + pos);
                    Word right(w.begin() + pos + gw.size(), w.end());
                    if (!row_keys.emplace(left, gi, right).second)
                        continue;
                    rows.push_back({left, gi, std::move(right)});
                    const auto& cand = rows.back();
                    for (const auto& [ow, oc] : g.terms()) {
                        Word m = concat(concat(cand.left, ow), cand.right);
                        if (seen.insert(m).second)
                            queue.push_back(m);
                    }
                }
            }
        }
    }

    std::map<Word, std::size_t, WordLess> column;
    for (const Word& w : seen)
        column.emplace(w, column.size());

    Matrix m(ring, rows.size(), column.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& cand = rows[i];
        for (const auto& [gw, c] : generators[cand.generator].terms())
            m.at(i, column.at(concat(concat(cand.left, gw), cand.right))) = c;
    }
    Vector b = zero_vector(ring, column.size());
    for (const auto& [w, c] : target.terms())
        b[column.at(w)] = c;

    auto solution = solve_left(m, b);
    if (!solution)
        return std::nullopt;
    MembershipCertificate cert;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if ((*solution)[i].is_zero())
            continue;
        const auto& cand = rows[i];
        cert.terms.push_back({(*solution)[i], cand.left, cand.generator, cand.right});
    }
    return cert;
}

Polynomial evaluate_certificate(const std::vector<Polynomial>& generators,
                                const MembershipCertificate& cert,
                                const Alphabet& alphabet, Ring ring, bool unital) {
    Polynomial out = Polynomial::zero(alphabet, ring, unital);
    for (const auto& term : cert.terms) {
        if (term.generator >= generators.size())
            throw domain_error("certificate: generator index out of range");
        for (const auto& [w, c] : generators[term.generator].terms())
            out.add_term(concat(concat(term.left, w), term.right), term.coeff * c);
    }
    return out;
}

} // namespace corank
