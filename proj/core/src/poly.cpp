#include "corank/poly.hpp"

#include <algorithm>

namespace corank {

Polynomial::Polynomial(Alphabet alphabet, Ring ring, bool unital)
    : alphabet_(std::move(alphabet)), ring_(ring), unital_(unital) {}

Polynomial Polynomial::zero(Alphabet a, Ring r, bool unital) {
    return Polynomial(std::move(a), r, unital);
}

Polynomial Polynomial::one(Alphabet a, Ring r) {
    Polynomial p(std::move(a), r, true);
    p.add_term({}, Scalar::one(r));
    return p;
}

Polynomial Polynomial::monomial(Alphabet a, Ring r, bool unital, Word w, Scalar c) {
    Polynomial p(std::move(a), r, unital);
    if (c.ring() != r)
        throw domain_error("monomial: coefficient ring mismatch");
    if (!unital && w.empty() && !c.is_zero())
        throw domain_error("monomial: empty word requires a unital polynomial");
    for (auto letter : w)
        if (letter >= p.alphabet_.size())
            throw domain_error("monomial: letter outside alphabet");
    p.add_term(w, c);
    return p;
}

Polynomial Polynomial::variable(Alphabet a, Ring r, bool unital, std::size_t i) {
    if (i >= a.size())
        throw domain_error("variable: index outside alphabet");
    return monomial(std::move(a), r, unital, Word{static_cast<std::uint32_t>(i)},
                    Scalar::one(r));
}

long Polynomial::degree() const {
    long d = -1;
    for (const auto& [w, c] : terms_)
        d = std::max(d, static_cast<long>(w.size()));
    return d;
}

Scalar Polynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void Polynomial::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero())
        return;
    if (w.empty() && !unital_)
        throw domain_error("add_term: empty word requires a unital polynomial");
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (ring_ != o.ring_)
        throw domain_error("polynomial arithmetic: ring mismatch");
    if (!(alphabet_ == o.alphabet_))
        throw domain_error("polynomial arithmetic: alphabet mismatch");
    if (unital_ != o.unital_)
        throw domain_error("polynomial arithmetic: unital/non-unital mix");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(alphabet_, ring_, unital_);
    for (const auto& [w, c] : terms_)
        out.terms_.emplace(w, -c);
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out(alphabet_, ring_, unital_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_)
            out.add_term(concat(w1, w2), c1 * c2);
    return out;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
    if (c.ring() != p.ring_)
        throw domain_error("scalar * polynomial: ring mismatch");
    Polynomial out(p.alphabet_, p.ring_, p.unital_);
    for (const auto& [w, pc] : p.terms_)
        out.add_term(w, c * pc);
    return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return ring_ == o.ring_ && alphabet_ == o.alphabet_ && unital_ == o.unital_ &&
           terms_ == o.terms_;
}

Polynomial Polynomial::embed_unital() const {
    Polynomial out(alphabet_, ring_, true);
    out.terms_ = terms_;
    return out;
}

Polynomial Polynomial::restrict_nonunital() const {
    if (!constant_coefficient().is_zero())
        throw domain_error("restrict_nonunital: nonzero empty-word coefficient");
    Polynomial out(alphabet_, ring_, false);
    out.terms_ = terms_;
    return out;
}

std::string format_poly(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::vector<std::pair<Word, Scalar>> items(p.terms().begin(), p.terms().end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size())
            return a.first.size() > b.first.size();
        return word_less(a.first, b.first);
    });
    std::string out;
    bool first = true;
    for (const auto& [w, c] : items) {
        Scalar abs = c;
        bool negative = false;
        std::string cs = c.to_string();
        if (!cs.empty() && cs[0] == '-') {
            negative = true;
            abs = -c;
        }
        if (first) {
            if (negative)
                out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string as = abs.to_string();
        if (w.empty()) {
            out += as;
        } else if (as == "1") {
            out += p.alphabet().word_to_string(w);
        } else {
            out += as + "*" + p.alphabet().word_to_string(w);
        }
    }
    return out;
}

} // namespace corank
