#pragma once

#include "corank/matrix.hpp"
#include "corank/word.hpp"

#include <map>

namespace corank {

/// Element of the free associative algebra over an alphabet, with or
/// without the empty word. Unital and non-unital values never mix in
/// arithmetic; convert explicitly with embed_unital / restrict_nonunital.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(Alphabet alphabet, Ring ring, bool unital);

    static Polynomial zero(Alphabet a, Ring r, bool unital);
    static Polynomial one(Alphabet a, Ring r);
    static Polynomial monomial(Alphabet a, Ring r, bool unital, Word w, Scalar c);
    static Polynomial variable(Alphabet a, Ring r, bool unital, std::size_t i);

    const Alphabet& alphabet() const { return alphabet_; }
    Ring ring() const { return ring_; }
    bool unital() const { return unital_; }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial, 0 for nonzero constants.
    long degree() const;
    Scalar coefficient(const Word& w) const;
    Scalar constant_coefficient() const { return coefficient({}); }
    std::size_t term_count() const { return terms_.size(); }

    /// Accumulate c * w; drops the term when the sum cancels.
    void add_term(const Word& w, const Scalar& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    friend Polynomial operator*(const Scalar& c, const Polynomial& p);

    /// Same terms, unital type.
    Polynomial embed_unital() const;
    /// Same terms, non-unital type; throws when the empty-word
    /// coefficient is nonzero.
    Polynomial restrict_nonunital() const;

  private:
    void check_compatible(const Polynomial& o) const;

    Alphabet alphabet_;
    Ring ring_{};
    bool unital_ = false;
    std::map<Word, Scalar, WordLess> terms_;
};

std::string format_poly(const Polynomial& p);

} // namespace corank
