#include "corank/parse.hpp"

#include <cctype>

namespace corank {

namespace {

class Parser {
  public:
    Parser(const Alphabet& alphabet, Ring ring, const std::string& text)
        : alphabet_(alphabet), ring_(ring), text_(text) {}

    Polynomial run() {
        Polynomial value = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected trailing input", pos_);
        return value;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        } else if (peek() == '+') {
            ++pos_;
        }
        Polynomial value = term();
        if (negate)
            value = -value;
        while (true) {
            char c = peek();
            if (c != '+' && c != '-')
                break;
            ++pos_;
            Polynomial rhs = term();
            if (c == '+')
                value += rhs;
            else
                value -= rhs;
        }
        return value;
    }

    Polynomial term() {
        Polynomial value = factor();
        while (peek() == '*') {
            ++pos_;
            value = value * factor();
        }
        return value;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw parse_error("expected exponent", at);
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > 4096)
                    throw parse_error("exponent too large", at);
                ++pos_;
            }
            Polynomial out = Polynomial::one(alphabet_, ring_);
            for (unsigned long i = 0; i < e; ++i)
                out = out * base;
            return out;
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        std::size_t at = pos_;
        if (pos_ >= text_.size())
            throw parse_error("unexpected end of input", at);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (peek() != ')')
                throw parse_error("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return number(at);
        if (std::isalpha(static_cast<unsigned char>(c)))
            return variable(at);
        throw parse_error("expected variable, number, or '('", at);
    }

    Polynomial number(std::size_t at) {
        Int num = digits(at);
        Int den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            if (!ring_.is_rationals())
                throw parse_error("fractions are only valid over the rationals", pos_);
            ++pos_;
            std::size_t dat = pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw parse_error("expected denominator", dat);
            den = digits(dat);
            if (den == 0)
                throw parse_error("zero denominator", dat);
        }
        return Polynomial::monomial(alphabet_, ring_, true, {}, Scalar(ring_, num, den));
    }

    Int digits(std::size_t at) {
        (void)at;
        Int value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return value;
    }

    Polynomial variable(std::size_t at) {
        std::string name;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                ++pos_;
            } else {
                break;
            }
        }
        std::size_t idx = alphabet_.index_of(name);
        if (idx == Alphabet::npos)
            throw parse_error("unknown variable '" + name + "'", at);
        return Polynomial::variable(alphabet_, ring_, true, idx);
    }

    const Alphabet& alphabet_;
    Ring ring_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_poly(const Alphabet& alphabet, Ring ring, bool unital,
                      const std::string& text) {
    Parser parser(alphabet, ring, text);
    Polynomial value = parser.run();
    if (unital)
        return value;
    if (!value.constant_coefficient().is_zero())
        throw parse_error("empty-word term requires a unital polynomial", 0);
    return value.restrict_nonunital();
}

} // namespace corank
