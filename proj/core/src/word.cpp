#include "corank/word.hpp"

#include <algorithm>
#include <cctype>

namespace corank {

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

bool valid_variable_name(const std::string& name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

Alphabet::Alphabet() : d_(std::make_shared<Data>()) {}

Alphabet::Alphabet(std::vector<std::string> names) {
    auto d = std::make_shared<Data>();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!valid_variable_name(names[i]))
            throw domain_error("bad variable name '" + names[i] + "'");
        if (!d->index.emplace(names[i], i).second)
            throw domain_error("duplicate variable name '" + names[i] + "'");
    }
    d->names = std::move(names);
    d_ = std::move(d);
}

std::size_t Alphabet::index_of(const std::string& name) const {
    auto it = d_->index.find(name);
    return it == d_->index.end() ? npos : it->second;
}

bool Alphabet::operator==(const Alphabet& o) const {
    return d_ == o.d_ || d_->names == o.d_->names;
}

std::string Alphabet::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::size_t run = 1;
        while (i + run < w.size() && w[i + run] == w[i]) ++run;
        if (!s.empty()) s += "*";
        s += name(w[i]);
        if (run > 1) s += "^" + std::to_string(run);
        i += run - 1;
    }
    return s;
}

std::vector<Word> enumerate_words(const Alphabet& a, std::size_t min_deg, std::size_t max_deg) {
    std::vector<Word> out;
    if (min_deg > max_deg) return out;
    std::vector<Word> level;
    level.push_back({});
    for (std::size_t d = 0; d <= max_deg; ++d) {
        if (d >= min_deg)
            for (const auto& w : level) out.push_back(w);
        if (d == max_deg) break;
        std::vector<Word> next;
        next.reserve(level.size() * a.size());
        for (const auto& w : level)
            for (std::uint32_t x = 0; x < a.size(); ++x) {
                Word nw = w;
                nw.push_back(x);
                next.push_back(std::move(nw));
            }
        level = std::move(next);
    }
    return out;
}

} // namespace corank
