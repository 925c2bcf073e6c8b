#pragma once

#include "corank/scalar.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace corank {

/// A word over an alphabet, stored as letter indices. The empty word is the
/// multiplicative identity of the unital algebra.
using Word = std::vector<std::uint32_t>;

/// Graded order: by length first, then lexicographically by letter index.
bool word_less(const Word& a, const Word& b);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return word_less(a, b); }
};

Word concat(const Word& a, const Word& b);

/// Immutable ordered list of distinct variable names. Cheap to copy; two
/// alphabets are equal when their name lists are.
class Alphabet {
  public:
    Alphabet();
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return d_->names.size(); }
    const std::string& name(std::size_t i) const { return d_->names[i]; }
    const std::vector<std::string>& names() const { return d_->names; }
    /// Index of a name, or npos when absent.
    std::size_t index_of(const std::string& name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool operator==(const Alphabet& o) const;
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

    std::string word_to_string(const Word& w) const;

  private:
    struct Data {
        std::vector<std::string> names;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> d_;
};

bool valid_variable_name(const std::string& name);

/// All words with min_deg <= length <= max_deg in canonical order.
std::vector<Word> enumerate_words(const Alphabet& a, std::size_t min_deg, std::size_t max_deg);

} // namespace corank
