#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sl2k/errors.hpp"
#include "sl2k/matrix2.hpp"

namespace sl2k {

// Words in named generators. Generator names are single lowercase letters;
// the corresponding uppercase letter denotes the inverse.

inline bool is_generator_name(char c) { return c >= 'a' && c <= 'z'; }
inline char inverse_letter(char c) { return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A')
                                                                   : static_cast<char>(c - 'A' + 'a'); }

// cancel adjacent xX / Xx pairs until none remain
std::string freely_reduce(const std::string& word);

// All freely reduced nonempty words over the given generators in
// length-then-lexicographic order (lowercase letters in declaration order,
// then their uppercase inverses). The callback returns false to stop early.
void for_each_reduced_word(const std::vector<char>& gens, std::size_t max_len,
                           const std::function<bool(const std::string&)>& fn);

template <typename T>
Mat2<T> evaluate_word(const std::map<char, Mat2<T>>& gens, const std::string& word, const Mat2<T>& identity) {
    Mat2<T> acc = identity;
    for (char c : word) {
        char base = is_generator_name(c) ? c : inverse_letter(c);
        auto it = gens.find(base);
        if (it == gens.end()) throw UnknownGenerator(std::string("unknown generator '") + c + "'");
        acc = acc * (is_generator_name(c) ? it->second : it->second.adjugate());
    }
    return acc;
}

}  // namespace sl2k
