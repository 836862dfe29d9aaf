#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2k/domains.hpp"
#include "sl2k/words.hpp"

namespace sl2k {

// A presented rank-two representation: named det-1 generators over one
// coefficient domain plus the designated puncture words.
template <typename T>
struct RepPresentation {
    std::vector<char> order;  // generator names in declaration order
    std::map<char, Mat2<T>> gens;
    std::vector<std::string> punctures;

    void add_generator(char name, const Mat2<T>& m) {
        require_det_one(m);
        if (!gens.emplace(name, m).second) throw ParseError(std::string("duplicate generator '") + name + "'");
        order.push_back(name);
    }
};

template <typename T>
Mat2<T> rep_identity(const RepPresentation<T>& rep) {
    if (rep.gens.empty()) throw ParseError("representation has no generators");
    const T& sample = rep.gens.begin()->second.a;
    return mat2_identity(one_like(sample), zero_like(sample));
}

template <typename T>
Mat2<T> rep_evaluate(const RepPresentation<T>& rep, const std::string& word) {
    return evaluate_word(rep.gens, word, rep_identity(rep));
}

}  // namespace sl2k
