#include "sl2k/words.hpp"

namespace sl2k {

std::string freely_reduce(const std::string& word) {
    std::string out;
    for (char c : word) {
        if (!out.empty() && out.back() == inverse_letter(c)) {
            out.pop_back();
        } else {
            out.push_back(c);
        }
    }
    return out;
}

void for_each_reduced_word(const std::vector<char>& gens, std::size_t max_len,
                           const std::function<bool(const std::string&)>& fn) {
    std::vector<char> letters;
    letters.reserve(gens.size() * 2);
    for (char g : gens) letters.push_back(g);
    for (char g : gens) letters.push_back(inverse_letter(g));

    std::string word;
    // depth-first in letter order emits each length level in lex order
    std::function<bool(std::size_t)> walk = [&](std::size_t remaining) -> bool {
        if (remaining == 0) return fn(word);
        for (char c : letters) {
            if (!word.empty() && word.back() == inverse_letter(c)) continue;
            word.push_back(c);
            bool keep_going = walk(remaining - 1);
            word.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    for (std::size_t len = 1; len <= max_len; ++len) {
        if (!walk(len)) return;
    }
}

}  // namespace sl2k
