#pragma once

#include <optional>
#include <string>

#include "sl2k/rep.hpp"

namespace sl2k {

template <typename T>
T trace_of_word(const RepPresentation<T>& rep, const std::string& word) {
    return rep_evaluate(rep, freely_reduce(word)).trace();
}

struct IntegralityViolation {
    std::string word;
    NFElem trace;
    QPoly minpoly;
};

struct IntegralityReport {
    std::size_t max_len = 0;
    std::size_t words_checked = 0;
    std::optional<IntegralityViolation> violation;  // empty means AllIntegral

    bool all_integral() const { return !violation.has_value(); }
};

// Scan every freely reduced word up to max_len in length-lex order and test
// whether its trace is an algebraic integer; the first violation is reported.
IntegralityReport integrality_scan(const RepPresentation<NFElem>& rep, std::size_t max_len);

inline constexpr std::size_t DEFAULT_INTEGRALITY_MAX_LEN = 6;

}  // namespace sl2k
