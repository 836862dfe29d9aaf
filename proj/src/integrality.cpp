#include "sl2k/integrality.hpp"

#include "sl2k/numberfield.hpp"

namespace sl2k {

IntegralityReport integrality_scan(const RepPresentation<NFElem>& rep, std::size_t max_len) {
    IntegralityReport report;
    report.max_len = max_len;
    if (rep.order.empty()) throw ParseError("presentation has no generators");
    for_each_reduced_word(rep.order, max_len, [&](const std::string& w) {
        ++report.words_checked;
        NFElem tr = trace_of_word(rep, w);
        if (!is_algebraic_integer(tr)) {
            report.violation = IntegralityViolation{w, tr, minimal_polynomial(tr)};
            return false;
        }
        return true;
    });
    return report;
}

}  // namespace sl2k
