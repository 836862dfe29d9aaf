#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2k/hodgesign.hpp"
#include "sl2k/rep.hpp"
#include "sl2k/treeharm.hpp"

namespace sl2k {

enum class FieldMode { Laurent, RatFunc, Number, CM };

std::string field_mode_str(FieldMode m);

// One parsed representation file.  Exactly the payload matching `mode` is
// populated; the others stay empty.
struct RepFile {
    FieldMode mode = FieldMode::Number;

    std::uint32_t p = 0;  // laurent and ratfunc modes
    long long prec = DEFAULT_LAURENT_PREC;
    std::string var = "y";  // ratfunc variable name

    FieldPtr number_field;  // number mode
    CMPtr cm_field;         // cm mode

    RepPresentation<LaurentSeries> rep_laurent;
    RepPresentation<RationalFunction> rep_ratfunc;
    RepPresentation<NFElem> rep_number;
    RepPresentation<CMElem> rep_cm;

    struct EdgeDecl {
        std::string u, v, word;
    };
    std::vector<EdgeDecl> edges;  // laurent mode, gain-graph files

    std::optional<SesquiForm> form;  // cm mode
    std::vector<int> sign_targets;   // cm mode, one per real embedding

    const std::vector<std::string>& punctures() const;

    // evaluates the edge words; laurent mode with at least one edge required
    GainGraph gain_graph() const;
};

// Grammar, one declaration per line, '#' starts a comment:
//   field laurent p=<prime> [prec=<n>]
//   field ratfunc p=<prime> [var=<sym>]
//   field number minpoly=<poly in x>
//   field cm minpoly=<poly in x> delta=<poly in x>
//   gen <name> [[e,e],[e,e]]
//   puncture <word>
//   edge <u> <v> <word>
//   form [[e,e],[e,e]]        (cm mode; must be antihermitian)
//   targets <+|-> ...         (cm mode; one sign per real embedding)
// Entry expressions use integer literals, the field variable (t, the ratfunc
// variable, x, and w = sqrt(delta) in cm mode), +, -, *, ^ and parentheses.
// Negative exponents are laurent-only; '/' is accepted in ratfunc, number and
// cm modes, where division is exact.
RepFile parse_repfile(const std::string& text);

// Number-mode serialization; parse(serialize(rep)) reproduces the generators
// and punctures exactly.
std::string serialize_repfile(const RepPresentation<NFElem>& rep);

}  // namespace sl2k
