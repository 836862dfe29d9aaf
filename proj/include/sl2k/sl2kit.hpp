#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2k/bttree.hpp"
#include "sl2k/rep.hpp"

namespace sl2k {

// --- conjugacy classification -------------------------------------------

enum class ConjKind { Identity, MinusIdentity, UnipotentPlus, UnipotentMinus, Semisimple };

std::string conj_kind_str(ConjKind k);

// Exact five-way classification. Over the Laurent domain "equal" means
// "not certified different", consistent with the precision policy.
template <typename T>
ConjKind conjugacy_class_kind(const Mat2<T>& A) {
    T one = one_like(A.a);
    T two = one + one;
    Mat2<T> id = mat2_identity(one, zero_like(A.a));
    auto same = [](const Mat2<T>& x, const Mat2<T>& y) {
        return !certified_nonzero(x.a - y.a) && !certified_nonzero(x.b - y.b) &&
               !certified_nonzero(x.c - y.c) && !certified_nonzero(x.d - y.d);
    };
    if (same(A, id)) return ConjKind::Identity;
    if (same(A, -id)) return ConjKind::MinusIdentity;
    T tr = A.trace();
    if (!certified_nonzero(tr - two)) return ConjKind::UnipotentPlus;
    if (!certified_nonzero(tr + two)) return ConjKind::UnipotentMinus;
    return ConjKind::Semisimple;
}

// --- quasi-unipotence over number fields ---------------------------------

// least m with trace(A) = zeta_m^k + zeta_m^{-k} for a primitive pair, if any
std::optional<long> quasi_unipotent_trace_order(const NFElem& tr);

struct QuasiUnipotence {
    bool yes = false;
    long order = 0;      // eigenvalue order m when yes
    bool unipotent = false;  // trace = +-2 but A != +-1 (infinite element order)
};

QuasiUnipotence is_quasi_unipotent(const Mat2<NFElem>& A);

enum class CentralizerKind { Unipotent, SplitTorus, NonSplitTorus };

std::string centralizer_kind_str(CentralizerKind k);

// classification of Z(A) for nontrivial quasi-unipotent A; throws
// NotQuasiUnipotent otherwise
CentralizerKind centralizer_kind(const Mat2<NFElem>& A);

// --- infinite-order certificates per domain ------------------------------

// true only when the trace certifies eigenvalues of infinite order
bool certified_infinite_order_trace(const LaurentSeries& tr);
bool certified_infinite_order_trace(const RationalFunction& tr);
bool certified_infinite_order_trace(const NFElem& tr);

// --- Zariski density ------------------------------------------------------

struct DensityWitness {
    std::string alpha, beta, gamma;  // gamma has certified infinite-order eigenvalues
};

// One-sided criterion: a returned witness certifies density via the trace
// difference Tr((ab)^2(ba)^0...) pattern; nullopt only means "not found
// within the scanned words", never non-density.
template <typename T>
std::optional<DensityWitness> zariski_density_check(const RepPresentation<T>& rep, std::size_t max_word_len) {
    Mat2<T> id = rep_identity(rep);

    std::optional<std::string> gamma;
    for_each_reduced_word(rep.order, max_word_len, [&](const std::string& w) {
        Mat2<T> m = evaluate_word(rep.gens, w, id);
        if (certified_infinite_order_trace(m.trace())) {
            gamma = w;
            return false;
        }
        return true;
    });
    if (!gamma) return std::nullopt;

    // collect candidate words once, in length-lex order
    std::vector<std::string> words;
    std::vector<Mat2<T>> mats;
    for_each_reduced_word(rep.order, max_word_len, [&](const std::string& w) {
        words.push_back(w);
        mats.push_back(evaluate_word(rep.gens, w, id));
        return true;
    });

    // pairs ordered by total length, then position; total capped at
    // max_word_len + 1 so the scan volume stays linear-ish in the word list
    for (std::size_t total = 2; total <= max_word_len + 1; ++total) {
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::size_t la = words[i].size();
            if (la >= total) break;
            for (std::size_t j = 0; j < words.size(); ++j) {
                if (words[j].size() != total - la) continue;
                Mat2<T> a2 = mats[i] * mats[i];
                Mat2<T> b2 = mats[j] * mats[j];
                Mat2<T> ab = a2 * b2;
                T diff = (ab * ab).trace() - ((a2 * a2) * (b2 * b2)).trace();
                if (certified_nonzero(diff)) {
                    return DensityWitness{words[i], words[j], *gamma};
                }
            }
        }
    }
    return std::nullopt;
}

// --- tree dynamics over the Laurent domain --------------------------------

// max(0, -2 val(tr g)); throws PrecisionExhausted when the sign of val(tr)
// is not determined at the tracked precision
long long translation_length(const Mat2<LaurentSeries>& g);

// a vertex fixed by an elliptic g, found by midpoint contraction from base
Vertex fixed_vertex(const Mat2<LaurentSeries>& g);

struct BoundednessResult {
    bool bounded = false;
    std::optional<Vertex> fixed;  // set when bounded, verified by act
    std::string witness;          // nonempty when unbounded: word of length <= 2
};

// Serre criterion: bounded iff every generator and every ordered pairwise
// product (i <= j) is elliptic; the named generators provide witness words.
BoundednessResult is_bounded(const std::vector<std::pair<char, Mat2<LaurentSeries>>>& gens);

// --- completion pipeline ---------------------------------------------------

struct PunctureCheck {
    std::string word;
    bool integral_trace = false;  // val(tr) >= 0 certified (necessary for QU)
};

struct CompletionReport {
    Place place;
    long long precision = 0;
    BoundednessResult boundedness;
    std::optional<DensityWitness> density;
    std::vector<PunctureCheck> punctures;
};

RepPresentation<LaurentSeries> complete_at_place(const RepPresentation<RationalFunction>& rep, const Place& place,
                                                 long long precision);

CompletionReport complete_and_test(const RepPresentation<RationalFunction>& rep, const Place& place,
                                   long long precision, std::size_t max_word_len);

// ordered key:value lines: place, precision, bounded, witness, density,
// puncture_checks
std::string completion_report_text(const CompletionReport& r);

}  // namespace sl2k
