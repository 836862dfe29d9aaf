#include "sl2k/sl2kit.hpp"

#include <algorithm>

namespace sl2k {

std::string conj_kind_str(ConjKind k) {
    switch (k) {
        case ConjKind::Identity: return "identity";
        case ConjKind::MinusIdentity: return "minus-identity";
        case ConjKind::UnipotentPlus: return "unipotent+";
        case ConjKind::UnipotentMinus: return "unipotent-";
        default: return "semisimple";
    }
}

std::optional<long> quasi_unipotent_trace_order(const NFElem& tr) {
    QPoly mp = minimal_polynomial(tr);
    long d = mp.degree();
    // phi(m) <= 2d bounds m by 8d^2 + 2 since phi(m) >= sqrt(m/2)
    long bound = 8 * d * d + 4;
    for (long m = 1; m <= bound; ++m) {
        if (euler_phi(m) > 2 * d) continue;
        if (cyclotomic_trace_poly(m).degree() != d) continue;
        if (mp == cyclotomic_trace_poly(m)) return m;
    }
    return std::nullopt;
}

QuasiUnipotence is_quasi_unipotent(const Mat2<NFElem>& A) {
    QuasiUnipotence out;
    auto m = quasi_unipotent_trace_order(A.trace());
    if (!m) return out;
    out.yes = true;
    out.order = *m;
    if (*m == 1 || *m == 2) {
        ConjKind kind = conjugacy_class_kind(A);
        out.unipotent = kind == ConjKind::UnipotentPlus || kind == ConjKind::UnipotentMinus;
    }
    return out;
}

std::string centralizer_kind_str(CentralizerKind k) {
    switch (k) {
        case CentralizerKind::Unipotent: return "unipotent";
        case CentralizerKind::SplitTorus: return "split-torus";
        default: return "non-split-torus";
    }
}

CentralizerKind centralizer_kind(const Mat2<NFElem>& A) {
    QuasiUnipotence qu = is_quasi_unipotent(A);
    if (!qu.yes) throw NotQuasiUnipotent();
    ConjKind kind = conjugacy_class_kind(A);
    if (kind == ConjKind::Identity || kind == ConjKind::MinusIdentity) {
        throw NotQuasiUnipotent("projectively trivial input has no centralizer classification");
    }
    if (kind == ConjKind::UnipotentPlus || kind == ConjKind::UnipotentMinus) {
        return CentralizerKind::Unipotent;
    }
    NFElem tr = A.trace();
    NFElem disc = tr * tr - NFElem::from_rational(tr.field(), 4);
    return is_square_in_field(disc) ? CentralizerKind::SplitTorus : CentralizerKind::NonSplitTorus;
}

bool certified_infinite_order_trace(const LaurentSeries& tr) {
    // eigenvalues are roots of unity iff the trace is a residue-field
    // constant, so a certified pole or a certified nonconstant coefficient
    // rules torsion out
    if (tr.kind() != LaurentSeries::Kind::Known) return false;
    long long v = tr.valuation();
    if (v < 0) return true;
    long long end = std::min(tr.prec(), tr.stored_window_end());
    for (long long k = std::max(v, 1LL); k < end; ++k) {
        if (tr.coeff_at(k) != 0) return true;
    }
    return false;
}

bool certified_infinite_order_trace(const RationalFunction& tr) {
    // torsion eigenvalue pairs have constant trace and conversely
    return tr.num().degree() > 0 || tr.den().degree() > 0;
}

bool certified_infinite_order_trace(const NFElem& tr) {
    return !quasi_unipotent_trace_order(tr).has_value();
}

long long translation_length(const Mat2<LaurentSeries>& g) {
    require_det_one(g);
    LaurentSeries tr = g.trace();
    switch (tr.kind()) {
        case LaurentSeries::Kind::ExactZero:
            return 0;
        case LaurentSeries::Kind::IndeterminateZero:
            if (tr.prec() >= 0) return 0;  // val(tr) >= prec >= 0 certified
            throw PrecisionExhausted("sign of val(tr) undetermined at precision " + std::to_string(tr.prec()));
        case LaurentSeries::Kind::Known:
            break;
    }
    long long v = tr.valuation();
    return v < 0 ? -2 * v : 0;
}

Vertex fixed_vertex(const Mat2<LaurentSeries>& g) {
    if (translation_length(g) != 0) throw NotElliptic();
    Vertex v = base_vertex(g.a.modulus());
    long long d = distance(v, act(g, v));
    long long budget = d + 2;
    while (d > 0) {
        if (budget-- <= 0) throw Error("midpoint iteration failed to contract");
        if (d % 2 != 0) throw Error("odd displacement for a det-1 elliptic element");
        std::vector<Vertex> arc = geodesic(v, act(g, v));
        v = arc[static_cast<std::size_t>(d / 2)];
        d = distance(v, act(g, v));
    }
    return v;
}

BoundednessResult is_bounded(const std::vector<std::pair<char, Mat2<LaurentSeries>>>& gens) {
    BoundednessResult out;
    for (const auto& [name, g] : gens) {
        if (translation_length(g) > 0) {
            out.bounded = false;
            out.witness = std::string(1, name);
            return out;
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i; j < gens.size(); ++j) {
            if (translation_length(gens[i].second * gens[j].second) > 0) {
                out.bounded = false;
                out.witness = std::string{gens[i].first, gens[j].first};
                return out;
            }
        }
    }

    // all generators and pairwise products elliptic: a common fixed vertex
    // exists; find it by descending the convex displacement energy
    if (gens.empty()) throw ParseError("no generators");
    std::uint32_t p = gens[0].second.a.modulus();
    auto energy = [&](const Vertex& v) {
        long long e = 0;
        for (const auto& [name, g] : gens) {
            long long d = distance(v, act(g, v));
            e += d * d;
        }
        return e;
    };
    Vertex v = base_vertex(p);
    long long e = energy(v);
    while (e > 0) {
        Vertex best = v;
        long long best_e = e;
        for (const Vertex& u : neighbors(v)) {
            long long eu = energy(u);
            if (eu < best_e) {
                best = u;
                best_e = eu;
            }
        }
        if (best_e == e) throw Error("local minimum without a common fixed vertex");
        v = best;
        e = best_e;
    }
    out.bounded = true;
    out.fixed = v;
    return out;
}

RepPresentation<LaurentSeries> complete_at_place(const RepPresentation<RationalFunction>& rep, const Place& place,
                                                 long long precision) {
    RepPresentation<LaurentSeries> out;
    for (char name : rep.order) {
        const Mat2<RationalFunction>& m = rep.gens.at(name);
        Mat2<LaurentSeries> em{expand_at_place(m.a, place, precision), expand_at_place(m.b, place, precision),
                               expand_at_place(m.c, place, precision), expand_at_place(m.d, place, precision)};
        out.add_generator(name, em);
    }
    out.punctures = rep.punctures;
    return out;
}

CompletionReport complete_and_test(const RepPresentation<RationalFunction>& rep, const Place& place,
                                   long long precision, std::size_t max_word_len) {
    CompletionReport report;
    report.place = place;
    report.precision = precision;
    RepPresentation<LaurentSeries> completed = complete_at_place(rep, place, precision);

    std::vector<std::pair<char, Mat2<LaurentSeries>>> gens;
    for (char name : completed.order) gens.emplace_back(name, completed.gens.at(name));
    report.boundedness = is_bounded(gens);
    report.density = zariski_density_check(completed, max_word_len);

    for (const std::string& word : completed.punctures) {
        LaurentSeries tr = rep_evaluate(completed, word).trace();
        bool ok;
        switch (tr.kind()) {
            case LaurentSeries::Kind::ExactZero:
                ok = true;
                break;
            case LaurentSeries::Kind::IndeterminateZero:
                if (tr.prec() < 0) throw PrecisionExhausted("puncture trace valuation undetermined");
                ok = true;
                break;
            default:
                ok = tr.valuation() >= 0;
                break;
        }
        report.punctures.push_back(PunctureCheck{word, ok});
    }
    return report;
}

std::string completion_report_text(const CompletionReport& r) {
    std::string out;
    out += "place: " + r.place.str() + "\n";
    out += "precision: " + std::to_string(r.precision) + "\n";
    out += "bounded: " + std::string(r.boundedness.bounded ? "yes" : "no") + "\n";
    out += "witness: " + (r.boundedness.witness.empty() ? "-" : r.boundedness.witness) + "\n";
    if (r.density) {
        out += "density: dense (alpha=" + r.density->alpha + ", beta=" + r.density->beta +
               ", gamma=" + r.density->gamma + ")\n";
    } else {
        out += "density: inconclusive\n";
    }
    out += "puncture_checks:";
    if (r.punctures.empty()) out += " -";
    for (const PunctureCheck& pc : r.punctures)
        out += " " + pc.word + (pc.integral_trace ? ":ok" : ":nonintegral");
    out += "\n";
    return out;
}

}  // namespace sl2k
