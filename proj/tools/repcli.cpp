// Command-line surface over the rank-two analysis library: reads one
// representation file, runs the requested analysis, prints a deterministic
// key:value report.  Exit codes: 0 success, 1 parse failure, 2 semantic
// failure (wrong mode, determinant, domain errors), 3 when any sub-verdict
// is inconclusive or a search budget ran out.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "sl2k/integrality.hpp"
#include "sl2k/orbicurve.hpp"
#include "sl2k/repfile.hpp"
#include "sl2k/rigidkit.hpp"
#include "sl2k/sl2kit.hpp"

using namespace sl2k;

namespace {

RepFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_repfile(buf.str());
}

void require_mode(const RepFile& f, FieldMode want, const std::string& cmd) {
    if (f.mode != want)
        throw DomainMismatch(cmd + " expects a " + field_mode_str(want) + "-mode file, got " +
                             field_mode_str(f.mode));
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

std::string density_line(const std::optional<DensityWitness>& w) {
    if (w)
        return "density: dense (alpha=" + w->alpha + ", beta=" + w->beta + ", gamma=" + w->gamma + ")";
    return "density: inconclusive";
}

template <typename T>
std::string generator_list(const RepPresentation<T>& rep) {
    std::string s;
    for (char g : rep.order) {
        if (!s.empty()) s += " ";
        s += g;
    }
    return s.empty() ? "-" : s;
}

// --- analyze ---------------------------------------------------------------

int cmd_analyze(const RepFile& f, std::size_t max_word_len) {
    std::cout << "mode: " << field_mode_str(f.mode) << "\n";
    std::cout << "max_word_len: " << max_word_len << "\n";
    std::optional<DensityWitness> w;
    switch (f.mode) {
        case FieldMode::Laurent: {
            std::cout << "generators: " << generator_list(f.rep_laurent) << "\n";
            w = zariski_density_check(f.rep_laurent, max_word_len);
            std::cout << density_line(w) << "\n";
            for (const std::string& word : f.rep_laurent.punctures) {
                LaurentSeries tr = trace_of_word(f.rep_laurent, word);
                std::cout << "puncture " << word << ": "
                          << (certified_infinite_order_trace(tr) ? "nonintegral-trace (not quasi-unipotent)"
                                                                 : "integral-trace")
                          << "\n";
            }
            break;
        }
        case FieldMode::RatFunc: {
            std::cout << "generators: " << generator_list(f.rep_ratfunc) << "\n";
            w = zariski_density_check(f.rep_ratfunc, max_word_len);
            std::cout << density_line(w) << "\n";
            for (const std::string& word : f.rep_ratfunc.punctures) {
                RationalFunction tr = trace_of_word(f.rep_ratfunc, word);
                std::cout << "puncture " << word << ": "
                          << (certified_infinite_order_trace(tr) ? "nonconstant-trace (not quasi-unipotent)"
                                                                 : "constant-trace")
                          << "\n";
            }
            break;
        }
        case FieldMode::Number: {
            std::cout << "generators: " << generator_list(f.rep_number) << "\n";
            w = zariski_density_check(f.rep_number, max_word_len);
            std::cout << density_line(w) << "\n";
            for (const std::string& word : f.rep_number.punctures) {
                Mat2<NFElem> m = rep_evaluate(f.rep_number, freely_reduce(word));
                QuasiUnipotence qu = is_quasi_unipotent(m);
                std::cout << "puncture " << word << ": ";
                if (!qu.yes)
                    std::cout << "not quasi-unipotent";
                else if (qu.unipotent)
                    std::cout << "unipotent (trace sign " << (qu.order == 1 ? "+" : "-") << ")";
                else
                    std::cout << "quasi-unipotent order=" << qu.order;
                std::cout << "\n";
            }
            break;
        }
        case FieldMode::CM: {
            std::cout << "generators: " << generator_list(f.rep_cm) << "\n";
            w = zariski_density_check(f.rep_cm, max_word_len);
            std::cout << density_line(w) << "\n";
            for (const std::string& word : f.rep_cm.punctures) {
                CMElem tr = trace_of_word(f.rep_cm, word);
                std::cout << "puncture " << word << ": "
                          << (certified_infinite_order_trace(tr) ? "infinite-order-trace (not quasi-unipotent)"
                                                                 : "undetermined")
                          << "\n";
            }
            break;
        }
    }
    return w ? 0 : 3;
}

// --- tree ------------------------------------------------------------------

int cmd_tree(const RepFile& f, long long radius, const std::string& dot_path) {
    require_mode(f, FieldMode::Laurent, "tree");
    const RepPresentation<LaurentSeries>& rep = f.rep_laurent;
    if (rep.order.empty()) throw DegenerateInput("file declares no generators");

    std::cout << "generators: " << generator_list(rep) << "\n";
    std::cout << "precision: " << f.prec << "\n";
    std::vector<std::pair<char, Mat2<LaurentSeries>>> gens;
    for (char g : rep.order) {
        gens.emplace_back(g, rep.gens.at(g));
        std::cout << "translation_length " << g << ": " << translation_length(rep.gens.at(g)) << "\n";
    }
    BoundednessResult b = is_bounded(gens);
    std::cout << "bounded: " << (b.bounded ? "yes" : "no") << "\n";
    std::cout << "fixed_vertex: " << (b.fixed ? b.fixed->label() : "-") << "\n";
    std::cout << "witness: " << (b.witness.empty() ? "-" : b.witness) << "\n";

    if (!dot_path.empty()) {
        Vertex center = b.fixed ? *b.fixed : base_vertex(f.p);
        write_text(dot_path, ball_dot(center, radius));
        std::cout << "dot: " << dot_path << "\n";
    }
    return 0;
}

// --- complete ----------------------------------------------------------------

int cmd_complete(const RepFile& f, const std::string& place_str, long long prec, std::size_t max_word_len) {
    require_mode(f, FieldMode::RatFunc, "complete");
    Place place = Place::infinity();
    if (place_str != "inf") {
        try {
            place = Place::finite(static_cast<std::uint32_t>(std::stoul(place_str)));
        } catch (const std::exception&) {
            throw ParseError("--place expects inf or a residue, got " + place_str);
        }
    }
    CompletionReport r = complete_and_test(f.rep_ratfunc, place, prec, max_word_len);
    std::cout << completion_report_text(r);
    return r.density ? 0 : 3;
}

// --- integrality --------------------------------------------------------------

int cmd_integrality(const RepFile& f, std::size_t max_word_len) {
    require_mode(f, FieldMode::Number, "integrality");
    IntegralityReport r = integrality_scan(f.rep_number, max_word_len);
    std::cout << "max_word_len: " << r.max_len << "\n";
    std::cout << "words_checked: " << r.words_checked << "\n";
    if (r.all_integral()) {
        std::cout << "verdict: all-integral\n";
    } else {
        std::cout << "verdict: violation\n";
        std::cout << "violation_word: " << r.violation->word << "\n";
        std::cout << "violation_trace: " << r.violation->trace.str() << "\n";
        std::cout << "violation_minpoly: " << r.violation->minpoly.str() << "\n";
    }
    return 0;
}

// --- rigidity -----------------------------------------------------------------

int cmd_rigidity(const RepFile& f, std::size_t max_word_len) {
    require_mode(f, FieldMode::Number, "rigidity");
    const RepPresentation<NFElem>& rep = f.rep_number;
    if (rep.order.size() != 3) throw DegenerateInput("rigidity expects exactly three generators");

    std::vector<Mat2<NFElem>> mats;
    std::vector<ConjKind> kinds;
    std::vector<ClassSpec> classes;
    bool classes_ok = true;
    for (char g : rep.order) {
        const Mat2<NFElem>& m = rep.gens.at(g);
        mats.push_back(m);
        ConjKind k = conjugacy_class_kind(m);
        kinds.push_back(k);
        std::cout << "class " << g << ": ";
        switch (k) {
            case ConjKind::Identity:
                std::cout << "identity";
                classes_ok = false;
                break;
            case ConjKind::MinusIdentity:
                std::cout << "minus-identity";
                classes_ok = false;
                break;
            case ConjKind::UnipotentPlus:
                std::cout << "unipotent+";
                classes.push_back(ClassSpec::unipotent(+1));
                break;
            case ConjKind::UnipotentMinus:
                std::cout << "unipotent-";
                classes.push_back(ClassSpec::unipotent(-1));
                break;
            case ConjKind::Semisimple: {
                QuasiUnipotence qu = is_quasi_unipotent(m);
                if (qu.yes) {
                    std::cout << "semisimple order=" << qu.order;
                    classes.push_back(ClassSpec::eigenvalue(qu.order, 1));
                } else {
                    std::cout << "not-quasi-unipotent";
                    classes_ok = false;
                }
                break;
            }
        }
        std::cout << "\n";
    }

    Mat2<NFElem> prod = mats[0] * mats[1] * mats[2];
    bool product_identity = prod == rep_identity(rep);
    std::cout << "product_identity: " << (product_identity ? "yes" : "no") << "\n";
    std::cout << "virtual_dimension: " << virtual_dimension(kinds) << "\n";

    bool rigid = classes_ok && product_identity && verify_rigid_tuple(mats, classes);
    std::cout << "rigid: " << (rigid ? "yes" : "no") << "\n";

    std::cout << "max_word_len: " << max_word_len << "\n";
    std::optional<DensityWitness> w = zariski_density_check(rep, max_word_len);
    std::cout << density_line(w) << "\n";
    return w ? 0 : 3;
}

// --- hypergeom ------------------------------------------------------------------

ClassSpec parse_class_token(const std::string& tok) {
    if (tok == "u" || tok == "u+") return ClassSpec::unipotent(+1);
    if (tok == "u-") return ClassSpec::unipotent(-1);
    if (tok.size() >= 6 && tok.compare(0, 2, "e(") == 0 && tok.back() == ')') {
        std::string inner = tok.substr(2, tok.size() - 3);
        std::size_t comma = inner.find(',');
        if (comma != std::string::npos) {
            try {
                long m = std::stol(inner.substr(0, comma));
                long k = std::stol(inner.substr(comma + 1));
                return ClassSpec::eigenvalue(m, k);
            } catch (const std::exception&) {
            }
        }
    }
    throw ParseError("class token must be u, u+, u- or e(m,k), got " + tok);
}

int cmd_hypergeom(const std::string& classes_arg) {
    std::vector<ClassSpec> classes;
    std::string tok;
    std::istringstream in(classes_arg);
    while (std::getline(in, tok, ',')) {
        // e(m,k) contains a comma: rejoin when a token opens a parenthesis
        if (!tok.empty() && tok.find('(') != std::string::npos && tok.find(')') == std::string::npos) {
            std::string rest;
            if (std::getline(in, rest, ',')) tok += "," + rest;
        }
        if (!tok.empty()) classes.push_back(parse_class_token(tok));
    }
    if (classes.size() != 3) throw ParseError("--classes expects exactly three class tokens");

    HypergeometricTuple t = hypergeometric_build(classes);
    if (t.obstructed) {
        std::cout << "obstructed: " << t.obstruction << "\n";
        return 0;
    }

    RepPresentation<NFElem> rep;
    rep.add_generator('a', t.mats[0]);
    rep.add_generator('b', t.mats[1]);
    rep.add_generator('c', t.mats[2]);
    rep.punctures = {"a", "b", "c"};

    std::cout << "# classes:";
    for (const ClassSpec& c : classes) std::cout << " " << c.str();
    std::cout << "\n# sign twists:";
    for (int s : t.sign_twists) std::cout << " " << (s > 0 ? "+" : "-");
    std::cout << "\n" << serialize_repfile(rep);
    return 0;
}

// --- orbibounds -------------------------------------------------------------------

int cmd_orbibounds(long long genus, long long punctures, bool enumerate, long long max_index,
                   long long max_points) {
    long long bound = hurwitz_index_bound(genus, punctures);
    long long cap = orbifold_point_cap(genus, punctures);
    GeomClass cls = classify_orbicurve(OrbicurveData(genus, punctures, {}));
    std::vector<OrbicurveData> cands;
    if (enumerate) cands = enumerate_candidate_types(genus, punctures, max_index, max_points);

    std::cout << "genus: " << genus << "\n";
    std::cout << "punctures: " << punctures << "\n";
    std::cout << "classification: " << geom_class_str(cls) << "\n";
    std::cout << "hurwitz_index_bound: " << bound << "\n";
    std::cout << "orbifold_point_cap: " << cap << "\n";
    if (enumerate) {
        std::cout << "candidates: " << cands.size() << "\n";
        for (const OrbicurveData& d : cands) std::cout << "candidate: " << d.str() << "\n";
    }
    return 0;
}

// --- harmonic ----------------------------------------------------------------------

int cmd_harmonic(const RepFile& f, long long sweeps, const std::string& dot_path) {
    require_mode(f, FieldMode::Laurent, "harmonic");
    GainGraph g = f.gain_graph();

    TreeAssignment init = constant_assignment(g, base_vertex(f.p));
    MinimizeResult r = minimize(g, init, sweeps);
    ReebGraph reeb = reeb_contract(g, r.assignment);

    std::cout << "vertices: " << g.vertices.size() << "\n";
    std::cout << "edges: " << g.edges.size() << "\n";
    std::cout << "initial_energy: " << r.trace.front() << "\n";
    std::cout << "final_energy: " << energy(g, r.assignment) << "\n";
    std::cout << "sweeps: " << r.sweeps << "\n";
    std::cout << "converged: " << (r.converged ? "yes" : "no") << "\n";
    std::cout << "energy_trace:";
    for (unsigned long long e : r.trace) std::cout << " " << e;
    std::cout << "\n";
    std::cout << "reeb_vertices: " << reeb.vertices.size() << "\n";
    std::cout << "reeb_edges: " << reeb.edges.size() << "\n";
    for (const std::string& v : g.vertices) std::cout << "assignment " << v << ": " << r.assignment.at(v).label() << "\n";

    if (!dot_path.empty()) {
        write_text(dot_path, reeb_dot(reeb));
        std::cout << "dot: " << dot_path << "\n";
    }
    return r.converged ? 0 : 3;
}

// --- hodge -------------------------------------------------------------------------

int cmd_hodge(const RepFile& f, long long max_height) {
    require_mode(f, FieldMode::CM, "hodge");
    const CMPtr& L = f.cm_field;

    std::optional<SesquiForm> form = f.form;
    if (!form) {
        std::vector<Mat2<CMElem>> gens;
        for (char g : f.rep_cm.order) gens.push_back(f.rep_cm.gens.at(g));
        std::vector<SesquiForm> space = invariant_form_space(L, gens);
        std::cout << "invariant_form_dimension: " << space.size() << "\n";
        if (space.size() != 1) return 0;  // nothing canonical to analyze
        form = space.front();
    }

    std::vector<EmbeddingSignRow> rows = embedding_signs(*form);
    for (const EmbeddingSignRow& row : rows) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", row.root_approx);
        std::cout << "embedding " << row.root_index << (row.sqrt_choice > 0 ? "+" : "-") << ": root=" << buf
                  << " sign=" << form_sign_str(row.sign) << "\n";
    }
    std::cout << "polydisk_dimension: " << polydisk_dimension(*form) << "\n";

    if (!f.sign_targets.empty()) {
        NFElem lambda = sign_fixing_lambda(L->base(), f.sign_targets, max_height);
        std::cout << "lambda: " << lambda.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-two representation analysis over local and number fields"};
    app.require_subcommand(1);

    std::string file, place = "inf", dot_path, classes_arg;
    std::size_t max_word_len = DEFAULT_INTEGRALITY_MAX_LEN;
    std::size_t rigidity_word_len = 4;
    long long prec = DEFAULT_LAURENT_PREC, radius = 2, sweeps = 64, max_height = 32;
    long long genus = 0, punctures = 0, max_index = -1, max_points = -1;
    bool do_enumerate = false;

    CLI::App* analyze = app.add_subcommand("analyze", "density and puncture quasi-unipotence");
    analyze->add_option("file", file)->required();
    analyze->add_option("--max-word-len", max_word_len);

    CLI::App* tree = app.add_subcommand("tree", "tree boundedness and translation lengths");
    tree->add_option("file", file)->required();
    tree->add_option("--radius", radius);
    tree->add_option("--dot", dot_path);

    CLI::App* complete = app.add_subcommand("complete", "complete at a place and test there");
    complete->add_option("file", file)->required();
    complete->add_option("--place", place);
    complete->add_option("--prec", prec);
    complete->add_option("--max-word-len", max_word_len);

    CLI::App* integrality = app.add_subcommand("integrality", "trace integrality scan");
    integrality->add_option("file", file)->required();
    integrality->add_option("--max-word-len", max_word_len);

    CLI::App* rigidity = app.add_subcommand("rigidity", "rigid tuple verification");
    rigidity->add_option("file", file)->required();
    rigidity->add_option("--max-word-len", rigidity_word_len);

    CLI::App* hypergeom = app.add_subcommand("hypergeom", "build a hypergeometric tuple");
    hypergeom->add_option("--classes", classes_arg, "three tokens: u, u+, u-, e(m,k)")->required();

    CLI::App* orbibounds = app.add_subcommand("orbibounds", "hurwitz-type bounds for a base curve");
    orbibounds->add_option("genus", genus)->required();
    orbibounds->add_option("punctures", punctures)->required();
    orbibounds->add_flag("--enumerate", do_enumerate, "list hyperbolic candidate types");
    orbibounds->add_option("--max-index", max_index);
    orbibounds->add_option("--max-points", max_points);

    CLI::App* harmonic = app.add_subcommand("harmonic", "tree-harmonic energy minimization");
    harmonic->add_option("file", file)->required();
    harmonic->add_option("--sweeps", sweeps);
    harmonic->add_option("--dot", dot_path);

    CLI::App* hodge = app.add_subcommand("hodge", "invariant forms and embedding signs");
    hodge->add_option("file", file)->required();
    hodge->add_option("--max-height", max_height);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(load(file), max_word_len);
        if (*tree) return cmd_tree(load(file), radius, dot_path);
        if (*complete) return cmd_complete(load(file), place, prec, max_word_len);
        if (*integrality) return cmd_integrality(load(file), max_word_len);
        if (*rigidity) return cmd_rigidity(load(file), rigidity_word_len);
        if (*hypergeom) return cmd_hypergeom(classes_arg);
        if (*orbibounds) return cmd_orbibounds(genus, punctures, do_enumerate, max_index, max_points);
        if (*harmonic) return cmd_harmonic(load(file), sweeps, dot_path);
        if (*hodge) return cmd_hodge(load(file), max_height);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const SearchBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
