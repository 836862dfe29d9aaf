#include "sl2k/repfile.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <sstream>

namespace sl2k {

namespace {

// expression AST shared by every field mode
struct Node {
    enum Kind { Int, Sym, Add, Sub, Mul, Div, Neg, Pow } kind;
    mpz_class value;     // Int
    std::string symbol;  // Sym
    long long exponent = 0;  // Pow
    std::unique_ptr<Node> lhs, rhs;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
}

// character scanner over one line
struct Scanner {
    const std::string& s;
    std::size_t i = 0;
    int lineno;

    Scanner(const std::string& text, int line) : s(text), lineno(line) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno) + ", column " + std::to_string(i + 1) + ": " + msg);
    }
    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool at_end() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of line");
        return s[i++];
    }
    void expect(char c) {
        char g = take();
        if (g != c) fail(std::string("expected '") + c + "', found '" + g + "'");
    }
    long long integer() {
        skip_ws();
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail("expected an integer");
        return std::stoll(s.substr(start, i - start));
    }
};

// expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)*
// unary := '-' unary | primary ('^' int)? ; primary := int | symbol | '(' expr ')'
NodePtr parse_expr(Scanner& sc);

NodePtr parse_primary(Scanner& sc) {
    char c = sc.peek();
    if (c == '(') {
        sc.take();
        NodePtr e = parse_expr(sc);
        sc.expect(')');
        return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        auto n = make(Node::Int);
        n->value = mpz_class(std::to_string(sc.integer()));
        return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
        auto n = make(Node::Sym);
        while (sc.i < sc.s.size() && std::isalnum(static_cast<unsigned char>(sc.s[sc.i]))) n->symbol += sc.s[sc.i++];
        return n;
    }
    sc.fail(std::string("unexpected character '") + c + "' in expression");
}

NodePtr parse_unary(Scanner& sc) {
    if (sc.peek() == '-') {
        sc.take();
        auto n = make(Node::Neg);
        n->lhs = parse_unary(sc);
        return n;
    }
    if (sc.peek() == '+') {
        sc.take();
        return parse_unary(sc);
    }
    NodePtr base = parse_primary(sc);
    if (sc.peek() == '^') {
        sc.take();
        auto n = make(Node::Pow);
        n->exponent = sc.integer();
        n->lhs = std::move(base);
        return n;
    }
    return base;
}

NodePtr parse_term(Scanner& sc) {
    NodePtr lhs = parse_unary(sc);
    while (sc.peek() == '*' || sc.peek() == '/') {
        char op = sc.take();
        auto n = make(op == '*' ? Node::Mul : Node::Div);
        n->lhs = std::move(lhs);
        n->rhs = parse_unary(sc);
        lhs = std::move(n);
    }
    return lhs;
}

NodePtr parse_expr(Scanner& sc) {
    NodePtr lhs = parse_term(sc);
    while (sc.peek() == '+' || sc.peek() == '-') {
        char op = sc.take();
        auto n = make(op == '+' ? Node::Add : Node::Sub);
        n->lhs = std::move(lhs);
        n->rhs = parse_term(sc);
        lhs = std::move(n);
    }
    return lhs;
}

// per-mode evaluation; Ops supplies constants, symbols, and arithmetic
template <typename T, typename Ops>
T eval_node(const Node& n, const Ops& ops, const Scanner& sc) {
    switch (n.kind) {
        case Node::Int: return ops.constant(n.value);
        case Node::Sym: return ops.symbol(n.symbol);
        case Node::Add: return eval_node<T>(*n.lhs, ops, sc) + eval_node<T>(*n.rhs, ops, sc);
        case Node::Sub: return eval_node<T>(*n.lhs, ops, sc) - eval_node<T>(*n.rhs, ops, sc);
        case Node::Mul: return eval_node<T>(*n.lhs, ops, sc) * eval_node<T>(*n.rhs, ops, sc);
        case Node::Neg: return -eval_node<T>(*n.lhs, ops, sc);
        case Node::Div: return ops.divide(eval_node<T>(*n.lhs, ops, sc), eval_node<T>(*n.rhs, ops, sc));
        case Node::Pow: {
            T base = eval_node<T>(*n.lhs, ops, sc);
            return ops.power(base, n.exponent);
        }
    }
    throw ParseError("unreachable expression node");
}

template <typename T>
T pow_by_mult(const T& base, long long e, const T& one) {
    T acc = one;
    T b = base;
    long long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

struct LaurentOps {
    std::uint32_t p;
    long long prec;
    const Scanner& sc;
    LaurentSeries constant(const mpz_class& v) const {
        mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
        return LaurentSeries::from_int(p, r.get_si());
    }
    LaurentSeries symbol(const std::string& s) const {
        if (s == "t") return LaurentSeries::from_poly_exact(FpPoly::constant(p, 1), 1);
        sc.fail("unknown symbol '" + s + "' (laurent entries use t)");
    }
    LaurentSeries divide(const LaurentSeries&, const LaurentSeries&) const {
        sc.fail("'/' is not allowed in laurent entries");
    }
    LaurentSeries power(const LaurentSeries& b, long long e) const {
        if (e >= 0) return pow_by_mult(b, e, LaurentSeries::from_int(p, 1));
        return pow_by_mult(ls_invert(b, prec), -e, LaurentSeries::from_int(p, 1));
    }
};

struct RatFuncOps {
    std::uint32_t p;
    std::string var;
    const Scanner& sc;
    RationalFunction constant(const mpz_class& v) const {
        mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
        return RationalFunction::from_int(p, r.get_si());
    }
    RationalFunction symbol(const std::string& s) const {
        if (s == var) return RationalFunction::variable(p);
        sc.fail("unknown symbol '" + s + "' (the declared variable is " + var + ")");
    }
    RationalFunction divide(const RationalFunction& a, const RationalFunction& b) const {
        if (b.is_zero()) sc.fail("division by zero");
        return a * b.inverse();
    }
    RationalFunction power(const RationalFunction& b, long long e) const {
        if (e < 0) sc.fail("negative exponents are laurent-only; use '/'");
        return pow_by_mult(b, e, RationalFunction::from_int(p, 1));
    }
};

struct NumberOps {
    FieldPtr F;
    const Scanner& sc;
    NFElem constant(const mpz_class& v) const { return NFElem::from_rational(F, mpq_class(v)); }
    NFElem symbol(const std::string& s) const {
        if (s == "x") return NFElem::generator(F);
        sc.fail("unknown symbol '" + s + "' (number entries use x)");
    }
    NFElem divide(const NFElem& a, const NFElem& b) const {
        if (b.is_zero()) sc.fail("division by zero");
        return a / b;
    }
    NFElem power(const NFElem& b, long long e) const {
        if (e < 0) sc.fail("negative exponents are laurent-only");
        return pow_by_mult(b, e, NFElem::from_rational(F, 1));
    }
};

struct CMOps {
    CMPtr L;
    const Scanner& sc;
    CMElem constant(const mpz_class& v) const { return CMElem::from_rational(L, mpq_class(v)); }
    CMElem symbol(const std::string& s) const {
        if (s == "x") return CMElem::from_real(L, NFElem::generator(L->base()));
        if (s == "w") return CMElem::sqrt_delta(L);
        sc.fail("unknown symbol '" + s + "' (cm entries use x and w)");
    }
    CMElem divide(const CMElem& a, const CMElem& b) const {
        if (b.is_zero()) sc.fail("division by zero");
        return a / b;
    }
    CMElem power(const CMElem& b, long long e) const {
        if (e < 0) sc.fail("negative exponents are laurent-only");
        return pow_by_mult(b, e, CMElem::from_rational(L, 1));
    }
};

struct QPolyOps {
    const Scanner& sc;
    QPoly constant(const mpz_class& v) const { return QPoly({mpq_class(v)}); }
    QPoly symbol(const std::string& s) const {
        if (s == "x") return QPoly({0, 1});
        sc.fail("unknown symbol '" + s + "' in a polynomial (use x)");
    }
    QPoly divide(const QPoly&, const QPoly&) const { sc.fail("'/' is not allowed in a polynomial"); }
    QPoly power(const QPoly& b, long long e) const {
        if (e < 0) sc.fail("negative exponents are not allowed in a polynomial");
        return pow_by_mult(b, e, QPoly({1}));
    }
};

template <typename T, typename Ops>
Mat2<T> parse_matrix(Scanner& sc, const Ops& ops) {
    auto entry = [&]() {
        NodePtr e = parse_expr(sc);
        return eval_node<T>(*e, ops, sc);
    };
    sc.expect('[');
    sc.expect('[');
    T a = entry();
    sc.expect(',');
    T b = entry();
    sc.expect(']');
    sc.expect(',');
    sc.expect('[');
    T c = entry();
    sc.expect(',');
    T d = entry();
    sc.expect(']');
    sc.expect(']');
    if (!sc.at_end()) sc.fail("trailing input after matrix");
    return Mat2<T>{a, b, c, d};
}

QPoly parse_poly_text(const std::string& text, int lineno) {
    Scanner sc(text, lineno);
    QPolyOps ops{sc};
    NodePtr e = parse_expr(sc);
    QPoly p = eval_node<QPoly>(*e, ops, sc);
    if (!sc.at_end()) sc.fail("trailing input after polynomial");
    return p;
}

struct Line {
    int no;
    std::vector<std::string> tokens;
    std::string rest_after;  // original text after the first N consumed tokens
};

[[noreturn]] void fail_line(int lineno, const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
}

// key=value token helper
bool key_value(const std::string& tok, const std::string& key, std::string& out) {
    if (tok.size() > key.size() + 1 && tok.compare(0, key.size(), key) == 0 && tok[key.size()] == '=') {
        out = tok.substr(key.size() + 1);
        return true;
    }
    return false;
}

void check_word_alphabet(const std::string& word, const std::vector<char>& order, int lineno) {
    for (char c : word) {
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (!std::isalpha(static_cast<unsigned char>(c)) ||
            std::find(order.begin(), order.end(), lower) == order.end())
            throw UnknownGenerator("line " + std::to_string(lineno) + ": word uses undeclared generator '" +
                                   std::string(1, c) + "'");
    }
}

}  // namespace

std::string field_mode_str(FieldMode m) {
    switch (m) {
        case FieldMode::Laurent: return "laurent";
        case FieldMode::RatFunc: return "ratfunc";
        case FieldMode::Number: return "number";
        case FieldMode::CM: return "cm";
    }
    return "?";
}

const std::vector<std::string>& RepFile::punctures() const {
    switch (mode) {
        case FieldMode::Laurent: return rep_laurent.punctures;
        case FieldMode::RatFunc: return rep_ratfunc.punctures;
        case FieldMode::Number: return rep_number.punctures;
        case FieldMode::CM: return rep_cm.punctures;
    }
    return rep_number.punctures;
}

GainGraph RepFile::gain_graph() const {
    if (mode != FieldMode::Laurent) throw DomainMismatch("gain graphs require a laurent-mode file");
    if (edges.empty()) throw DegenerateInput("file declares no edges");
    GainGraph g;
    for (const EdgeDecl& e : edges) g.add_edge(e.u, e.v, rep_evaluate(rep_laurent, e.word), e.word);
    g.validate();
    return g;
}

RepFile parse_repfile(const std::string& text) {
    RepFile out;
    bool have_field = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;

        const std::string& head = tok[0];
        if (head == "field") {
            if (have_field) fail_line(lineno, "duplicate field declaration");
            if (tok.size() < 2) fail_line(lineno, "field mode missing");
            const std::string& m = tok[1];
            std::map<std::string, std::string> kv;
            for (std::size_t k = 2; k < tok.size(); ++k) {
                std::string val;
                bool matched = false;
                for (const char* key : {"p", "prec", "var", "minpoly", "delta"}) {
                    if (key_value(tok[k], key, val)) {
                        if (!kv.emplace(key, val).second) fail_line(lineno, std::string("duplicate key ") + key);
                        matched = true;
                        break;
                    }
                }
                if (!matched) fail_line(lineno, "unknown key '" + tok[k] + "'");
            }
            auto need = [&](const char* key) -> std::string {
                auto it = kv.find(key);
                if (it == kv.end()) fail_line(lineno, std::string("missing ") + key + "=");
                return it->second;
            };
            auto parse_prime = [&]() -> std::uint32_t {
                std::string ps = need("p");
                try {
                    unsigned long v = std::stoul(ps);
                    return static_cast<std::uint32_t>(v);
                } catch (const std::exception&) {
                    fail_line(lineno, "p= expects an integer");
                }
            };
            if (m == "laurent") {
                out.mode = FieldMode::Laurent;
                out.p = parse_prime();
                if (kv.count("prec")) out.prec = std::stoll(kv["prec"]);
                if (out.prec < 1) fail_line(lineno, "prec must be positive");
                if (kv.count("var") || kv.count("minpoly") || kv.count("delta"))
                    fail_line(lineno, "laurent mode takes p= and prec= only");
                try {
                    LaurentSeries::from_int(out.p, 0);
                } catch (const NotPrime&) {
                    fail_line(lineno, "p=" + std::to_string(out.p) + " is not prime");
                }
            } else if (m == "ratfunc") {
                out.mode = FieldMode::RatFunc;
                out.p = parse_prime();
                if (kv.count("var")) out.var = kv["var"];
                if (out.var.empty() || !std::isalpha(static_cast<unsigned char>(out.var[0])) || out.var == "t")
                    fail_line(lineno, "var must be a symbol distinct from t");
                if (kv.count("prec") || kv.count("minpoly") || kv.count("delta"))
                    fail_line(lineno, "ratfunc mode takes p= and var= only");
                try {
                    RationalFunction::from_int(out.p, 0);
                } catch (const NotPrime&) {
                    fail_line(lineno, "p=" + std::to_string(out.p) + " is not prime");
                }
            } else if (m == "number") {
                out.mode = FieldMode::Number;
                if (kv.count("p") || kv.count("prec") || kv.count("var") || kv.count("delta"))
                    fail_line(lineno, "number mode takes minpoly= only");
                out.number_field = NumberField::create(parse_poly_text(need("minpoly"), lineno));
            } else if (m == "cm") {
                out.mode = FieldMode::CM;
                if (kv.count("p") || kv.count("prec") || kv.count("var"))
                    fail_line(lineno, "cm mode takes minpoly= and delta= only");
                FieldPtr F = NumberField::create(parse_poly_text(need("minpoly"), lineno));
                QPoly dp = parse_poly_text(need("delta"), lineno);
                if (dp.degree() >= F->degree())
                    fail_line(lineno, "delta degree exceeds the field degree");
                std::vector<mpq_class> dc(static_cast<std::size_t>(F->degree()), 0);
                for (long i = 0; i <= dp.degree(); ++i) dc[static_cast<std::size_t>(i)] = dp.coeff(static_cast<std::size_t>(i));
                out.cm_field = CMField::create(F, NFElem(F, dc));
            } else {
                fail_line(lineno, "unknown field mode '" + m + "'");
            }
            have_field = true;
            continue;
        }

        if (!have_field) fail_line(lineno, "field declaration must come first");

        if (head == "gen") {
            if (tok.size() < 3) fail_line(lineno, "gen expects a name and a matrix");
            if (tok[1].size() != 1 || !std::islower(static_cast<unsigned char>(tok[1][0])))
                fail_line(lineno, "generator names are single lowercase letters");
            char name = tok[1][0];
            std::size_t pos = line.find('[');
            if (pos == std::string::npos) fail_line(lineno, "gen expects a matrix [[..],[..]]");
            std::string mat_text = line.substr(pos);
            Scanner sc(mat_text, lineno);
            switch (out.mode) {
                case FieldMode::Laurent:
                    out.rep_laurent.add_generator(name, parse_matrix<LaurentSeries>(sc, LaurentOps{out.p, out.prec, sc}));
                    break;
                case FieldMode::RatFunc:
                    out.rep_ratfunc.add_generator(name, parse_matrix<RationalFunction>(sc, RatFuncOps{out.p, out.var, sc}));
                    break;
                case FieldMode::Number:
                    out.rep_number.add_generator(name, parse_matrix<NFElem>(sc, NumberOps{out.number_field, sc}));
                    break;
                case FieldMode::CM:
                    out.rep_cm.add_generator(name, parse_matrix<CMElem>(sc, CMOps{out.cm_field, sc}));
                    break;
            }
            continue;
        }

        if (head == "puncture") {
            if (tok.size() != 2) fail_line(lineno, "puncture expects one word");
            switch (out.mode) {
                case FieldMode::Laurent:
                    check_word_alphabet(tok[1], out.rep_laurent.order, lineno);
                    out.rep_laurent.punctures.push_back(tok[1]);
                    break;
                case FieldMode::RatFunc:
                    check_word_alphabet(tok[1], out.rep_ratfunc.order, lineno);
                    out.rep_ratfunc.punctures.push_back(tok[1]);
                    break;
                case FieldMode::Number:
                    check_word_alphabet(tok[1], out.rep_number.order, lineno);
                    out.rep_number.punctures.push_back(tok[1]);
                    break;
                case FieldMode::CM:
                    check_word_alphabet(tok[1], out.rep_cm.order, lineno);
                    out.rep_cm.punctures.push_back(tok[1]);
                    break;
            }
            continue;
        }

        if (head == "edge") {
            if (out.mode != FieldMode::Laurent) fail_line(lineno, "edge lines require laurent mode");
            if (tok.size() != 4) fail_line(lineno, "edge expects: edge <u> <v> <word>");
            check_word_alphabet(tok[3], out.rep_laurent.order, lineno);
            out.edges.push_back(RepFile::EdgeDecl{tok[1], tok[2], tok[3]});
            continue;
        }

        if (head == "form") {
            if (out.mode != FieldMode::CM) fail_line(lineno, "form lines require cm mode");
            if (out.form) fail_line(lineno, "duplicate form declaration");
            std::size_t pos = line.find('[');
            if (pos == std::string::npos) fail_line(lineno, "form expects a matrix [[..],[..]]");
            std::string mat_text = line.substr(pos);
            Scanner sc(mat_text, lineno);
            Mat2<CMElem> H = parse_matrix<CMElem>(sc, CMOps{out.cm_field, sc});
            out.form = SesquiForm::from_matrix(out.cm_field, H);
            continue;
        }

        if (head == "targets") {
            if (out.mode != FieldMode::CM) fail_line(lineno, "targets lines require cm mode");
            if (!out.sign_targets.empty()) fail_line(lineno, "duplicate targets declaration");
            for (std::size_t k = 1; k < tok.size(); ++k) {
                if (tok[k] == "+") out.sign_targets.push_back(1);
                else if (tok[k] == "-") out.sign_targets.push_back(-1);
                else fail_line(lineno, "targets are '+' or '-'");
            }
            if (out.sign_targets.empty()) fail_line(lineno, "targets expects at least one sign");
            continue;
        }

        fail_line(lineno, "unknown declaration '" + head + "'");
    }

    if (!have_field) throw ParseError("file has no field declaration");
    return out;
}

std::string serialize_repfile(const RepPresentation<NFElem>& rep) {
    if (rep.order.empty()) throw DegenerateInput("cannot serialize an empty representation");
    const FieldPtr& F = rep.gens.at(rep.order.front()).a.field();
    std::ostringstream os;
    os << "field number minpoly=" << F->minpoly().str() << "\n";
    for (char name : rep.order) {
        const Mat2<NFElem>& m = rep.gens.at(name);
        os << "gen " << name << " [[" << m.a.str() << "," << m.b.str() << "],[" << m.c.str() << ","
           << m.d.str() << "]]\n";
    }
    for (const std::string& w : rep.punctures) os << "puncture " << w << "\n";
    return os.str();
}

}  // namespace sl2k
