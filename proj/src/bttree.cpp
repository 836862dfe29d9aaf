#include "sl2k/bttree.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace sl2k {

namespace {

constexpr long long kValInf = std::numeric_limits<long long>::max() / 4;

long long poly_valuation(const FpPoly& f) {
    return f.is_zero() ? kValInf : static_cast<long long>(f.low_order());
}

// certified valuation-zero test: known leading coefficient at exponent 0
bool unit_at_zero(const LaurentSeries& x) {
    return x.kind() == LaurentSeries::Kind::Known && x.valuation() == 0;
}

}  // namespace

std::string Vertex::label() const {
    std::ostringstream out;
    out << "(" << chart << "," << n << "," << b.str("t") << "," << s << ")";
    return out.str();
}

Vertex base_vertex(std::uint32_t p) {
    return Vertex{'A', 0, FpPoly(p), 0};
}

Mat2<FpPoly> canonical_poly_basis(const Vertex& v) {
    std::uint32_t p = v.modulus();
    FpPoly one = FpPoly::constant(p, 1);
    FpPoly zero(p);
    FpPoly tn = FpPoly::monomial(p, 1, static_cast<std::size_t>(v.n));
    if (v.chart == 'A') {
        // columns (t^n, 0), (b, 1)
        return Mat2<FpPoly>{tn, v.b, zero, one};
    }
    // columns (1, b), (0, t^n)
    return Mat2<FpPoly>{one, zero, v.b, tn};
}

LatticeBasis canonical_basis(const Vertex& v) {
    Mat2<FpPoly> m = canonical_poly_basis(v);
    auto lift = [](const FpPoly& f) { return LaurentSeries::from_poly_exact(f); };
    return LatticeBasis{lift(m.a), lift(m.b), lift(m.c), lift(m.d)};
}

Vertex canonicalize(const LatticeBasis& g) {
    std::uint32_t p = g.a.modulus();
    const LaurentSeries* entries[4] = {&g.a, &g.b, &g.c, &g.d};

    // certified minimum valuation across the entries
    long long m = kValInf;
    bool any_known = false, any_indeterminate = false;
    long long indeterminate_floor = kValInf;
    for (const LaurentSeries* e : entries) {
        switch (e->kind()) {
            case LaurentSeries::Kind::Known:
                m = std::min(m, e->valuation());
                any_known = true;
                break;
            case LaurentSeries::Kind::IndeterminateZero:
                any_indeterminate = true;
                indeterminate_floor = std::min(indeterminate_floor, e->prec());
                break;
            case LaurentSeries::Kind::ExactZero:
                break;
        }
    }
    if (!any_known) {
        if (any_indeterminate) throw PrecisionExhausted("lattice basis content valuation not certified");
        throw ZeroDivision("zero matrix is not a lattice basis");
    }
    if (any_indeterminate && indeterminate_floor < m) {
        throw PrecisionExhausted("lattice basis content valuation not certified");
    }

    // scale to content valuation 0
    Mat2<LaurentSeries> h{g.a.shifted(-m), g.b.shifted(-m), g.c.shifted(-m), g.d.shifted(-m)};
    LaurentSeries det = h.det();
    switch (det.kind()) {
        case LaurentSeries::Kind::ExactZero:
            throw ZeroDivision("singular matrix is not a lattice basis");
        case LaurentSeries::Kind::IndeterminateZero:
            throw PrecisionExhausted("determinant valuation not certified");
        case LaurentSeries::Kind::Known:
            break;
    }
    long long n = det.valuation();
    if (n == 0) return base_vertex(p);

    // Rows of the adjugate are primitive left-kernel covectors of h mod t^n;
    // any row of unit content determines the lattice.
    LaurentSeries rows[2][2] = {{h.d, -h.b}, {-h.c, h.a}};
    int row = -1;
    for (int i = 0; i < 2 && row < 0; ++i) {
        if (unit_at_zero(rows[i][0]) || unit_at_zero(rows[i][1])) row = i;
    }
    if (row < 0) throw PrecisionExhausted("no covector of certified unit content");

    FpPoly c = rows[row][0].window_poly(0, n);
    FpPoly d = rows[row][1].window_poly(0, n);
    std::size_t un = static_cast<std::size_t>(n);
    if (c.coeff(0) != 0) {
        // covector (c, d) with c a unit: affine chart, c*b + d = 0 mod t^n
        FpPoly b = (-(d * c.series_inverse(un))).truncated(un);
        return Vertex{'A', n, b, 0};
    }
    // chart at infinity: c + d*b = 0 mod t^n with d a unit, so t | b
    FpPoly b = (-(c * d.series_inverse(un))).truncated(un);
    return Vertex{'B', n, b, 0};
}

long long distance(const Vertex& v, const Vertex& w) {
    Mat2<FpPoly> bv = canonical_poly_basis(v);
    Mat2<FpPoly> bw = canonical_poly_basis(w);
    Mat2<FpPoly> adj{bv.d, -bv.b, -bv.c, bv.a};
    Mat2<FpPoly> rel = adj * bw;
    long long content = std::min(std::min(poly_valuation(rel.a), poly_valuation(rel.b)),
                                 std::min(poly_valuation(rel.c), poly_valuation(rel.d)));
    return v.n + w.n - 2 * content;
}

std::vector<Vertex> neighbors(const Vertex& v) {
    std::uint32_t p = v.modulus();
    LatticeBasis basis = canonical_basis(v);
    LaurentSeries one = LaurentSeries::from_int(p, 1);
    LaurentSeries zero(p);
    LaurentSeries t = LaurentSeries::from_poly_exact(FpPoly::constant(p, 1), 1);

    std::vector<Vertex> out;
    out.reserve(p + 1);
    for (std::uint32_t d = 0; d < p; ++d) {
        // sublattice spanned by f1 + d f2 and t f2
        Mat2<LaurentSeries> s{one, zero, LaurentSeries::from_int(p, d), t};
        out.push_back(canonicalize(basis * s));
    }
    // sublattice spanned by f2 and t f1
    Mat2<LaurentSeries> s{zero, t, one, zero};
    out.push_back(canonicalize(basis * s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> geodesic(const Vertex& v, const Vertex& w) {
    std::vector<Vertex> path{v};
    Vertex cur = v;
    long long d = distance(v, w);
    while (d > 0) {
        bool stepped = false;
        for (const Vertex& u : neighbors(cur)) {
            if (distance(u, w) == d - 1) {
                cur = u;
                path.push_back(cur);
                --d;
                stepped = true;
                break;
            }
        }
        if (!stepped) throw PrecisionExhausted("geodesic step not determined");
    }
    return path;
}

Vertex act(const Mat2<LaurentSeries>& g, const Vertex& v) {
    return canonicalize(g * canonical_basis(v));
}

Vertex apartment_vertex(std::uint32_t p, long long q) {
    if (q >= 0) {
        return Vertex{'A', q, FpPoly(p), 0};
    }
    return Vertex{'B', -q, FpPoly(p), 0};
}

long long unipotent_fixed_threshold(const LaurentSeries& a) {
    if (a.is_exact_zero()) throw IdentityInput("unipotent parameter is zero: the matrix is the identity");
    return a.valuation();
}

std::vector<Vertex> ball(const Vertex& center, long long radius) {
    std::set<Vertex> seen{center};
    std::vector<Vertex> order{center};
    std::size_t frontier_begin = 0;
    for (long long r = 0; r < radius; ++r) {
        std::size_t frontier_end = order.size();
        std::vector<Vertex> next;
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            for (const Vertex& u : neighbors(order[i])) {
                if (seen.insert(u).second) next.push_back(u);
            }
        }
        std::sort(next.begin(), next.end());
        order.insert(order.end(), next.begin(), next.end());
        frontier_begin = frontier_end;
    }
    return order;
}

std::string ball_dot(const Vertex& center, long long radius) {
    std::vector<Vertex> verts = ball(center, radius);
    std::set<Vertex> in_ball(verts.begin(), verts.end());
    std::map<Vertex, std::size_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;

    std::ostringstream out;
    out << "digraph ball {\n";
    for (std::size_t i = 0; i < verts.size(); ++i) {
        out << "  v" << i << " [label=\"" << verts[i].label() << "\"";
        if (verts[i] == center) out << " style=filled fillcolor=lightblue";
        out << "];\n";
    }
    for (const Vertex& v : verts) {
        for (const Vertex& u : neighbors(v)) {
            if (!(v < u)) continue;
            auto it = index.find(u);
            if (it == index.end()) continue;
            out << "  v" << index[v] << " -> v" << it->second << " [dir=none];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace sl2k
