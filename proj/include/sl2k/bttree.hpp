#pragma once

#include <string>
#include <vector>

#include "sl2k/fp.hpp"
#include "sl2k/laurent.hpp"
#include "sl2k/matrix2.hpp"

namespace sl2k {

// Vertex of the Bruhat-Tits tree of SL(2, F_p((t))): a homothety class of
// rank-two lattices, written in the canonical two-chart form that covers
// P^1(O/t^n) on the sphere of radius n around the class of O^2:
//   chart A: span(t^n e1, b e1 + e2)   with deg b < n
//   chart B: span(e1 + b e2, t^n e2)   with deg b < n and t | b
// s records the scaling normalization; canonical vertices always carry s = 0.
struct Vertex {
    char chart = 'A';
    long long n = 0;
    FpPoly b;
    long long s = 0;

    std::uint32_t modulus() const { return b.modulus(); }
    bool operator==(const Vertex& o) const {
        return chart == o.chart && n == o.n && b == o.b && s == o.s;
    }
    bool operator!=(const Vertex& o) const { return !(*this == o); }
    // canonical order: chart, then n, then the representative polynomial
    bool operator<(const Vertex& o) const {
        if (chart != o.chart) return chart < o.chart;
        if (n != o.n) return n < o.n;
        int c = FpPoly::compare(b, o.b);
        if (c != 0) return c < 0;
        return s < o.s;
    }
    std::string label() const;  // "(A,n,b,s)"
};

using LatticeBasis = Mat2<LaurentSeries>;

Vertex base_vertex(std::uint32_t p);

// exact polynomial column basis of the canonical lattice representative
Mat2<FpPoly> canonical_poly_basis(const Vertex& v);
LatticeBasis canonical_basis(const Vertex& v);

// class of the column span; throws ZeroDivision on a singular basis and
// PrecisionExhausted when the class is not determined at the tracked precision
Vertex canonicalize(const LatticeBasis& g);

// exact tree metric via elementary-divisor valuations
long long distance(const Vertex& v, const Vertex& w);

// the p+1 adjacent classes, sorted canonically
std::vector<Vertex> neighbors(const Vertex& v);

// unique arc from v to w, both endpoints included
std::vector<Vertex> geodesic(const Vertex& v, const Vertex& w);

// isometric action of a det-1 matrix
Vertex act(const Mat2<LaurentSeries>& g, const Vertex& v);

// class of the apartment lattice M_q = span(t^q e1, e2)
Vertex apartment_vertex(std::uint32_t p, long long q);

// largest q such that [[1,a],[0,1]] fixes apartment_vertex(q); throws
// IdentityInput when a = 0 exactly
long long unipotent_fixed_threshold(const LaurentSeries& a);

// BFS enumeration of the closed ball, sorted by (distance, canonical order)
std::vector<Vertex> ball(const Vertex& center, long long radius);

// DOT rendering of the ball with the center highlighted
std::string ball_dot(const Vertex& center, long long radius);

}  // namespace sl2k
