#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "sl2k/bttree.hpp"
#include "sl2k/domains.hpp"

using namespace sl2k;

namespace {

LaurentSeries ls_one(std::uint32_t p) { return LaurentSeries::from_int(p, 1); }
LaurentSeries ls_zero(std::uint32_t p) { return LaurentSeries(p); }
LaurentSeries ls_tpow(std::uint32_t p, long long k) {
    return LaurentSeries::from_poly_exact(FpPoly::constant(p, 1), k);
}

Mat2<LaurentSeries> mat_diag(std::uint32_t p, long long k1, long long k2) {
    return Mat2<LaurentSeries>{ls_tpow(p, k1), ls_zero(p), ls_zero(p), ls_tpow(p, k2)};
}

Mat2<LaurentSeries> elem_upper(std::uint32_t p, const FpPoly& f, long long shift) {
    return Mat2<LaurentSeries>{ls_one(p), LaurentSeries::from_poly_exact(f, shift), ls_zero(p), ls_one(p)};
}

Mat2<LaurentSeries> elem_lower(std::uint32_t p, const FpPoly& f, long long shift) {
    return Mat2<LaurentSeries>{ls_one(p), ls_zero(p), LaurentSeries::from_poly_exact(f, shift), ls_one(p)};
}

// random word in elementary matrices and diagonal translations; det = 1 exact
Mat2<LaurentSeries> random_sl2(std::mt19937& rng, std::uint32_t p, int letters, long long min_shift = -2) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long long> shift(min_shift, 1);
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    std::uniform_int_distribution<long long> diag(-1, 1);
    Mat2<LaurentSeries> acc = mat2_identity(ls_one(p), ls_zero(p));
    for (int i = 0; i < letters; ++i) {
        FpPoly f(p, {coeff(rng), coeff(rng)});
        if (f.is_zero()) f = FpPoly::constant(p, 1);
        switch (kind(rng)) {
            case 0: acc = acc * elem_upper(p, f, shift(rng)); break;
            case 1: acc = acc * elem_lower(p, f, shift(rng)); break;
            default: {
                long long k = diag(rng);
                acc = acc * mat_diag(p, k, -k);
                break;
            }
        }
    }
    return acc;
}

Mat2<LaurentSeries> random_integral_sl2(std::mt19937& rng, std::uint32_t p, int letters) {
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    Mat2<LaurentSeries> acc = mat2_identity(ls_one(p), ls_zero(p));
    for (int i = 0; i < letters; ++i) {
        FpPoly f(p, {coeff(rng), coeff(rng), coeff(rng)});
        if (f.is_zero()) f = FpPoly::constant(p, 1);
        acc = acc * (kind(rng) == 0 ? elem_upper(p, f, 0) : elem_lower(p, f, 0));
    }
    return acc;
}

}  // namespace

TEST_CASE("canonicalize maps homothetic bases to one vertex") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Mat2<LaurentSeries> id = mat2_identity(ls_one(p), ls_zero(p));
        CHECK(canonicalize(id) == base_vertex(p));

        Vertex v1 = canonicalize(mat_diag(p, 1, 0));
        Vertex v2 = canonicalize(mat_diag(p, 0, -1));
        CHECK(v1 == v2);
        CHECK(v1.n == 1);

        // re-canonicalizing a canonical vertex is the identity
        Vertex w = canonicalize(mat_diag(p, 3, 1));
        CHECK(canonicalize(canonical_basis(w)) == w);
    }
}

TEST_CASE("canonicalize is invariant under integral unimodular column mixing") {
    std::mt19937 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int i = 0; i < 30; ++i) {
            Mat2<LaurentSeries> basis = random_sl2(rng, p, 3);
            Mat2<LaurentSeries> u = random_integral_sl2(rng, p, 3);
            CHECK(canonicalize(basis) == canonicalize(basis * u));
        }
    }
}

TEST_CASE("canonicalize rejects singular and underdetermined bases") {
    std::uint32_t p = 3;
    Mat2<LaurentSeries> singular{ls_one(p), ls_one(p), ls_one(p), ls_one(p)};
    CHECK_THROWS_AS(canonicalize(singular), ZeroDivision);
    Mat2<LaurentSeries> zero{ls_zero(p), ls_zero(p), ls_zero(p), ls_zero(p)};
    CHECK_THROWS_AS(canonicalize(zero), ZeroDivision);

    // entries known only as 1 + O(t): determinant valuation unknown
    LaurentSeries fuzzy = LaurentSeries::from_window(p, 0, {1}, 1);
    Mat2<LaurentSeries> under{fuzzy, ls_one(p), ls_one(p), fuzzy};
    CHECK_THROWS_AS(canonicalize(under), PrecisionExhausted);
}

TEST_CASE("distance basics") {
    for (std::uint32_t p : {2u, 5u}) {
        Vertex base = base_vertex(p);
        CHECK(distance(base, canonicalize(mat_diag(p, 1, 0))) == 1);
        CHECK(distance(base, canonicalize(mat_diag(p, 2, 0))) == 2);
        CHECK(distance(base, base) == 0);
        CHECK(distance(apartment_vertex(p, 1), apartment_vertex(p, 4)) == 3);
        CHECK(distance(apartment_vertex(p, -2), apartment_vertex(p, 3)) == 5);
    }
}

TEST_CASE("neighbors are p+1 distinct vertices at distance 1") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (const Vertex& v : {base_vertex(p), apartment_vertex(p, 2), apartment_vertex(p, -1)}) {
            std::vector<Vertex> nb = neighbors(v);
            CHECK(nb.size() == p + 1);
            std::set<Vertex> uniq(nb.begin(), nb.end());
            CHECK(uniq.size() == p + 1);
            for (const Vertex& u : nb) CHECK(distance(v, u) == 1);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
        }
    }
}

TEST_CASE("sphere sizes match the regular tree") {
    for (std::uint32_t p : {2u, 3u}) {
        std::vector<Vertex> b = ball(base_vertex(p), 4);
        std::map<long long, std::size_t> sphere;
        for (const Vertex& v : b) sphere[distance(base_vertex(p), v)]++;
        CHECK(sphere[0] == 1);
        for (long long k = 1; k <= 4; ++k) {
            std::size_t expected = (p + 1) * 1;
            for (long long j = 1; j < k; ++j) expected *= p;
            CHECK(sphere[k] == expected);
        }
        // every chart-A vertex at radius k has deg b < k; chart-B has t | b
        for (const Vertex& v : b) {
            if (v.n == 0) continue;
            CHECK(v.b.degree() < static_cast<long>(v.n));
            if (v.chart == 'B') CHECK(v.b.coeff(0) == 0);
            CHECK(v.s == 0);
        }
    }
}

TEST_CASE("distance agrees with BFS distance on the radius-3 ball") {
    for (std::uint32_t p : {2u, 3u}) {
        Vertex base = base_vertex(p);
        std::vector<Vertex> verts = ball(base, 3);
        std::map<Vertex, std::size_t> index;
        for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
        // BFS over the neighbor graph from each vertex, restricted to the ball
        for (std::size_t src = 0; src < verts.size(); ++src) {
            std::map<std::size_t, long long> dist{{src, 0}};
            std::vector<std::size_t> queue{src};
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                std::size_t cur = queue[qi];
                for (const Vertex& u : neighbors(verts[cur])) {
                    auto it = index.find(u);
                    if (it == index.end()) continue;
                    if (dist.emplace(it->second, dist[cur] + 1).second) queue.push_back(it->second);
                }
            }
            for (const auto& [j, d] : dist) {
                long long metric = distance(verts[src], verts[j]);
                // BFS inside a ball can only overestimate if the arc leaves
                // the ball, which cannot happen in a tree ball around base
                // when both endpoints are inside: verify exact agreement
                if (metric <= 3) CHECK(metric == d);
            }
        }
    }
}

TEST_CASE("metric axioms on random triples") {
    std::mt19937 rng(21);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int i = 0; i < 40; ++i) {
            Vertex v = canonicalize(random_sl2(rng, p, 3));
            Vertex w = canonicalize(random_sl2(rng, p, 3));
            Vertex x = canonicalize(random_sl2(rng, p, 3));
            CHECK(distance(v, w) == distance(w, v));
            CHECK(distance(v, w) >= 0);
            CHECK((distance(v, w) == 0) == (v == w));
            CHECK(distance(v, x) <= distance(v, w) + distance(w, x));
        }
    }
}

TEST_CASE("geodesics realize the metric") {
    std::uint32_t p = 3;
    Vertex base = base_vertex(p);
    CHECK(geodesic(base, base) == std::vector<Vertex>{base});

    Vertex far = canonicalize(mat_diag(p, 2, 0));
    std::vector<Vertex> path = geodesic(base, far);
    REQUIRE(path.size() == 3);
    CHECK(path[1] == canonicalize(mat_diag(p, 1, 0)));

    std::mt19937 rng(5);
    for (int i = 0; i < 15; ++i) {
        Vertex v = canonicalize(random_sl2(rng, p, 3));
        Vertex w = canonicalize(random_sl2(rng, p, 3));
        std::vector<Vertex> fwd = geodesic(v, w);
        CHECK(fwd.size() == static_cast<std::size_t>(distance(v, w)) + 1);
        for (std::size_t k = 0; k + 1 < fwd.size(); ++k) CHECK(distance(fwd[k], fwd[k + 1]) == 1);
        // no backtracking and reversal symmetry
        for (std::size_t k = 0; k + 2 < fwd.size(); ++k) CHECK(fwd[k] != fwd[k + 2]);
        std::vector<Vertex> bwd = geodesic(w, v);
        std::reverse(bwd.begin(), bwd.end());
        CHECK(fwd == bwd);
    }
}

TEST_CASE("action fixes the base for integral matrices and translates the apartment") {
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Vertex base = base_vertex(p);
        for (int i = 0; i < 10; ++i) {
            CHECK(act(random_integral_sl2(rng, p, 4), base) == base);
        }
        Mat2<LaurentSeries> w{ls_zero(p), -ls_one(p), ls_one(p), ls_zero(p)};
        CHECK(act(w, base) == base);

        Mat2<LaurentSeries> shift = mat_diag(p, -1, 1);
        CHECK(act(shift, base) == apartment_vertex(p, -2));
        CHECK(distance(base, act(shift, base)) == 2);
        for (long long q = -3; q <= 3; ++q) {
            CHECK(act(shift, apartment_vertex(p, q)) == apartment_vertex(p, q - 2));
        }
    }
}

TEST_CASE("action is isometric, respects the group law, and the center acts trivially") {
    std::mt19937 rng(31);
    int samples = 0;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        Vertex base = base_vertex(p);
        for (int i = 0; i < 67; ++i) {
            Mat2<LaurentSeries> g = random_sl2(rng, p, 3);
            Mat2<LaurentSeries> h = random_sl2(rng, p, 3);
            Vertex v = canonicalize(random_sl2(rng, p, 2));
            Vertex w = canonicalize(random_sl2(rng, p, 2));
            CHECK(distance(act(g, v), act(g, w)) == distance(v, w));
            CHECK(act(g * h, v) == act(g, act(h, v)));
            Mat2<LaurentSeries> minus_g = -g;
            CHECK(act(minus_g, v) == act(g, v));
            // parity: the det-1 action is type-preserving
            CHECK(distance(v, act(g, v)) % 2 == 0);
            CHECK(distance(base, act(g, base)) % 2 == 0);
            ++samples;
        }
    }
    CHECK(samples == 201);
}

TEST_CASE("unipotent fixed threshold") {
    std::uint32_t p = 5;
    auto unipotent = [&](const LaurentSeries& a) {
        return Mat2<LaurentSeries>{ls_one(p), a, ls_zero(p), ls_one(p)};
    };
    struct Case {
        LaurentSeries a;
        long long threshold;
    };
    std::vector<Case> cases = {
        {ls_tpow(p, 3), 3},
        {ls_one(p), 0},
        {ls_tpow(p, -2), -2},
    };
    for (const auto& [a, threshold] : cases) {
        CHECK(unipotent_fixed_threshold(a) == threshold);
        for (long long q = threshold - 2; q <= threshold + 2; ++q) {
            bool fixed = act(unipotent(a), apartment_vertex(p, q)) == apartment_vertex(p, q);
            CHECK(fixed == (q <= threshold));
        }
    }
    CHECK_THROWS_AS(unipotent_fixed_threshold(ls_zero(p)), IdentityInput);
}

TEST_CASE("ball dot output") {
    std::string dot = ball_dot(base_vertex(2), 2);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("(A,0,0,0)") != std::string::npos);
    CHECK(dot.find("fillcolor=lightblue") != std::string::npos);
    // 1 + 3 + 6 vertices
    CHECK(std::count(dot.begin(), dot.end(), '[') >= 10);
}
