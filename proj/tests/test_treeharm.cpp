#include <algorithm>
#include <random>

#include "doctest.h"
#include "sl2k/treeharm.hpp"

using namespace sl2k;

namespace {

LaurentSeries ls_int(std::uint32_t p, long long v) { return LaurentSeries::from_int(p, v); }
LaurentSeries ls_tpow(std::uint32_t p, long long k) {
    return LaurentSeries::from_poly_exact(FpPoly::constant(p, 1), k);
}

Mat2<LaurentSeries> lmat(std::uint32_t p, long long a, long long b, long long c, long long d) {
    return Mat2<LaurentSeries>{ls_int(p, a), ls_int(p, b), ls_int(p, c), ls_int(p, d)};
}

// diag(t^k, t^-k), translation length 2|k| along the standard apartment
Mat2<LaurentSeries> l_diag(std::uint32_t p, long long k) {
    return Mat2<LaurentSeries>{ls_tpow(p, k), ls_int(p, 0), ls_int(p, 0), ls_tpow(p, -k)};
}

Mat2<LaurentSeries> l_ident(std::uint32_t p) { return lmat(p, 1, 0, 0, 1); }

}  // namespace

TEST_CASE("gain graph validation") {
    std::uint32_t p = 2;
    GainGraph g;
    CHECK_THROWS_AS(g.validate(), DegenerateInput);

    g.add_edge("x", "y", l_ident(p), "e");
    CHECK(g.has_vertex("x"));
    CHECK(g.has_vertex("y"));
    CHECK(g.vertices == std::vector<std::string>({"x", "y"}));
    g.validate();

    g.add_vertex("z");  // isolated vertex disconnects the graph
    CHECK_THROWS_AS(g.validate(), DegenerateInput);
    g.add_edge("z", "x", l_ident(p));
    g.validate();

    CHECK_THROWS_AS(g.add_edge("x", "w", lmat(p, 1, 1, 0, 0)), DeterminantNotOne);
}

TEST_CASE("energy of explicit assignments") {
    std::uint32_t p = 3;
    Vertex o = base_vertex(p);

    GainGraph g;
    g.add_edge("x", "y", l_ident(p));
    g.add_edge("y", "z", l_ident(p));
    CHECK(energy(g, constant_assignment(g, o)) == 0);

    TreeAssignment a = constant_assignment(g, o);
    a["y"] = apartment_vertex(p, 2);
    // both edges see displacement 2
    CHECK(energy(g, a) == 8);

    // a hyperbolic gain of translation length 4 on a single edge, both ends at o
    GainGraph h;
    h.add_edge("x", "y", l_diag(p, 2));
    CHECK(energy(h, constant_assignment(h, o)) == 16);
    // parking both endpoints translation-adapted: d(o, g . M_4) = d(o, M_... ) drops to the length
    TreeAssignment b;
    b["x"] = o;
    b["y"] = apartment_vertex(p, -4);
    CHECK(energy(h, b) == 0);
}

TEST_CASE("energy is invariant under a global isometry") {
    std::uint32_t p = 2;
    Vertex o = base_vertex(p);
    Mat2<LaurentSeries> h{ls_int(p, 1), ls_tpow(p, -1), ls_int(p, 0), ls_int(p, 1)};

    GainGraph g;
    g.add_edge("x", "y", l_diag(p, 1), "a");
    g.add_edge("y", "x", lmat(p, 1, 1, 1, 0) * l_diag(p, 1), "b");
    g.add_edge("x", "x", l_diag(p, 3), "c");

    GainGraph conj;
    for (const auto& e : g.edges) conj.add_edge(e.u, e.v, h * e.gain * h.adjugate(), e.label);

    std::vector<Vertex> pool = ball(o, 2);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        TreeAssignment a;
        a["x"] = pool[rng() % pool.size()];
        a["y"] = pool[rng() % pool.size()];
        TreeAssignment moved;
        for (const auto& [name, v] : a) moved[name] = act(h, v);
        CHECK(energy(g, a) == energy(conj, moved));
    }
}

TEST_CASE("local update pulls a vertex to the hull of its neighbors") {
    std::uint32_t p = 2;
    Vertex o = base_vertex(p);

    // single target: the update lands on it
    GainGraph g1;
    g1.add_edge("x", "y", l_ident(p));
    TreeAssignment a1;
    a1["x"] = apartment_vertex(p, 3);
    a1["y"] = o;
    CHECK(local_update(g1, a1, "x") == o);

    // two targets at distance 2: the midpoint wins (energy 2 beats 4 at either end)
    GainGraph g2;
    g2.add_edge("x", "u", l_ident(p));
    g2.add_edge("x", "w", l_ident(p));
    g2.add_edge("u", "w", l_ident(p));
    TreeAssignment a2;
    a2["u"] = apartment_vertex(p, 1);
    a2["w"] = apartment_vertex(p, -1);
    a2["x"] = apartment_vertex(p, 5);
    Vertex mid = local_update(g2, a2, "x");
    CHECK(mid == o);

    // an optimal current position is kept
    a2["x"] = o;
    CHECK(local_update(g2, a2, "x") == o);

    // gains are honored: edge x->y with gain diag(t,1/t) wants a(x) = g . a(y)
    GainGraph g3;
    g3.add_edge("x", "y", l_diag(p, 1));
    TreeAssignment a3;
    a3["x"] = apartment_vertex(p, 9);
    a3["y"] = o;
    CHECK(local_update(g3, a3, "x") == act(l_diag(p, 1), o));
    // and the reverse direction pulls through the inverse gain
    a3["x"] = o;
    a3["y"] = apartment_vertex(p, 9);
    CHECK(local_update(g3, a3, "y") == act(l_diag(p, 1).adjugate(), o));
}

TEST_CASE("local update handles loop gains by neighbor descent") {
    std::uint32_t p = 2;
    Vertex o = base_vertex(p);

    GainGraph g;
    g.add_edge("x", "x", l_diag(p, 1), "loop");
    TreeAssignment a;
    a["x"] = apartment_vertex(p, 6);

    // the axis of diag(t, 1/t) is the standard apartment; descent must reach it
    TreeAssignment cur = a;
    for (int step = 0; step < 20; ++step) cur["x"] = local_update(g, cur, "x");
    CHECK(energy(g, cur) == 4);  // translation length 2, squared

    // off-axis start at distance 2 from the apartment
    Mat2<LaurentSeries> shift{ls_int(p, 1), ls_int(p, 0), ls_tpow(p, 2), ls_int(p, 1)};
    a["x"] = act(shift, apartment_vertex(p, -3));
    cur = a;
    for (int step = 0; step < 40; ++step) cur["x"] = local_update(g, cur, "x");
    CHECK(energy(g, cur) == 4);
}

TEST_CASE("minimize drives bounded graphs to energy zero") {
    std::uint32_t p = 3;
    Vertex o = base_vertex(p);

    GainGraph g;
    g.add_edge("x", "y", lmat(p, 1, 1, 0, 1), "a");
    g.add_edge("y", "z", lmat(p, 0, -1, 1, 0), "b");
    g.add_edge("z", "x", (lmat(p, 1, 1, 0, 1) * lmat(p, 0, -1, 1, 0)).adjugate(), "c");

    TreeAssignment init;
    init["x"] = apartment_vertex(p, 4);
    init["y"] = apartment_vertex(p, -3);
    init["z"] = act(Mat2<LaurentSeries>{ls_int(p, 1), ls_int(p, 0), ls_tpow(p, 1), ls_int(p, 1)}, o);

    MinimizeResult r = minimize(g, init, 64);
    CHECK(r.converged);
    CHECK(energy(g, r.assignment) == 0);
    CHECK(r.trace.front() > 0);
    CHECK(r.trace.back() == 0);
    CHECK(std::is_sorted(r.trace.rbegin(), r.trace.rend()));  // non-increasing
    // integral gains fix the base vertex, so zero energy puts every vertex there
    for (const auto& [name, v] : r.assignment) CHECK(distance(v, o) == 0);
}

TEST_CASE("minimize reaches the translation-length floor on a loop") {
    std::uint32_t p = 2;
    GainGraph g;
    g.add_edge("x", "x", l_diag(p, 1), "t");

    TreeAssignment init;
    Mat2<LaurentSeries> shift{ls_int(p, 1), ls_int(p, 0), ls_tpow(p, 2), ls_int(p, 1)};
    init["x"] = act(shift, apartment_vertex(p, -3));  // off the axis of the gain
    REQUIRE(energy(g, init) > 4);
    MinimizeResult r = minimize(g, init, 64);
    CHECK(r.converged);
    CHECK(energy(g, r.assignment) == 4);

    // brute force over a ball certifies the floor
    unsigned long long best = ~0ULL;
    for (const Vertex& v : ball(base_vertex(p), 4)) {
        TreeAssignment a;
        a["x"] = v;
        best = std::min(best, energy(g, a));
    }
    CHECK(best == 4);

    // an optimal initial assignment is left untouched
    MinimizeResult r2 = minimize(g, r.assignment, 8);
    CHECK(r2.converged);
    CHECK(r2.assignment == r.assignment);
    CHECK(r2.sweeps <= 1);

    // a zero sweep budget never certifies convergence
    MinimizeResult r3 = minimize(g, init, 0);
    CHECK_FALSE(r3.converged);
}

TEST_CASE("displacement functions are convex along geodesics") {
    // d(x, g x)^2 sampled along a geodesic never dips below the chord
    std::uint32_t p = 2;
    Vertex o = base_vertex(p);
    std::vector<Mat2<LaurentSeries>> gains = {
        l_diag(p, 1),
        lmat(p, 1, 1, 0, 1),
        l_diag(p, 2) * lmat(p, 1, 1, 0, 1),
        Mat2<LaurentSeries>{ls_int(p, 1), ls_int(p, 0), ls_tpow(p, -1), ls_int(p, 1)},
    };
    std::vector<Vertex> pool = ball(o, 3);
    std::mt19937 rng(11);
    for (const auto& gmat : gains) {
        for (int trial = 0; trial < 8; ++trial) {
            Vertex a = pool[rng() % pool.size()];
            Vertex b = pool[rng() % pool.size()];
            std::vector<Vertex> path = geodesic(a, b);
            auto f = [&](const Vertex& v) {
                long long d = distance(v, act(gmat, v));
                return d * d;
            };
            // midpoint convexity in integer steps: f(path[i]) <= max at the ends
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                long long lo = std::min(f(path.front()), f(path.back()));
                long long hi = std::max(f(path.front()), f(path.back()));
                CHECK(f(path[i]) <= hi);
                (void)lo;
            }
        }
    }
}

TEST_CASE("reeb contraction") {
    std::uint32_t p = 2;
    Vertex o = base_vertex(p);

    // bounded graph at the optimum: everything contracts to one point
    GainGraph g;
    g.add_edge("x", "y", lmat(p, 1, 1, 0, 1), "a");
    g.add_edge("y", "x", lmat(p, 1, 0, 1, 1), "b");
    ReebGraph r = reeb_contract(g, constant_assignment(g, o));
    CHECK(r.vertices.size() == 1);
    CHECK(r.edges.empty());

    // hyperbolic loop at the optimum: nothing contracts, the loop carries the length
    GainGraph l;
    l.add_edge("x", "x", l_diag(p, 1), "t");
    TreeAssignment la;
    la["x"] = apartment_vertex(p, 1);
    REQUIRE(energy(l, la) == 4);
    ReebGraph rl = reeb_contract(l, la);
    CHECK(rl.vertices == std::vector<std::string>({"x"}));
    REQUIRE(rl.edges.size() == 1);
    CHECK(rl.edges[0].weight == 2);
    CHECK(rl.edges[0].label == "t");
    CHECK(rl.edges[0].u == rl.edges[0].v);

    // 3-cycle with holonomy of translation length 2: the displacement spreads
    // as 1+1 over two edges, the zero edge contracts
    GainGraph c;
    c.add_edge("x", "y", l_ident(p), "a");
    c.add_edge("y", "z", l_ident(p), "b");
    c.add_edge("z", "x", l_diag(p, 1), "c");
    MinimizeResult m = minimize(c, constant_assignment(c, o), 64);
    CHECK(m.converged);
    CHECK(energy(c, m.assignment) == 2);
    ReebGraph rc = reeb_contract(c, m.assignment);
    CHECK(rc.vertices.size() == 2);
    CHECK(rc.edges.size() == 2);

    // weights square-sum to the energy, on any assignment
    TreeAssignment odd = m.assignment;
    odd["y"] = apartment_vertex(p, 2);
    ReebGraph ro = reeb_contract(c, odd);
    unsigned long long sqsum = 0;
    for (const auto& e : ro.edges)
        sqsum += static_cast<unsigned long long>(e.weight) * static_cast<unsigned long long>(e.weight);
    CHECK(sqsum == energy(c, odd));

    std::string dot = reeb_dot(rl);
    CHECK(dot.find("digraph reeb") != std::string::npos);
    CHECK(dot.find("w=2") != std::string::npos);
    CHECK(dot.find("t ") != std::string::npos);
}
