#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2k/bttree.hpp"
#include "sl2k/domains.hpp"

namespace sl2k {

// Finite connected gain graph: directed edges carry det-1 matrices over the
// Laurent domain.  Vertices register in first-appearance order.
struct GainGraph {
    struct Edge {
        std::string u, v;
        Mat2<LaurentSeries> gain;
        std::string label;  // defining word, kept for reports
    };

    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    void add_vertex(const std::string& name);
    void add_edge(const std::string& u, const std::string& v, const Mat2<LaurentSeries>& gain,
                  const std::string& label = "");
    bool has_vertex(const std::string& name) const;

    // throws DegenerateInput when empty or not connected (edges taken both ways)
    void validate() const;
};

// total map graph vertex -> tree vertex
using TreeAssignment = std::map<std::string, Vertex>;

TreeAssignment constant_assignment(const GainGraph& g, const Vertex& at);

// sum over edges of d(a(u), gain . a(v))^2
unsigned long long energy(const GainGraph& g, const TreeAssignment& a);

// Tree vertex minimizing the terms of the energy that touch u, the other
// coordinates held fixed.  Without loop edges at u the minimizer is found by
// exhaustive search over the convex hull of the pulled-back neighbor images;
// loop terms d(x, gain x)^2 are handled by steepest neighbor descent, which
// reaches a global minimizer of this convex objective.  The current position
// is kept when already optimal; other ties break toward canonical order.
Vertex local_update(const GainGraph& g, const TreeAssignment& a, const std::string& u);

struct MinimizeResult {
    TreeAssignment assignment;
    std::vector<unsigned long long> trace;  // energy before sweep 1, then after each sweep
    bool converged = false;                 // false = sweep budget exhausted while still moving
    long long sweeps = 0;
};

// cyclic coordinate descent in vertex order; energy strictly decreases on
// every sweep that changes the assignment
MinimizeResult minimize(const GainGraph& g, TreeAssignment init, long long max_sweeps);

// Quotient by the zero-displacement edges; surviving edges keep their
// displacement as weight, so the weights' squares sum to the energy.
struct ReebGraph {
    struct Edge {
        std::string u, v;
        long long weight = 0;
        std::string label;
    };
    std::vector<std::string> vertices;  // class representatives, sorted
    std::vector<Edge> edges;
};

ReebGraph reeb_contract(const GainGraph& g, const TreeAssignment& a);

std::string reeb_dot(const ReebGraph& r);

}  // namespace sl2k
