#include "sl2k/treeharm.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace sl2k {

void GainGraph::add_vertex(const std::string& name) {
    if (name.empty()) throw ParseError("empty graph vertex name");
    if (!has_vertex(name)) vertices.push_back(name);
}

void GainGraph::add_edge(const std::string& u, const std::string& v, const Mat2<LaurentSeries>& gain,
                         const std::string& label) {
    require_det_one(gain);
    add_vertex(u);
    add_vertex(v);
    edges.push_back(Edge{u, v, gain, label});
}

bool GainGraph::has_vertex(const std::string& name) const {
    return std::find(vertices.begin(), vertices.end(), name) != vertices.end();
}

void GainGraph::validate() const {
    if (vertices.empty()) throw DegenerateInput("gain graph has no vertices");
    std::set<std::string> seen{vertices.front()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Edge& e : edges) {
            bool cu = seen.count(e.u) > 0, cv = seen.count(e.v) > 0;
            if (cu != cv) {
                seen.insert(cu ? e.v : e.u);
                grew = true;
            }
        }
    }
    if (seen.size() != vertices.size()) throw DegenerateInput("gain graph is not connected");
}

TreeAssignment constant_assignment(const GainGraph& g, const Vertex& at) {
    TreeAssignment a;
    for (const std::string& v : g.vertices) a[v] = at;
    return a;
}

namespace {

const Vertex& assigned(const TreeAssignment& a, const std::string& u) {
    auto it = a.find(u);
    if (it == a.end()) throw DomainMismatch("assignment misses graph vertex '" + u + "'");
    return it->second;
}

unsigned long long sq(long long d) { return static_cast<unsigned long long>(d) * static_cast<unsigned long long>(d); }

// energy terms touching u, as pulled-back fixed targets plus loop gains
struct LocalTerms {
    std::vector<Vertex> targets;
    std::vector<Mat2<LaurentSeries>> loops;

    unsigned long long eval(const Vertex& x) const {
        unsigned long long f = 0;
        for (const Vertex& t : targets) f += sq(distance(x, t));
        for (const auto& g : loops) f += sq(distance(x, act(g, x)));
        return f;
    }
};

LocalTerms local_terms(const GainGraph& g, const TreeAssignment& a, const std::string& u) {
    LocalTerms lt;
    for (const GainGraph::Edge& e : g.edges) {
        if (e.u == u && e.v == u) {
            lt.loops.push_back(e.gain);
        } else if (e.u == u) {
            lt.targets.push_back(act(e.gain, assigned(a, e.v)));
        } else if (e.v == u) {
            lt.targets.push_back(act(e.gain.adjugate(), assigned(a, e.u)));
        }
    }
    return lt;
}

}  // namespace

unsigned long long energy(const GainGraph& g, const TreeAssignment& a) {
    unsigned long long total = 0;
    for (const GainGraph::Edge& e : g.edges)
        total += sq(distance(assigned(a, e.u), act(e.gain, assigned(a, e.v))));
    return total;
}

Vertex local_update(const GainGraph& g, const TreeAssignment& a, const std::string& u) {
    LocalTerms lt = local_terms(g, a, u);
    Vertex cur = assigned(a, u);
    if (lt.targets.empty() && lt.loops.empty()) return cur;

    if (lt.loops.empty()) {
        // exact search over the convex hull of the targets; the set iterates
        // in canonical order, so the first minimizer is the canonical least
        std::set<Vertex> hull;
        for (std::size_t i = 0; i < lt.targets.size(); ++i)
            for (std::size_t j = i + 1; j < lt.targets.size(); ++j)
                for (const Vertex& v : geodesic(lt.targets[i], lt.targets[j])) hull.insert(v);
        hull.insert(lt.targets.begin(), lt.targets.end());
        unsigned long long best = lt.eval(cur);
        Vertex best_v = cur;
        bool cur_optimal = true;
        for (const Vertex& v : hull) {
            unsigned long long f = lt.eval(v);
            if (f < best) {
                best = f;
                best_v = v;
                cur_optimal = false;
            }
        }
        return cur_optimal ? cur : best_v;
    }

    // loop terms: steepest neighbor descent on the convex objective
    unsigned long long f_cur = lt.eval(cur);
    while (f_cur > 0) {
        Vertex best_v = cur;
        unsigned long long best = f_cur;
        for (const Vertex& nb : neighbors(cur)) {
            unsigned long long f = lt.eval(nb);
            if (f < best) {
                best = f;
                best_v = nb;
            }
        }
        if (best == f_cur) break;
        cur = best_v;
        f_cur = best;
    }
    return cur;
}

MinimizeResult minimize(const GainGraph& g, TreeAssignment init, long long max_sweeps) {
    g.validate();
    for (const std::string& v : g.vertices) assigned(init, v);

    MinimizeResult res;
    res.assignment = std::move(init);
    res.trace.push_back(energy(g, res.assignment));
    for (long long sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (const std::string& u : g.vertices) {
            Vertex nv = local_update(g, res.assignment, u);
            if (nv != res.assignment.at(u)) {
                res.assignment[u] = nv;
                changed = true;
            }
        }
        if (!changed) {
            res.converged = true;
            break;
        }
        ++res.sweeps;
        res.trace.push_back(energy(g, res.assignment));
    }
    return res;
}

ReebGraph reeb_contract(const GainGraph& g, const TreeAssignment& a) {
    std::map<std::string, std::string> parent;
    for (const std::string& v : g.vertices) parent[v] = v;
    std::function<std::string(const std::string&)> find = [&](const std::string& x) -> std::string {
        std::string r = x;
        while (parent[r] != r) r = parent[r];
        return r;
    };
    auto unite = [&](const std::string& x, const std::string& y) {
        std::string rx = find(x), ry = find(y);
        if (rx == ry) return;
        // keep the lexicographically smaller name as representative
        if (ry < rx) std::swap(rx, ry);
        parent[ry] = rx;
    };

    std::vector<long long> weight(g.edges.size(), 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const GainGraph::Edge& e = g.edges[i];
        weight[i] = distance(assigned(a, e.u), act(e.gain, assigned(a, e.v)));
        if (weight[i] == 0) unite(e.u, e.v);
    }

    ReebGraph r;
    std::set<std::string> classes;
    for (const std::string& v : g.vertices) classes.insert(find(v));
    r.vertices.assign(classes.begin(), classes.end());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (weight[i] == 0) continue;
        r.edges.push_back(ReebGraph::Edge{find(g.edges[i].u), find(g.edges[i].v), weight[i], g.edges[i].label});
    }
    return r;
}

std::string reeb_dot(const ReebGraph& r) {
    std::ostringstream os;
    os << "digraph reeb {\n";
    std::map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        id[r.vertices[i]] = i;
        os << "  r" << i << " [label=\"" << r.vertices[i] << "\"];\n";
    }
    for (const ReebGraph::Edge& e : r.edges) {
        os << "  r" << id.at(e.u) << " -> r" << id.at(e.v) << " [label=\"";
        if (!e.label.empty()) os << e.label << " ";
        os << "w=" << e.weight << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace sl2k
