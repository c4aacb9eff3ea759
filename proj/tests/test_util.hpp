#ifndef RECONFORGE_TEST_UTIL_HPP
#define RECONFORGE_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "reconforge/graph.hpp"
#include "reconforge/oracle.hpp"

namespace reconforge::test {

inline Graph remove_edge(const Graph& g, int u, int v) {
    Graph out(g.vertex_count());
    for (const auto& [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) out.add_edge(a, b);
    for (int w : g.loop_vertices())
        if (!(u == v && u == w)) out.add_edge(w, w);
    for (int w = 0; w < g.vertex_count(); ++w)
        if (!g.label(w).empty()) out.set_label(w, g.label(w));
    return out;
}

inline Graph random_graph(std::mt19937& rng, int n, double p, bool loops_allowed = false) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + (loops_allowed ? 0 : 1); v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Independent oracle: full Hom-graph component partition. Adjacency between
// two homomorphisms requires phi(x)psi(y) in E(H) for every edge xy of G in
// both orientations.
inline std::vector<int> hom_graph_components(const std::vector<Colouring>& homs, const Graph& g,
                                             const Graph& h) {
    const int m = static_cast<int>(homs.size());
    auto adjacent = [&](const Colouring& a, const Colouring& b) {
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v : g.neighbours(u)) {
                if (v > u) break;
                if (!h.has_edge(a[u], b[v]) || !h.has_edge(a[v], b[u])) return false;
            }
        return true;
    };
    std::vector<int> comp(m, -1);
    int next = 0;
    for (int s = 0; s < m; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int t = 0; t < m; ++t)
                if (comp[t] == -1 && adjacent(homs[cur], homs[t])) {
                    comp[t] = next;
                    stack.push_back(t);
                }
        }
        ++next;
    }
    return comp;
}

// Component partition under single-vertex moves only (the reconfiguration
// relation), computed by brute force over an enumerated hom list.
inline std::vector<int> move_components(const std::vector<Colouring>& homs, const Graph& g,
                                        const Graph& h, MoveRule rule) {
    const int m = static_cast<int>(homs.size());
    auto single_move = [&](const Colouring& a, const Colouring& b) {
        int changed = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (a[v] != b[v]) {
                if (changed != -1) return false;
                changed = v;
            }
        if (changed == -1) return false;
        if (rule == MoveRule::Reflexive && !h.has_edge(a[changed], b[changed])) return false;
        return true;
    };
    std::vector<int> comp(m, -1);
    int next = 0;
    for (int s = 0; s < m; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int t = 0; t < m; ++t)
                if (comp[t] == -1 && single_move(homs[cur], homs[t])) {
                    comp[t] = next;
                    stack.push_back(t);
                }
        }
        ++next;
    }
    return comp;
}

} // namespace reconforge::test

#endif
