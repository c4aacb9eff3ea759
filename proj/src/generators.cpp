#include "reconforge/generators.hpp"

#include <algorithm>
#include <cmath>

#include "reconforge/errors.hpp"

namespace reconforge {

Graph complete_graph(int k) {
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int k) {
    if (k < 3) throw malformed_input_error("cycle_graph: k must be at least 3");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph wheel(int k) {
    if (k < 3) throw malformed_input_error("wheel: k must be at least 3");
    Graph g(k + 1);
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, (i + 1) % k);
        g.add_edge(i, k);
    }
    return g;
}

Graph make_reflexive(Graph g) {
    for (int v = 0; v < g.vertex_count(); ++v) g.add_edge(v, v);
    return g;
}

Graph generalized_mycielski(int k, int levels) {
    if (k < 3) throw malformed_input_error("generalized_mycielski: k must be at least 3");
    if (levels < 0 || levels > 3)
        throw malformed_input_error("generalized_mycielski: levels must lie in 0..3");
    const int apex = k * (levels + 1);
    Graph g(apex + 1);
    auto id = [k](int l, int i) { return l * k + ((i % k) + k) % k; };
    for (int i = 0; i < k; ++i) g.add_edge(id(0, i), id(0, i + 1));
    for (int l = 0; l < levels; ++l)
        for (int i = 0; i < k; ++i) {
            g.add_edge(id(l, i), id(l + 1, i + 1));
            g.add_edge(id(l, i), id(l + 1, i - 1));
        }
    for (int i = 0; i < k; ++i) g.add_edge(id(levels, i), apex);
    for (int l = 0; l <= levels; ++l)
        for (int i = 0; i < k; ++i)
            g.set_label(id(l, i), "u" + std::to_string(l) + "," + std::to_string(i));
    g.set_label(apex, "z");
    return g;
}

std::pair<Graph, Embedding> cycle_planar(int k) {
    Graph g = cycle_graph(k);
    Embedding e;
    e.rotations.resize(k);
    for (int i = 0; i < k; ++i) e.rotations[i] = {(i + k - 1) % k, (i + 1) % k};
    return {std::move(g), std::move(e)};
}

namespace {

// Rotation system of a convex polytope centred at the origin: at each vertex,
// neighbours sorted counterclockwise around the outward normal.
Embedding rotations_from_coordinates(const Graph& g,
                                     const std::vector<std::array<double, 3>>& pos) {
    const int n = g.vertex_count();
    Embedding e;
    e.rotations.resize(n);
    for (int v = 0; v < n; ++v) {
        const auto& p = pos[v];
        const double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        std::array<double, 3> nv{p[0] / norm, p[1] / norm, p[2] / norm};
        // orthonormal tangent basis
        std::array<double, 3> ref{1, 0, 0};
        if (std::abs(nv[0]) > 0.8) ref = {0, 1, 0};
        std::array<double, 3> e1{nv[1] * ref[2] - nv[2] * ref[1],
                                 nv[2] * ref[0] - nv[0] * ref[2],
                                 nv[0] * ref[1] - nv[1] * ref[0]};
        const double l1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
        for (double& x : e1) x /= l1;
        std::array<double, 3> e2{nv[1] * e1[2] - nv[2] * e1[1], nv[2] * e1[0] - nv[0] * e1[2],
                                 nv[0] * e1[1] - nv[1] * e1[0]};
        std::vector<std::pair<double, int>> order;
        for (int w : g.neighbours(v)) {
            if (w == v) continue;
            std::array<double, 3> d{pos[w][0] - p[0], pos[w][1] - p[1], pos[w][2] - p[2]};
            const double x = d[0] * e1[0] + d[1] * e1[1] + d[2] * e1[2];
            const double y = d[0] * e2[0] + d[1] * e2[1] + d[2] * e2[2];
            order.emplace_back(std::atan2(y, x), w);
        }
        std::sort(order.begin(), order.end());
        for (auto& [ang, w] : order) e.rotations[v].push_back(w);
    }
    return e;
}

} // namespace

std::pair<Graph, Embedding> cube() {
    Graph g(8);
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
    std::vector<std::array<double, 3>> pos(8);
    for (int v = 0; v < 8; ++v)
        pos[v] = {v & 1 ? 1.0 : -1.0, v & 2 ? 1.0 : -1.0, v & 4 ? 1.0 : -1.0};
    return {g, rotations_from_coordinates(g, pos)};
}

std::pair<Graph, Embedding> k23_planar() {
    // parts {0,1} and {2,3,4}
    Graph g(5);
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 5; ++b) g.add_edge(a, b);
    Embedding e;
    e.rotations = {{2, 3, 4}, {4, 3, 2}, {0, 1}, {0, 1}, {0, 1}};
    return {std::move(g), std::move(e)};
}

std::pair<Graph, Embedding> octahedron() {
    // antipodal pairs (0,5), (1,3), (2,4)
    Graph g(6);
    const int anti[6] = {5, 3, 4, 1, 2, 0};
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (anti[u] != v) g.add_edge(u, v);
    std::vector<std::array<double, 3>> pos = {{0, 0, 1}, {1, 0, 0},  {0, 1, 0},
                                              {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    return {g, rotations_from_coordinates(g, pos)};
}

std::pair<Graph, Embedding> icosahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<std::array<double, 3>> pos;
    for (double s1 : {1.0, -1.0})
        for (double s2 : {phi, -phi}) {
            pos.push_back({0, s1, s2});
            pos.push_back({s1, s2, 0});
            pos.push_back({s2, 0, s1});
        }
    Graph g(12);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) {
            double d2 = 0;
            for (int c = 0; c < 3; ++c)
                d2 += (pos[u][c] - pos[v][c]) * (pos[u][c] - pos[v][c]);
            if (std::abs(d2 - 4.0) < 1e-9) g.add_edge(u, v);
        }
    return {g, rotations_from_coordinates(g, pos)};
}

std::pair<Graph, Embedding> reflexive_octahedron() {
    auto [g, e] = octahedron();
    return {make_reflexive(std::move(g)), std::move(e)};
}

std::pair<Graph, Embedding> reflexive_icosahedron() {
    auto [g, e] = icosahedron();
    return {make_reflexive(std::move(g)), std::move(e)};
}

std::pair<Graph, Embedding> reflexive_triangle() {
    Graph g = make_reflexive(complete_graph(3));
    Embedding e;
    e.rotations = {{1, 2}, {0, 2}, {0, 1}};
    return {std::move(g), std::move(e)};
}

std::pair<Graph, Embedding> cycle_pp(int k) {
    if (k < 3 || k % 2 == 0) throw malformed_input_error("cycle_pp: k must be odd and >= 3");
    auto [g, e] = cycle_planar(k);
    e.negative_edges.push_back({0, k - 1});
    return {std::move(g), std::move(e)};
}

std::pair<Graph, Embedding> generalized_mycielski_pp(int k, int levels) {
    if (k < 3 || k % 2 == 0)
        throw malformed_input_error("generalized_mycielski_pp: k must be odd and >= 3");
    Graph g = generalized_mycielski(k, levels);
    const int r = levels;
    const int apex = k * (r + 1);
    auto id = [k](int l, int i) { return l * k + ((i % k) + k) % k; };

    // Drawing: level l sits on a ring of decreasing radius, vertex (l,i) at
    // angular slot (i-l)*(k+1)/2 mod k, staggered half a slot per level; the
    // level-0 cycle edges cross the cross-cap and carry sign -1.
    Embedding e;
    e.rotations.resize(apex + 1);
    for (int i = 0; i < k; ++i) {
        if (r == 0)
            e.rotations[id(0, i)] = {id(0, i - 1), id(0, i + 1), apex};
        else
            e.rotations[id(0, i)] = {id(0, i - 1), id(0, i + 1), id(1, i + 1), id(1, i - 1)};
    }
    for (int l = 1; l <= r; ++l)
        for (int i = 0; i < k; ++i) {
            if (l == r)
                e.rotations[id(l, i)] = {id(l - 1, i + 1), apex, id(l - 1, i - 1)};
            else
                e.rotations[id(l, i)] = {id(l - 1, i + 1), id(l + 1, i + 1), id(l + 1, i - 1),
                                         id(l - 1, i - 1)};
        }
    for (int s = 0; s < k; ++s) e.rotations[apex].push_back(id(r, r + 2 * s));
    for (int i = 0; i < k; ++i) {
        int u = id(0, i), v = id(0, i + 1);
        e.negative_edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return {std::move(g), std::move(e)};
}

std::pair<Graph, Embedding> wheel_pp(int k) { return generalized_mycielski_pp(k, 0); }

std::pair<Graph, Embedding> grotzsch() { return generalized_mycielski_pp(5, 1); }

} // namespace reconforge
