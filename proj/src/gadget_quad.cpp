#include <algorithm>
#include <set>

#include "reconforge/errors.hpp"
#include "reconforge/gadget.hpp"

namespace reconforge {

namespace {

std::string pair_name(std::pair<int, int> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

// The two common neighbours of an across pair (the other corners of its
// face); exactly two on a K23-free quadrangulation.
std::vector<int> common_neighbours(const Graph& h, int a, int b) {
    std::vector<int> out;
    for (int w : h.neighbours(a)) {
        if (w == a || w == b) continue;
        if (h.has_edge(b, w)) out.push_back(w);
    }
    return out;
}

std::vector<std::pair<int, int>> boundary_edges(const std::vector<int>& walk) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        int u = walk[i], v = walk[(i + 1) % walk.size()];
        out.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

PhiDigraph build_phi_quad(const Graph& h, const Embedding& e) {
    ValidationReport rep = validate_sphere_quadrangulation(h, e);
    if (!rep.all_passed()) {
        std::string msg = "build_phi_quad: host fails sphere-quadrangulation validation (";
        for (const auto& [name, ok] : rep.checks)
            if (!ok) msg += name + " ";
        throw precondition_error(msg + ")");
    }
    const FaceList faces = trace_faces(h, e);
    const std::vector<AcrossPair> across = across_pairs(h, faces);

    PhiDigraph phi;
    phi.pairs.reserve(across.size());
    for (const auto& ap : across) {
        phi.index[{ap.a, ap.b}] = static_cast<int>(phi.pairs.size());
        phi.pairs.emplace_back(ap.a, ap.b);
        phi.pair_face.push_back(ap.face);
    }
    const int m = static_cast<int>(phi.pairs.size());
    phi.out_arcs.resize(m);
    phi.in_arcs.resize(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (phi_arc(h, phi.pairs[i], phi.pairs[j])) {
                phi.out_arcs[i].push_back(j);
                phi.in_arcs[j].push_back(i);
            }
        }

    for (int i = 0; i < m; ++i)
        if (phi.out_arcs[i].size() != 2 || phi.in_arcs[i].size() != 2)
            throw certificate_violation(
                "Phi degree check failed (every vertex must have in- and out-degree 2): pair " +
                pair_name(phi.pairs[i]) + " has out " +
                std::to_string(phi.out_arcs[i].size()) + ", in " +
                std::to_string(phi.in_arcs[i].size()));

    for (int i = 0; i < m; ++i)
        for (int j : phi.out_arcs[i]) {
            const auto rev_from = std::make_pair(phi.pairs[j].second, phi.pairs[j].first);
            const auto rev_to = std::make_pair(phi.pairs[i].second, phi.pairs[i].first);
            if (!phi.has_arc(rev_from, rev_to))
                throw certificate_violation("Phi reversal symmetry failed at arc " +
                                            pair_name(phi.pairs[i]) + " -> " +
                                            pair_name(phi.pairs[j]));
        }

    // Gamma: pairs on faces sharing exactly one boundary edge, with first
    // coordinates adjacent and second coordinates adjacent.
    std::vector<std::vector<std::pair<int, int>>> face_edges;
    face_edges.reserve(faces.face_count());
    for (const auto& f : faces.faces) face_edges.push_back(boundary_edges(f));
    std::set<std::pair<int, int>> gamma;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            const auto [a, b] = phi.pairs[i];
            const auto [c, d] = phi.pairs[j];
            if (phi.pair_face[i] == phi.pair_face[j]) continue;
            const auto& fe1 = face_edges[phi.pair_face[i]];
            const auto& fe2 = face_edges[phi.pair_face[j]];
            std::vector<std::pair<int, int>> shared;
            std::set_intersection(fe1.begin(), fe1.end(), fe2.begin(), fe2.end(),
                                  std::back_inserter(shared));
            if (shared.size() != 1) continue;
            if (h.has_edge(a, c) && h.has_edge(b, d)) gamma.insert({std::min(i, j), std::max(i, j)});
        }
    std::set<std::pair<int, int>> underlying;
    for (int i = 0; i < m; ++i)
        for (int j : phi.out_arcs[i]) underlying.insert({std::min(i, j), std::max(i, j)});
    if (underlying != gamma)
        throw certificate_violation(
            "underlying graph of Phi differs from Gamma (undirected edge sets must coincide)");

    // Gamma connectivity
    if (m > 0) {
        std::vector<char> seen(m, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (const auto& [x, y] : gamma) {
                int other = -1;
                if (x == cur) other = y;
                if (y == cur) other = x;
                if (other >= 0 && !seen[other]) {
                    seen[other] = 1;
                    ++count;
                    stack.push_back(other);
                }
            }
        }
        if (count != m)
            throw certificate_violation("Gamma is disconnected (" + std::to_string(count) +
                                        " of " + std::to_string(m) + " pairs reached)");
    }
    return phi;
}

namespace {

PatternGadget nbo_quad_from_path(const Graph& h, const std::vector<std::pair<int, int>>& path,
                                 int a0, int a1, int b0, int b1) {
    const int nh = h.vertex_count();
    const int m = static_cast<int>(path.size());
    if (m < 2)
        throw precondition_error("build_nbo_quad: degenerate path (endpoints coincide)");

    if (path.front() != std::make_pair(a1, a0) || path.back() != std::make_pair(b0, b1))
        throw precondition_error("build_nbo_quad: path endpoints do not match (a1,a0)/(b0,b1)");

    PatternGadget g;
    g.kind = "nbo-quad";
    g.host = h;
    g.rule = MoveRule::Irreflexive;
    g.phi_pairs = path;

    GraphBuilder builder;
    for (int v = 0; v < nh; ++v)
        builder.add_vertex((h.label(v).empty() ? std::to_string(v) : h.label(v)) + "*");
    builder.splice(h, [&] {
        std::map<int, int> pin;
        for (int v = 0; v < nh; ++v) pin[v] = v;
        return pin;
    }());
    std::vector<int> ys(m);
    for (int i = 0; i < m; ++i) ys[i] = builder.add_vertex("y" + std::to_string(i + 1));
    for (int i = 0; i + 1 < m; ++i) builder.add_edge(ys[i], ys[i + 1]);
    for (int i = 0; i < m; ++i) {
        const auto [c, d] = path[i];
        std::vector<int> common = common_neighbours(h, c, d);
        if (common.size() != 2)
            throw certificate_violation("build_nbo_quad: pair " + pair_name(path[i]) + " has " +
                                        std::to_string(common.size()) +
                                        " common neighbours, expected 2");
        builder.add_edge(ys[i], common[0]);
        builder.add_edge(ys[i], common[1]);
    }
    g.graph = builder.build();
    g.signals = {ys.front(), ys.back()};

    Colouring identity(g.graph.vertex_count(), 0);
    for (int v = 0; v < nh; ++v) identity[v] = v;

    auto make_canonical = [&](auto colour_of_y) {
        Colouring col = identity;
        for (int i = 0; i < m; ++i) col[ys[i]] = colour_of_y(i);
        return col;
    };
    const Colouring z_a0b0 =
        make_canonical([&](int i) { return i == 0 ? path[i].second : path[i].first; });
    const Colouring z_a1b0 = make_canonical([&](int i) { return path[i].first; });
    const Colouring z_a0b1 = make_canonical([&](int i) { return path[i].second; });

    g.patterns = {{a0, b0}, {a1, b0}, {a0, b1}};
    std::sort(g.patterns.begin(), g.patterns.end());
    g.canonical[{a0, b0}] = z_a0b0;
    g.canonical[{a1, b0}] = z_a1b0;
    g.canonical[{a0, b1}] = z_a0b1;

    for (const auto& p : g.patterns) {
        const auto& col = g.canonical.at(p);
        if (!is_homomorphism(g.graph, g.host, col) || g.signal_values(col) != p)
            throw certificate_violation("build_nbo_quad: canonical colouring for (" +
                                        std::to_string(p[0]) + "," + std::to_string(p[1]) +
                                        ") defective");
    }
    g.provenance = "path " + pair_name(path.front()) + " -> " + pair_name(path.back()) + ", " +
                   std::to_string(m) + " pairs";
    return g;
}

} // namespace

PatternGadget build_nbo_quad(const Graph& h, const Embedding& e, int a0, int a1, int b0,
                             int b1) {
    const PhiDigraph phi = build_phi_quad(h, e);
    if (!phi.has_pair({a1, a0}))
        throw precondition_error("build_nbo_quad: a0 is not across from a1");
    if (!phi.has_pair({b0, b1}))
        throw precondition_error("build_nbo_quad: b0 is not across from b1");
    return nbo_quad_from_path(h, phi_path(phi, {a1, a0}, {b0, b1}), a0, a1, b0, b1);
}

PatternGadget build_naz_quad(const Graph& h, const Embedding& e, const Anchor& anchor) {
    const PhiDigraph phi = build_phi_quad(h, e);
    const int v0 = anchor.zero;
    const int r1 = anchor.ring[0], r2 = anchor.ring[1], r3 = anchor.ring[2];
    const int a12 = anchor.alphas[0], a23 = anchor.alphas[1], a31 = anchor.alphas[2];

    // W1, W3: {(1,2),(0,2),(1,0)}; W2, W4: {(1,3),(0,3),(1,0)}; Y: {(1,0),(0,1),(1,1)}
    const PatternGadget w_r2 =
        nbo_quad_from_path(h, phi_path(phi, {v0, r1}, {r2, v0}), r1, v0, r2, v0);
    const PatternGadget w_r3 =
        nbo_quad_from_path(h, phi_path(phi, {v0, r1}, {r3, v0}), r1, v0, r3, v0);
    const PatternGadget y_gadget =
        nbo_quad_from_path(h, phi_path(phi, {v0, r1}, {r1, v0}), r1, v0, r1, v0);

    // y_gadget patterns are {(1,1),(0,1),(1,0)}: a0=1, a1=0, b0=1, b1=0
    const int nh = h.vertex_count();
    GraphBuilder builder;
    for (int v = 0; v < nh; ++v)
        builder.add_vertex((h.label(v).empty() ? std::to_string(v) : h.label(v)) + "*");
    builder.splice(h, [&] {
        std::map<int, int> pin;
        for (int v = 0; v < nh; ++v) pin[v] = v;
        return pin;
    }());

    const PatternGadget* w_templates[4] = {&w_r2, &w_r3, &w_r2, &w_r3};
    std::vector<std::vector<int>> wmap(4);
    int z[4], wsig[4];
    for (int i = 0; i < 4; ++i) {
        wmap[i] = builder.splice(w_templates[i]->graph, {});
        z[i] = wmap[i][w_templates[i]->signals[0]];
        wsig[i] = wmap[i][w_templates[i]->signals[1]];
    }
    const int x12 = builder.add_vertex("x_12");
    const int y12 = builder.add_vertex("y_12");
    const int x34 = builder.add_vertex("x_34");
    const int y34 = builder.add_vertex("y_34");
    builder.add_edge(x12, wsig[0]);
    builder.add_edge(x12, wsig[1]);
    builder.add_edge(x12, v0);
    builder.add_edge(x12, y12);
    builder.add_edge(y12, a12);
    builder.add_edge(y12, a31);
    builder.add_edge(x34, wsig[2]);
    builder.add_edge(x34, wsig[3]);
    builder.add_edge(x34, v0);
    builder.add_edge(x34, y34);
    builder.add_edge(y34, a12);
    builder.add_edge(y34, a31);
    std::vector<int> ymap =
        builder.splice(y_gadget.graph, {{y_gadget.signals[0], y12}, {y_gadget.signals[1], y34}});

    PatternGadget g;
    g.kind = "naz-quad";
    g.host = h;
    g.rule = MoveRule::Irreflexive;
    g.graph = builder.build();
    g.signals = {z[0], z[1], z[2], z[3]};
    g.provenance = "anchor zero=" + std::to_string(v0) + " ring=(" + std::to_string(r1) + "," +
                   std::to_string(r2) + "," + std::to_string(r3) + ")";

    auto apply_template = [&](Colouring& col, const PatternGadget& tmpl,
                              const std::vector<int>& map, const std::vector<int>& pattern) {
        const Colouring& src = tmpl.canonical.at(pattern);
        for (int v = 0; v < tmpl.graph.vertex_count(); ++v) col[map[v]] = src[v];
    };

    for (int bits = 1; bits < 16; ++bits) {
        std::vector<int> p(4);
        for (int i = 0; i < 4; ++i) p[i] = (bits >> i & 1) ? r1 : v0;
        Colouring col(g.graph.vertex_count(), -1);
        for (int v = 0; v < nh; ++v) col[v] = v;
        const int second_ring[4] = {r2, r3, r2, r3};
        for (int i = 0; i < 4; ++i) {
            const bool on = (bits >> i & 1) != 0;
            apply_template(col, *w_templates[i], wmap[i],
                           on ? std::vector<int>{r1, v0}
                              : std::vector<int>{v0, second_ring[i]});
        }
        const bool p1 = (bits >> 0 & 1) != 0, p2 = (bits >> 1 & 1) != 0;
        const bool p3 = (bits >> 2 & 1) != 0, p4 = (bits >> 3 & 1) != 0;
        col[x12] = p2 ? a12 : (p1 ? a31 : a23);
        col[y12] = (p1 || p2) ? r1 : v0;
        col[x34] = p4 ? a12 : (p3 ? a31 : a23);
        col[y34] = (p3 || p4) ? r1 : v0;
        apply_template(col, y_gadget, ymap, {col[y12], col[y34]});

        if (!is_homomorphism(g.graph, g.host, col))
            throw certificate_violation("build_naz_quad: canonical colouring for pattern bits " +
                                        std::to_string(bits) + " is not a homomorphism");
        g.patterns.push_back(p);
        g.canonical[p] = std::move(col);
    }
    std::sort(g.patterns.begin(), g.patterns.end());
    for (const auto& p : g.patterns)
        if (g.signal_values(g.canonical.at(p)) != p)
            throw certificate_violation("build_naz_quad: canonical signals defective");
    return g;
}

} // namespace reconforge
