#include "reconforge/gadget_reflexive.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "reconforge/errors.hpp"

namespace reconforge {

namespace {

std::string set_name(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string pair_name(std::pair<int, int> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::uint64_t nbhd_bits(const Graph& h, int v) {
    std::uint64_t bits = 0;
    for (int w : h.neighbours(v)) bits |= std::uint64_t{1} << w;
    return bits;
}

} // namespace

int LocalTriangulationCertificate::labelled(int j) const {
    if (j == 0) return zero;
    const int k = ring_size();
    return ring[((j - 1) % k + k) % k];
}

const std::vector<int>& LocalTriangulationCertificate::attachment(
    const std::vector<int>& s) const {
    auto it = listable.find(s);
    if (it == listable.end())
        throw precondition_error("certificate has no listable attachment for " + set_name(s));
    return it->second;
}

std::optional<std::vector<int>> find_listable_attachment(const Graph& h,
                                                         const std::vector<int>& s) {
    if (h.vertex_count() > 64)
        throw precondition_error("find_listable_attachment: host too large");
    std::uint64_t target = 0;
    for (int v : s) target |= std::uint64_t{1} << v;

    std::vector<int> candidates;
    for (int t = 0; t < h.vertex_count(); ++t) {
        bool ok = true;
        for (int v : s)
            if (!h.has_edge(t, v)) {
                ok = false;
                break;
            }
        if (ok) candidates.push_back(t);
    }
    std::uint64_t common = h.vertex_count() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << h.vertex_count()) - 1;
    std::vector<int> attachment;
    while (common != target) {
        int best = -1;
        int best_count = 65;
        for (int t : candidates) {
            const std::uint64_t next = common & nbhd_bits(h, t);
            if ((next & target) != target) continue;
            const int cnt = std::popcount(next);
            if (next != common && cnt < best_count) {
                best = t;
                best_count = cnt;
            }
        }
        if (best == -1) return std::nullopt;
        attachment.push_back(best);
        common &= nbhd_bits(h, best);
    }
    std::sort(attachment.begin(), attachment.end());
    return attachment;
}

PatternGadget build_listable_set_gadget(const Graph& h, const std::vector<int>& s,
                                        const std::vector<int>& attachment) {
    if (!h.is_reflexive())
        throw precondition_error("build_listable_set_gadget: host must be reflexive");
    if (non_stiff_witness(h))
        throw precondition_error("build_listable_set_gadget: host must be stiff");
    std::uint64_t target = 0;
    for (int v : s) target |= std::uint64_t{1} << v;
    std::uint64_t common = h.vertex_count() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << h.vertex_count()) - 1;
    for (int t : attachment) common &= nbhd_bits(h, t);
    if (common != target)
        throw certificate_violation("listable gadget for " + set_name(s) +
                                    ": attachment common neighbourhood is not exactly S");

    const int nh = h.vertex_count();
    GraphBuilder builder;
    for (int v = 0; v < nh; ++v)
        builder.add_vertex((h.label(v).empty() ? std::to_string(v) : h.label(v)) + "*");
    builder.splice(h, [&] {
        std::map<int, int> pin;
        for (int v = 0; v < nh; ++v) pin[v] = v;
        return pin;
    }());
    const int signal = builder.add_vertex("x1");
    builder.add_edge(signal, signal);
    for (int t : attachment) builder.add_edge(signal, t);

    PatternGadget g;
    g.kind = "listable";
    g.host = h;
    g.rule = MoveRule::Reflexive;
    g.graph = builder.build();
    g.signals = {signal};
    for (int v : s) g.patterns.push_back({v});
    std::sort(g.patterns.begin(), g.patterns.end());
    for (int v : s) {
        Colouring col(g.graph.vertex_count());
        for (int w = 0; w < nh; ++w) col[w] = w;
        col[signal] = v;
        if (!is_homomorphism(g.graph, g.host, col))
            throw certificate_violation("listable gadget for " + set_name(s) +
                                        ": canonical colouring defective at " +
                                        std::to_string(v));
        g.canonical[{v}] = std::move(col);
    }
    g.provenance = "S=" + set_name(s) + " T=" + set_name(attachment);
    return g;
}

PatternGadget build_listable_edge_gadget(const Graph& h, const Embedding& e, int u, int v) {
    if (!h.has_edge(u, v) || u == v)
        throw precondition_error("build_listable_edge_gadget: uv must be a non-loop edge");
    const FaceList faces = trace_faces(h, e);
    std::vector<int> companions;
    for (const auto& walk : faces.faces) {
        if (walk.size() != 3) continue;
        bool hasU = false, hasV = false;
        int other = -1;
        for (int x : walk) {
            hasU |= x == u;
            hasV |= x == v;
            if (x != u && x != v) other = x;
        }
        if (hasU && hasV && other != -1) companions.push_back(other);
    }
    std::sort(companions.begin(), companions.end());
    companions.erase(std::unique(companions.begin(), companions.end()), companions.end());
    if (companions.size() != 2)
        throw certificate_violation("build_listable_edge_gadget: edge (" + std::to_string(u) +
                                    "," + std::to_string(v) + ") lies on " +
                                    std::to_string(companions.size()) +
                                    " triangular faces, expected 2");
    std::vector<int> attachment = {u, v, companions[0], companions[1]};
    std::sort(attachment.begin(), attachment.end());
    return build_listable_set_gadget(h, {std::min(u, v), std::max(u, v)}, attachment);
}

namespace {

// Deterministic Hamiltonian-cycle search in the subgraph of `h` induced by
// `verts`, starting at `start`; when `forced_second` >= 0 the cycle must
// begin start,forced_second. Canonical direction: second vertex smaller than
// the last one (unless forced).
std::optional<std::vector<int>> spanning_cycle(const Graph& h, const std::vector<int>& verts,
                                               int start, int forced_second = -1) {
    const int n = static_cast<int>(verts.size());
    if (n < 3) return std::nullopt;
    std::set<int> inside(verts.begin(), verts.end());
    if (!inside.count(start)) return std::nullopt;

    std::vector<int> cycle{start};
    std::set<int> used{start};
    auto dfs = [&](auto&& self, int cur) -> bool {
        if (static_cast<int>(cycle.size()) == n)
            return h.has_edge(cur, start);
        for (int nxt : h.neighbours(cur)) {
            if (nxt == cur || !inside.count(nxt) || used.count(nxt)) continue;
            if (static_cast<int>(cycle.size()) == 1 && forced_second >= 0 && nxt != forced_second)
                continue;
            cycle.push_back(nxt);
            used.insert(nxt);
            if (self(self, nxt)) return true;
            cycle.pop_back();
            used.erase(nxt);
        }
        return false;
    };
    if (!dfs(dfs, start)) return std::nullopt;
    if (forced_second < 0 && n >= 3 && cycle[1] > cycle[n - 1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

std::vector<int> sorted_pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

} // namespace

LocalTriangulationCertificate validate_locally_triangulated(const Graph& h, int zero,
                                                            const std::vector<int>& f_vertices) {
    if (!h.is_reflexive())
        throw precondition_error("validate_locally_triangulated: host must be reflexive");
    if (auto w = non_stiff_witness(h))
        throw precondition_error("validate_locally_triangulated: host is not stiff (N(" +
                                 std::to_string(w->first) + ") inside N(" +
                                 std::to_string(w->second) + "))");

    LocalTriangulationCertificate cert;
    cert.host = h;
    cert.zero = zero;
    cert.f_vertices = f_vertices;
    std::sort(cert.f_vertices.begin(), cert.f_vertices.end());
    cert.f_vertices.erase(std::unique(cert.f_vertices.begin(), cert.f_vertices.end()),
                          cert.f_vertices.end());
    for (int v : cert.f_vertices) h.check_vertex(v, "validate_locally_triangulated");
    std::set<int> fset(cert.f_vertices.begin(), cert.f_vertices.end());

    // (a)
    if (!fset.count(zero))
        throw certificate_violation("condition (a): vertex 0 is not in V(F)");
    // (b)
    if (!subgraph_free(induced_subgraph(h, cert.f_vertices), ForbiddenSubgraph::K4))
        throw certificate_violation("condition (b): H[V(F)] contains K4");
    // (c) ring = spanning cycle of N_F(0), starting at its smallest vertex
    std::vector<int> nbrs0;
    for (int w : h.neighbours(zero))
        if (w != zero && fset.count(w)) nbrs0.push_back(w);
    if (nbrs0.empty()) throw certificate_violation("condition (c): 0 has no F-neighbours");
    auto ring = spanning_cycle(h, nbrs0, *std::min_element(nbrs0.begin(), nbrs0.end()));
    if (!ring)
        throw certificate_violation(
            "condition (c): neighbourhood of 0 in F has no spanning cycle");
    cert.ring = *ring;
    const int k = cert.ring_size();

    // (d)+(e): beta over each ring edge, with its own spanning link cycle.
    // The beta over edge (1,2) prefers a link cycle through that edge, which
    // the explicit path constructions rely on.
    for (int i = 0; i < k; ++i) {
        const int a = cert.ring[i];
        const int b = cert.ring[(i + 1) % k];
        std::vector<int> candidates;
        for (int w : h.neighbours(a))
            if (w != zero && w != a && w != b && fset.count(w) && h.has_edge(b, w))
                candidates.push_back(w);
        std::sort(candidates.begin(), candidates.end());
        int chosen = -1;
        std::vector<int> chosen_cycle;
        for (int beta : candidates) {
            std::vector<int> link;
            for (int w : h.neighbours(beta))
                if (w != beta && fset.count(w)) link.push_back(w);
            std::optional<std::vector<int>> cyc;
            if (i == 0) cyc = spanning_cycle(h, link, a, b);
            if (!cyc) cyc = spanning_cycle(h, link, *std::min_element(link.begin(), link.end()));
            if (cyc) {
                chosen = beta;
                chosen_cycle = *cyc;
                break;
            }
        }
        if (chosen == -1) {
            if (candidates.empty())
                throw certificate_violation("condition (d): ring vertices " + std::to_string(a) +
                                            "," + std::to_string(b) +
                                            " have no common F-neighbour besides 0");
            throw certificate_violation(
                "condition (e): no beta over ring edge (" + std::to_string(a) + "," +
                std::to_string(b) + ") has a spanning cycle in its F-neighbourhood");
        }
        cert.betas.push_back(chosen);
        cert.beta_cycles.push_back(chosen_cycle);
    }

    // (f) every F-edge pair listable, with the gadget built and certified
    auto certify = [&](const std::vector<int>& s, char condition) {
        auto t = find_listable_attachment(h, s);
        if (t) {
            const PatternGadget gadget = build_listable_set_gadget(h, s, *t);
            const GadgetVerification v = verify_pattern_gadget(gadget);
            if (v.ok()) {
                cert.listable[s] = *t;
                return;
            }
        }
        throw certificate_violation(std::string("condition (") + condition + "): set " +
                                    set_name(s) + " is not listable");
    };
    const Graph f_graph = induced_subgraph(h, cert.f_vertices);
    for (int ui = 0; ui < f_graph.vertex_count(); ++ui)
        for (int vi : f_graph.neighbours(ui)) {
            if (vi <= ui) continue;
            certify(sorted_pair(cert.f_vertices[ui], cert.f_vertices[vi]), 'f');
        }
    // (g) the two ring triples
    for (auto triple : {std::vector<int>{cert.zero, cert.labelled(2), cert.labelled(3)},
                        std::vector<int>{cert.zero, cert.labelled(3), cert.labelled(4)}}) {
        std::sort(triple.begin(), triple.end());
        certify(triple, 'g');
    }
    return cert;
}

PhiDigraph build_phi_reflexive(const Graph& h, const LocalTriangulationCertificate& cert) {
    PhiDigraph phi;
    for (const auto& [s, t] : cert.listable) {
        if (s.size() != 2) continue;
        for (auto p : {std::make_pair(s[0], s[1]), std::make_pair(s[1], s[0])}) {
            phi.index[p] = static_cast<int>(phi.pairs.size());
            phi.pairs.push_back(p);
            phi.pair_face.push_back(-1);
        }
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
        for (int j : phi.out_arcs[i]) {
            const auto rev_from = std::make_pair(phi.pairs[j].second, phi.pairs[j].first);
            const auto rev_to = std::make_pair(phi.pairs[i].second, phi.pairs[i].first);
            if (!phi.has_arc(rev_from, rev_to))
                throw certificate_violation("reflexive Phi reversal symmetry failed at arc " +
                                            pair_name(phi.pairs[i]) + " -> " +
                                            pair_name(phi.pairs[j]));
        }
    return phi;
}

namespace {

// Rotates a cyclic sequence to start at `start`; optionally forces the
// second element, reversing direction when needed.
std::vector<int> rotate_cycle(const std::vector<int>& cycle, int start, int second = -1) {
    const int n = static_cast<int>(cycle.size());
    auto it = std::find(cycle.begin(), cycle.end(), start);
    if (it == cycle.end())
        throw certificate_violation("path construction: vertex " + std::to_string(start) +
                                    " is missing from a link cycle");
    const int at = static_cast<int>(it - cycle.begin());
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = cycle[(at + i) % n];
    if (second >= 0 && out[1] != second) {
        std::reverse(out.begin() + 1, out.end());
        if (out[1] != second)
            throw certificate_violation("path construction: vertices " + std::to_string(start) +
                                        "," + std::to_string(second) +
                                        " are not consecutive on a link cycle");
    }
    return out;
}

void check_walk_arcs(const Graph& h, const std::vector<std::pair<int, int>>& walk) {
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        const auto [a, b] = walk[i];
        const auto [c, d] = walk[i + 1];
        if (!phi_arc(h, walk[i], walk[i + 1])) {
            std::string why;
            if (!h.has_edge(a, c)) why = "requires edge " + std::to_string(a) + "~" + std::to_string(c);
            else if (!h.has_edge(b, c)) why = "requires edge " + std::to_string(b) + "~" + std::to_string(c);
            else if (!h.has_edge(b, d)) why = "requires edge " + std::to_string(b) + "~" + std::to_string(d);
            else why = "requires non-adjacency " + std::to_string(a) + "!~" + std::to_string(d);
            throw certificate_violation("reflexive path: missing arc " + pair_name(walk[i]) +
                                        " -> " + pair_name(walk[i + 1]) + " (" + why + ")");
        }
    }
}

} // namespace

std::vector<std::pair<int, int>> reflexive_paths(const LocalTriangulationCertificate& cert,
                                                 ReflexivePathKind kind, int i) {
    const Graph& h = cert.host;
    const int k = cert.ring_size();
    auto L = [&](int j) { return cert.labelled(j); };
    std::vector<std::pair<int, int>> walk;

    if (kind == ReflexivePathKind::Loop01) {
        // (1,0)(2,3)(3,4)...(k-1,k)(0,1)
        walk.emplace_back(L(1), cert.zero);
        for (int j = 2; j < k; ++j) walk.emplace_back(L(j), L(j + 1));
        walk.emplace_back(cert.zero, L(1));
        check_walk_arcs(h, walk);
        return walk;
    }

    if (i < 1 || i > k)
        throw precondition_error("reflexive_paths: i must lie in 1..k");
    const int s_label = kind == ReflexivePathKind::ToBetaI ? i : i + 1;
    const int s = L(s_label);
    const int beta = cert.betas[i - 1];
    const std::vector<int>& link_raw = cert.beta_cycles[i - 1];

    if (kind == ReflexivePathKind::ToBetaI && i == 1) {
        // (0,1)(1,b1) then around the link of b1 back to (b1,1)
        const std::vector<int> link = rotate_cycle(link_raw, L(1));
        const int t = static_cast<int>(link.size());
        walk.emplace_back(cert.zero, L(1));
        walk.emplace_back(L(1), beta);
        for (int j = 1; j + 1 < t; ++j) walk.emplace_back(link[j], link[j + 1]);
        walk.emplace_back(beta, L(1));
        check_walk_arcs(h, walk);
        return walk;
    }

    // Turnaround through beta_1's link: (0,1)(2,b1)(x3,x4)...(xt,x1)(b1,2)(1,0)
    const int beta1 = cert.betas[0];
    const std::vector<int> link1 = rotate_cycle(cert.beta_cycles[0], L(1), L(2));
    const int t1 = static_cast<int>(link1.size());
    walk.emplace_back(cert.zero, L(1));
    walk.emplace_back(L(2), beta1);
    for (int j = 2; j < t1; ++j) walk.emplace_back(link1[j], link1[(j + 1) % t1]);
    walk.emplace_back(beta1, L(2));
    walk.emplace_back(L(1), cert.zero);

    // Ring slides (2,3)(3,4)... up to (s-2, s-1), wrapping as needed
    const int stop = ((s_label - 2 - 2) % k + k) % k; // slides after (2,3)
    for (int step = 0; step <= stop; ++step) walk.emplace_back(L(2 + step), L(3 + step));
    walk.emplace_back(cert.zero, s);
    walk.emplace_back(s, beta);

    // Around the link of beta_i from s
    const std::vector<int> link = rotate_cycle(link_raw, s);
    const int t = static_cast<int>(link.size());
    for (int j = 1; j + 1 < t; ++j) walk.emplace_back(link[j], link[j + 1]);
    walk.emplace_back(beta, s);
    check_walk_arcs(h, walk);
    return walk;
}

PatternGadget build_nbo_reflexive(const LocalTriangulationCertificate& cert,
                                  const std::vector<std::pair<int, int>>& path) {
    const Graph& h = cert.host;
    const int m = static_cast<int>(path.size());
    if (m < 2) throw precondition_error("build_nbo_reflexive: degenerate path");
    check_walk_arcs(h, path);
    const int a1 = path.front().first, a0 = path.front().second;
    const int b0 = path.back().first, b1 = path.back().second;

    GraphBuilder builder;
    std::vector<int> ys(m);
    for (int i = 0; i < m; ++i) {
        ys[i] = builder.add_vertex("y" + std::to_string(i + 1));
        builder.add_edge(ys[i], ys[i]);
    }
    for (int i = 0; i + 1 < m; ++i) builder.add_edge(ys[i], ys[i + 1]);

    const int nh = h.vertex_count();
    std::vector<std::vector<int>> copy_map(m);
    for (int i = 0; i < m; ++i) {
        copy_map[i] = builder.splice(h, {});
        const auto& t = cert.attachment(sorted_pair(path[i].first, path[i].second));
        for (int w : t) builder.add_edge(ys[i], copy_map[i][w]);
    }

    PatternGadget g;
    g.kind = "nbo-reflexive";
    g.host = h;
    g.rule = MoveRule::Reflexive;
    g.graph = builder.build();
    g.signals = {ys.front(), ys.back()};
    g.phi_pairs = path;
    g.provenance = "path " + pair_name(path.front()) + " -> " + pair_name(path.back()) + ", " +
                   std::to_string(m) + " pairs";

    auto make_canonical = [&](auto colour_of_y) {
        Colouring col(g.graph.vertex_count(), -1);
        for (int i = 0; i < m; ++i) {
            col[ys[i]] = colour_of_y(i);
            for (int v = 0; v < nh; ++v) col[copy_map[i][v]] = v;
        }
        return col;
    };
    g.patterns = {{a0, b0}, {a1, b0}, {a0, b1}};
    std::sort(g.patterns.begin(), g.patterns.end());
    g.canonical[{a0, b0}] =
        make_canonical([&](int i) { return i == 0 ? path[i].second : path[i].first; });
    g.canonical[{a1, b0}] = make_canonical([&](int i) { return path[i].first; });
    g.canonical[{a0, b1}] = make_canonical([&](int i) { return path[i].second; });
    for (const auto& p : g.patterns) {
        const auto& col = g.canonical.at(p);
        if (!is_homomorphism(g.graph, g.host, col) || g.signal_values(col) != p)
            throw certificate_violation("build_nbo_reflexive: canonical colouring for (" +
                                        std::to_string(p[0]) + "," + std::to_string(p[1]) +
                                        ") defective");
    }
    return g;
}

PatternGadget build_naz_reflexive(const LocalTriangulationCertificate& cert) {
    const Graph& h = cert.host;
    const int k = cert.ring_size();
    if (k < 4)
        throw precondition_error("build_naz_reflexive: ring must have at least 4 vertices");
    const int v0 = cert.zero;
    const int v1 = cert.labelled(1);
    const int s4 = cert.labelled(5); // = vertex 1 when k = 4

    // W_i from the explicit walks (0,1) -> (beta_i, i), i = 1..3, and
    // (0,1) -> (beta_4, 5).
    std::vector<PatternGadget> w;
    for (int i = 1; i <= 3; ++i)
        w.push_back(build_nbo_reflexive(cert, reflexive_paths(cert, ReflexivePathKind::ToBetaI, i)));
    w.push_back(
        build_nbo_reflexive(cert, reflexive_paths(cert, ReflexivePathKind::ToBetaIPlus1, 4)));

    // Unary list gadgets for the chain vertices.
    auto sorted_set = [](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    };
    const std::vector<std::vector<int>> lists = {
        sorted_set({v0, v1}),
        sorted_set({v0, cert.labelled(2), cert.labelled(3)}),
        sorted_set({v0, cert.labelled(3), cert.labelled(4)}),
        sorted_set({v0, s4})};
    std::vector<PatternGadget> unary;
    for (const auto& s : lists) {
        auto it = cert.listable.find(s);
        std::vector<int> t;
        if (it != cert.listable.end()) t = it->second;
        else {
            auto found = find_listable_attachment(h, s);
            if (!found)
                throw certificate_violation("build_naz_reflexive: list " + set_name(s) +
                                            " is not listable");
            t = *found;
        }
        unary.push_back(build_listable_set_gadget(h, s, t));
    }

    GraphBuilder builder;
    std::vector<std::vector<int>> wmap(4), umap(4);
    int z[4], wsig[4], y[4];
    for (int i = 0; i < 4; ++i) {
        wmap[i] = builder.splice(w[i].graph, {});
        z[i] = wmap[i][w[i].signals[0]];
        wsig[i] = wmap[i][w[i].signals[1]];
    }
    for (int i = 0; i < 4; ++i) {
        umap[i] = builder.splice(unary[i].graph, {});
        y[i] = umap[i][unary[i].signals[0]];
    }
    for (int i = 0; i < 4; ++i) builder.add_edge(y[i], wsig[i]);
    builder.add_edge(y[0], y[1]);
    builder.add_edge(y[1], y[2]);
    builder.add_edge(y[2], y[3]);

    PatternGadget g;
    g.kind = "naz-reflexive";
    g.host = h;
    g.rule = MoveRule::Reflexive;
    g.graph = builder.build();
    g.signals = {z[0], z[1], z[2], z[3]};
    g.provenance = "zero=" + std::to_string(v0) + " ring size " + std::to_string(k);

    // label order for the smallest/largest non-zero rule
    auto label_of = [&](int vertex) {
        if (vertex == v0) return 0;
        for (int j = 1; j <= k; ++j)
            if (cert.labelled(j) == vertex) return j;
        throw certificate_violation("build_naz_reflexive: list vertex outside the ring");
    };

    auto apply_template = [&](Colouring& col, const PatternGadget& tmpl,
                              const std::vector<int>& map, const std::vector<int>& pattern) {
        const Colouring& src = tmpl.canonical.at(pattern);
        for (int v = 0; v < tmpl.graph.vertex_count(); ++v) col[map[v]] = src[v];
    };

    for (int bits = 1; bits < 16; ++bits) {
        std::vector<int> p(4);
        for (int i = 0; i < 4; ++i) p[i] = (bits >> i & 1) ? v1 : v0;
        Colouring col(g.graph.vertex_count(), -1);
        for (int i = 0; i < 4; ++i) {
            const bool on = (bits >> i & 1) != 0;
            const int wi_on_second = i < 3 ? cert.labelled(i + 1) : s4;
            apply_template(col, w[i], wmap[i],
                           on ? std::vector<int>{v1, wi_on_second}
                              : std::vector<int>{v0, cert.betas[i]});
        }
        for (int i = 0; i < 4; ++i) {
            const bool on = (bits >> i & 1) != 0;
            int y_colour;
            if (on) {
                y_colour = v0;
            } else {
                bool later_on = false;
                for (int j = i + 1; j < 4; ++j) later_on |= (bits >> j & 1) != 0;
                // smallest (resp. largest) non-zero label in the list
                int best = -1;
                for (int cand : lists[i]) {
                    if (cand == v0) continue;
                    if (best == -1 || (later_on ? label_of(cand) < label_of(best)
                                               : label_of(cand) > label_of(best)))
                        best = cand;
                }
                y_colour = best;
            }
            apply_template(col, unary[i], umap[i], {y_colour});
        }
        if (!is_homomorphism(g.graph, g.host, col))
            throw certificate_violation(
                "build_naz_reflexive: canonical colouring for pattern bits " +
                std::to_string(bits) + " is not a homomorphism");
        g.patterns.push_back(p);
        g.canonical[p] = std::move(col);
    }
    std::sort(g.patterns.begin(), g.patterns.end());
    for (const auto& p : g.patterns)
        if (g.signal_values(g.canonical.at(p)) != p)
            throw certificate_violation("build_naz_reflexive: canonical signals defective");
    return g;
}

} // namespace reconforge
