#include "reconforge/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "reconforge/errors.hpp"

namespace reconforge {

bool subgraph_free(const Graph& h, ForbiddenSubgraph pattern) {
    const int n = h.vertex_count();
    if (pattern == ForbiddenSubgraph::K23) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int common = 0;
                for (int w : h.neighbours(u)) {
                    if (w == u || w == v) continue;
                    if (h.has_edge(v, w)) ++common;
                }
                if (common >= 3) return false;
            }
        return true;
    }
    // K4: an edge plus two adjacent common neighbours
    for (int u = 0; u < n; ++u)
        for (int v : h.neighbours(u)) {
            if (v <= u) continue;
            std::vector<int> common;
            for (int w : h.neighbours(u))
                if (w != u && w != v && h.has_edge(v, w)) common.push_back(w);
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (h.has_edge(common[i], common[j])) return false;
        }
    return true;
}

bool ValidationReport::all_passed() const {
    for (const auto& [name, ok] : checks)
        if (!ok) return false;
    return true;
}

bool ValidationReport::flag(const std::string& name) const {
    for (const auto& [n, ok] : checks)
        if (n == name) return ok;
    throw malformed_input_error("validation report has no check named '" + name + "'");
}

namespace {

Graph cycle_of(int k) {
    Graph c(k);
    for (int i = 0; i < k; ++i) c.add_edge(i, (i + 1) % k);
    return c;
}

int min_degree(const Graph& g) {
    int d = g.vertex_count() == 0 ? 0 : g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
    return d;
}

// Shared skeleton: connectivity/reflexivity checks, then face tracing with
// failures reported rather than thrown.
std::optional<FaceList> traced_or_report(const Graph& h, const Embedding& e,
                                         ValidationReport& rep) {
    try {
        FaceList f = trace_faces(h, e);
        rep.add("embedding-consistent", true);
        return f;
    } catch (const malformed_input_error& err) {
        rep.add("embedding-consistent", false);
        rep.notes.push_back(err.what());
        return std::nullopt;
    }
}

} // namespace

ValidationReport validate_sphere_quadrangulation(const Graph& h, const Embedding& e) {
    ValidationReport rep;
    rep.add("connected", is_connected(h));
    rep.add("irreflexive", h.is_irreflexive());
    auto faces = traced_or_report(h, e, rep);
    rep.add("euler-characteristic-2", faces && faces->euler_characteristic == 2);
    rep.add("faces-length-4", faces && faces->all_faces_of_length(4));
    rep.add("K23-free", subgraph_free(h, ForbiddenSubgraph::K23));
    rep.add("not-C4", !is_isomorphic(h, cycle_of(4)));
    if (rep.all_passed()) {
        const int d = min_degree(h);
        rep.add("min-degree-3", d >= 3);
        rep.notes.push_back("minimum degree " + std::to_string(d));
    }
    return rep;
}

ValidationReport validate_pp_quadrangulation(const Graph& h, const Embedding& e) {
    ValidationReport rep;
    rep.add("connected", is_connected(h));
    rep.add("irreflexive", h.is_irreflexive());
    auto faces = traced_or_report(h, e, rep);
    rep.add("euler-characteristic-1", faces && faces->euler_characteristic == 1);
    rep.add("faces-length-4", faces && faces->all_faces_of_length(4));
    rep.add("non-bipartite", !bipartition(h).has_value());
    rep.add("K23-free", subgraph_free(h, ForbiddenSubgraph::K23));
    return rep;
}

ValidationReport validate_reflexive_triangulation(const Graph& h, const Embedding& e) {
    ValidationReport rep;
    rep.add("all-reflexive", h.is_reflexive());
    rep.add("connected", is_connected(h));
    auto faces = traced_or_report(h, e, rep);
    rep.add("euler-characteristic-2", faces && faces->euler_characteristic == 2);
    rep.add("faces-length-3", faces && faces->all_faces_of_length(3));
    rep.add("K4-free", subgraph_free(h, ForbiddenSubgraph::K4));
    const bool is_reflexive_triangle =
        h.vertex_count() == 3 && h.edge_count() == 3 && h.loop_count() == 3;
    rep.add("not-reflexive-triangle", !is_reflexive_triangle);
    return rep;
}

std::vector<AcrossPair> across_pairs(const Graph& h, const Embedding& e) {
    return across_pairs(h, trace_faces(h, e));
}

std::vector<AcrossPair> across_pairs(const Graph& h, const FaceList& faces) {
    const bool k23free = subgraph_free(h, ForbiddenSubgraph::K23);
    std::map<std::pair<int, int>, int> seen; // (a,b) -> face
    auto face_key = [&](int f) {
        std::vector<int> k = faces.faces[f];
        std::sort(k.begin(), k.end());
        return k;
    };
    for (int f = 0; f < faces.face_count(); ++f) {
        const auto& walk = faces.faces[f];
        if (walk.size() != 4)
            throw precondition_error("across_pairs: face " + std::to_string(f) +
                                     " has length " + std::to_string(walk.size()) +
                                     ", expected a quadrangulation");
        const std::array<std::pair<int, int>, 4> cand{{{walk[0], walk[2]},
                                                       {walk[2], walk[0]},
                                                       {walk[1], walk[3]},
                                                       {walk[3], walk[1]}}};
        for (auto [a, b] : cand) {
            if (a == b || h.has_edge(a, b)) continue;
            auto [it, inserted] = seen.emplace(std::make_pair(a, b), f);
            if (!inserted && k23free && face_key(it->second) != face_key(f))
                throw certificate_violation(
                    "across pair (" + std::to_string(a) + "," + std::to_string(b) +
                    ") is incident to two distinct faces despite K23-freeness");
        }
    }
    std::vector<AcrossPair> out;
    out.reserve(seen.size());
    for (const auto& [pair, f] : seen) out.push_back({pair.first, pair.second, f});
    return out;
}

Anchor find_anchor(const Graph& h, const Embedding& e) {
    ValidationReport rep = validate_sphere_quadrangulation(h, e);
    if (!rep.all_passed()) {
        std::string msg = "find_anchor: input is not a validated sphere quadrangulation (";
        for (const auto& [name, ok] : rep.checks)
            if (!ok) msg += name + " ";
        throw precondition_error(msg + "failed)");
    }
    int zero = -1;
    for (int v = 0; v < h.vertex_count(); ++v)
        if (h.degree(v) == 3) {
            zero = v;
            break;
        }
    if (zero == -1)
        throw precondition_error("find_anchor: no degree-3 vertex (impossible on a validated "
                                 "sphere quadrangulation)");

    const FaceList faces = trace_faces(h, e);
    const auto& spokes = e.rotations[zero]; // three neighbours in rotation order

    Anchor a;
    a.zero = zero;
    for (int i = 0; i < 3; ++i) {
        const int s = spokes[i];
        const int t = spokes[(i + 1) % 3];
        int face = -1, ring = -1;
        for (int f = 0; f < faces.face_count() && face == -1; ++f) {
            const auto& w = faces.faces[f];
            bool has0 = false, hasS = false, hasT = false;
            for (int x : w) {
                has0 |= x == zero;
                hasS |= x == s;
                hasT |= x == t;
            }
            if (has0 && hasS && hasT) {
                face = f;
                for (int x : w)
                    if (x != zero && x != s && x != t) ring = x;
            }
        }
        if (face == -1 || ring == -1)
            throw certificate_violation("find_anchor: no face spans spokes " + std::to_string(s) +
                                        "," + std::to_string(t) + " at vertex " +
                                        std::to_string(zero));
        a.ring[i] = ring;
        a.face_ids[i] = face;
    }
    for (int i = 0; i < 3; ++i) {
        const int x = a.ring[i], y = a.ring[(i + 1) % 3];
        std::vector<int> common;
        for (int w : h.neighbours(x))
            if (w != x && h.has_edge(y, w) && h.has_edge(zero, w)) common.push_back(w);
        if (common.size() != 1)
            throw certificate_violation("find_anchor: ring vertices " + std::to_string(x) + "," +
                                        std::to_string(y) + " and 0 have " +
                                        std::to_string(common.size()) +
                                        " common neighbours, expected exactly one");
        a.alphas[i] = common[0];
    }
    if (a.ring[0] == a.ring[1] || a.ring[1] == a.ring[2] || a.ring[0] == a.ring[2])
        throw certificate_violation("find_anchor: ring vertices not pairwise distinct");
    if (a.alphas[0] == a.alphas[1] || a.alphas[1] == a.alphas[2] || a.alphas[0] == a.alphas[2])
        throw certificate_violation("find_anchor: alpha vertices not pairwise distinct");
    for (int r : a.ring)
        if (h.has_edge(zero, r))
            throw certificate_violation("find_anchor: ring vertex adjacent to 0");
    return a;
}

std::optional<std::array<int, 6>> non_adj_violation(const Graph& h) {
    const int n = h.vertex_count();
    for (int c = 0; c < n; ++c)
        for (int d : h.neighbours(c)) {
            if (d == c) continue;
            // all 4-cycles a-b-c-d with the oriented edge (c,d)
            std::vector<std::pair<int, int>> cycles; // (a,b)
            for (int b : h.neighbours(c)) {
                if (b == c || b == d) continue;
                for (int a : h.neighbours(d)) {
                    if (a == c || a == d || a == b) continue;
                    if (h.has_edge(a, b)) cycles.emplace_back(a, b);
                }
            }
            for (const auto& [a, b] : cycles)
                for (const auto& [a2, b2] : cycles) {
                    if (a == a2 && b == b2) continue;
                    if (h.has_edge(a, b2)) return std::array<int, 6>{a, b, c, d, a2, b2};
                }
        }
    return std::nullopt;
}

} // namespace reconforge
