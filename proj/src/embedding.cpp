#include "reconforge/embedding.hpp"

#include <algorithm>
#include <map>

#include "reconforge/errors.hpp"

namespace reconforge {

int Embedding::sign(int u, int v) const {
    auto key = std::minmax(u, v);
    for (const auto& e : negative_edges)
        if (e.first == key.first && e.second == key.second) return -1;
    return 1;
}

bool FaceList::all_faces_of_length(int len) const {
    for (const auto& f : faces)
        if (static_cast<int>(f.size()) != len) return false;
    return true;
}

void check_embedding(const Graph& g, const Embedding& e) {
    const int n = g.vertex_count();
    if (static_cast<int>(e.rotations.size()) != n)
        throw malformed_input_error("embedding: rotation list size " +
                                    std::to_string(e.rotations.size()) + " != |V| = " +
                                    std::to_string(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> rot = e.rotations[v];
        std::sort(rot.begin(), rot.end());
        std::vector<int> expect;
        for (int w : g.neighbours(v))
            if (w != v) expect.push_back(w);
        if (rot != expect)
            throw malformed_input_error("embedding: rotation at vertex " + std::to_string(v) +
                                        " does not list its non-loop neighbours exactly once");
    }
    for (const auto& [u, v] : e.negative_edges) {
        g.check_vertex(u, "embedding sign");
        g.check_vertex(v, "embedding sign");
        if (u == v || !g.has_edge(u, v))
            throw malformed_input_error("embedding: sign on non-edge (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
    }
}

namespace {

// A blade is a dart (directed edge) traversed on one of its two sides.
// Tracing: with state (u->v, s), let s' = s * sign(uv); the walk continues at
// v along the rotation successor of u when s' = +1, the predecessor when
// s' = -1. Faces are orbits; each face appears as a mirror pair of orbits
// (the two global walk directions) and we keep one orbit per pair.
struct Dart {
    int u, v;
};

} // namespace

FaceList trace_faces(const Graph& g, const Embedding& e) {
    check_embedding(g, e);
    const int n = g.vertex_count();

    std::vector<Dart> darts;
    std::map<std::pair<int, int>, int> dart_id;
    for (int u = 0; u < n; ++u)
        for (int v : e.rotations[u]) {
            dart_id[{u, v}] = static_cast<int>(darts.size());
            darts.push_back({u, v});
        }
    const int m = static_cast<int>(darts.size()); // = 2 * |non-loop edges|

    // position of u within rotations[v], for successor/predecessor lookup
    std::vector<std::map<int, int>> pos(n);
    for (int v = 0; v < n; ++v)
        for (std::size_t i = 0; i < e.rotations[v].size(); ++i)
            pos[v][e.rotations[v][i]] = static_cast<int>(i);

    auto blade = [m](int dart, int side) { return dart + (side < 0 ? m : 0); };
    auto next_blade = [&](int b) {
        const int d = b % m;
        const int side = b < m ? 1 : -1;
        const Dart& dd = darts[d];
        const int s2 = side * e.sign(dd.u, dd.v);
        const auto& rot = e.rotations[dd.v];
        const int k = static_cast<int>(rot.size());
        const int i = pos[dd.v].at(dd.u);
        const int j = s2 > 0 ? (i + 1) % k : (i + k - 1) % k;
        return blade(dart_id.at({dd.v, rot[j]}), s2);
    };
    auto mirror_blade = [&](int b) {
        const int d = b % m;
        const int side = b < m ? 1 : -1;
        const Dart& dd = darts[d];
        return blade(dart_id.at({dd.v, dd.u}), -side * e.sign(dd.u, dd.v));
    };

    std::vector<int> orbit_of(2 * m, -1);
    std::vector<std::vector<int>> orbits;
    for (int b0 = 0; b0 < 2 * m; ++b0) {
        if (orbit_of[b0] != -1) continue;
        const int id = static_cast<int>(orbits.size());
        std::vector<int> orbit;
        int b = b0;
        do {
            if (orbit_of[b] != -1)
                throw malformed_input_error("embedding: face tracing is not a permutation");
            orbit_of[b] = id;
            orbit.push_back(b);
            b = next_blade(b);
        } while (b != b0);
        orbits.push_back(std::move(orbit));
    }

    FaceList out;
    std::vector<char> taken(orbits.size(), 0);
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        if (taken[i]) continue;
        const int mir = orbit_of[mirror_blade(orbits[i][0])];
        if (mir == static_cast<int>(i))
            throw malformed_input_error("embedding: self-mirror face orbit");
        taken[i] = 1;
        taken[mir] = 1;
        std::vector<int> walk;
        walk.reserve(orbits[i].size());
        for (int b : orbits[i]) walk.push_back(darts[b % m].u);
        out.faces.push_back(std::move(walk));
    }

    // every edge contributes exactly two face-sides
    std::size_t total = 0;
    for (const auto& f : out.faces) total += f.size();
    if (total != static_cast<std::size_t>(m))
        throw malformed_input_error("embedding: face sides do not cover edge sides exactly");

    out.euler_characteristic =
        n - g.edge_count() + static_cast<int>(out.faces.size());
    return out;
}

} // namespace reconforge
