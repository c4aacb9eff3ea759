#include "reconforge/transforms.hpp"

#include <algorithm>

#include "reconforge/errors.hpp"
#include "reconforge/generators.hpp"
#include "reconforge/surface.hpp"

namespace reconforge {

Colouring lift_to_cover(const Graph& g, const Colouring& f) {
    auto part = bipartition(g);
    if (!part)
        throw precondition_error("lift_to_cover: G admits no K2-colouring (not bipartite)");
    if (f.size() != static_cast<std::size_t>(g.vertex_count()))
        throw malformed_input_error("lift_to_cover: colouring size mismatch");
    Colouring out(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) out[v] = cover_vertex(f[v], (*part)[v]);
    return out;
}

Colouring project_from_cover(const Colouring& f) {
    Colouring out(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) out[v] = f[v] / 2;
    return out;
}

PpLift pp_lift(const Graph& h, const Embedding& e) {
    ValidationReport rep = validate_pp_quadrangulation(h, e);
    if (!rep.all_passed()) {
        std::string msg = "pp_lift: input fails projective-plane validation (";
        for (const auto& [name, ok] : rep.checks)
            if (!ok) msg += name + " ";
        throw precondition_error(msg + ")");
    }

    const int n = h.vertex_count();
    PpLift out;
    out.graph = Graph(2 * n);
    for (const auto& [u, v] : h.edges()) {
        const int cross = e.sign(u, v) < 0 ? 1 : 0;
        out.graph.add_edge(cover_vertex(u, 0), cover_vertex(v, cross));
        out.graph.add_edge(cover_vertex(u, 1), cover_vertex(v, 1 - cross));
    }
    for (int v = 0; v < n; ++v) {
        const std::string base = h.label(v).empty() ? std::to_string(v) : h.label(v);
        out.graph.set_label(cover_vertex(v, 0), "(" + base + ",N)");
        out.graph.set_label(cover_vertex(v, 1), "(" + base + ",S)");
    }

    out.embedding.rotations.resize(2 * n);
    for (int v = 0; v < n; ++v) {
        for (int w : e.rotations[v]) {
            const int cross = e.sign(v, w) < 0 ? 1 : 0;
            out.embedding.rotations[cover_vertex(v, 0)].push_back(cover_vertex(w, cross));
        }
        for (auto it = e.rotations[v].rbegin(); it != e.rotations[v].rend(); ++it) {
            const int cross = e.sign(v, *it) < 0 ? 1 : 0;
            out.embedding.rotations[cover_vertex(v, 1)].push_back(cover_vertex(*it, 1 - cross));
        }
    }

    ValidationReport sphere = validate_sphere_quadrangulation(out.graph, out.embedding);
    if (!sphere.all_passed()) {
        std::string msg = "pp_lift: lifted embedding fails sphere validation (";
        for (const auto& [name, ok] : sphere.checks)
            if (!ok) msg += name + " ";
        throw certificate_violation(msg + ")");
    }

    // explicit isomorphism (q x phi) onto H x K2
    auto phi = bipartition(out.graph);
    if (!phi) throw certificate_violation("pp_lift: lifted quadrangulation is not bipartite");
    const Graph cover = double_cover(h);
    out.iso_to_double_cover.resize(2 * n);
    std::vector<char> hit(2 * n, 0);
    for (int x = 0; x < 2 * n; ++x) {
        const int image = cover_vertex(x / 2, (*phi)[x]);
        out.iso_to_double_cover[x] = image;
        if (hit[image]++)
            throw certificate_violation("pp_lift: q x phi is not a bijection");
    }
    for (const auto& [u, v] : out.graph.edges())
        if (!cover.has_edge(out.iso_to_double_cover[u], out.iso_to_double_cover[v]))
            throw certificate_violation("pp_lift: q x phi does not preserve an edge");
    if (out.graph.edge_count() != cover.edge_count())
        throw certificate_violation("pp_lift: edge counts differ from the double cover");
    return out;
}

WheelRetraction wheel_retraction(int k) {
    if (k < 6 || k % 2 != 0)
        throw malformed_input_error("wheel_retraction: k must be even and at least 6");
    const Graph w = wheel(k);
    WheelRetraction out;
    out.product = categorical_product(w, complete_graph(2));
    const int hub = k;
    auto pid = [](int x, int sheet) { return 2 * x + sheet; };

    // C1 rim vertex r lives on sheet r mod 2; both hub images join it.
    for (int r = 0; r < k; ++r) out.h_vertices.push_back(pid(r, r % 2));
    out.h_vertices.push_back(pid(hub, 0));
    out.h_vertices.push_back(pid(hub, 1));
    std::sort(out.h_vertices.begin(), out.h_vertices.end());

    out.phi.resize(out.product.vertex_count());
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < 2; ++s)
            out.phi[pid(r, s)] = (r % 2 == s) ? pid(r, s) : pid((r + 1) % k, s);
    out.phi[pid(hub, 0)] = pid(hub, 0);
    out.phi[pid(hub, 1)] = pid(hub, 1);

    CheckResult check = check_retraction(out.product, out.h_vertices, out.phi);
    if (!check) throw certificate_violation("wheel_retraction: " + check.reason);

    out.h_graph = induced_subgraph(out.product, out.h_vertices);
    out.h_global_ids = out.h_vertices;
    auto local = [&](int global) {
        return static_cast<int>(std::lower_bound(out.h_global_ids.begin(),
                                                 out.h_global_ids.end(), global) -
                                out.h_global_ids.begin());
    };

    // Pseudo-double-wheel rotations: rim circle with one hub image inside
    // (adjacent to the odd rim positions) and the other outside.
    const int a_in = local(pid(hub, 0));
    const int b_out = local(pid(hub, 1));
    Embedding emb;
    emb.rotations.resize(out.h_graph.vertex_count());
    auto rim = [&](int r) {
        const int rr = (r % k + k) % k;
        return local(pid(rr, rr % 2));
    };
    for (int r = 0; r < k; ++r) {
        // (hub,0) is adjacent to rim images on sheet 1, i.e. odd positions
        const int apex = (r % 2 == 1) ? a_in : b_out;
        if (r % 2 == 1)
            emb.rotations[rim(r)] = {rim(r + 1), apex, rim(r - 1)};
        else
            emb.rotations[rim(r)] = {rim(r + 1), rim(r - 1), apex};
    }
    for (int r = 1; r < k; r += 2) emb.rotations[a_in].push_back(rim(r));
    for (int r = k - 2; r >= 0; r -= 2) emb.rotations[b_out].push_back(rim(r));
    out.h_embedding = std::move(emb);

    ValidationReport rep = validate_sphere_quadrangulation(out.h_graph, out.h_embedding);
    if (!rep.all_passed()) {
        std::string msg = "wheel_retraction: H_k fails sphere validation (";
        for (const auto& [name, ok] : rep.checks)
            if (!ok) msg += name + " ";
        throw certificate_violation(msg + ")");
    }
    return out;
}

} // namespace reconforge
