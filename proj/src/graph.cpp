#include "reconforge/graph.hpp"

#include <algorithm>
#include <numeric>

#include "reconforge/errors.hpp"

namespace reconforge {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw malformed_input_error("graph: negative vertex count");
    stride_ = static_cast<std::size_t>((n + 63) / 64);
    adj_.assign(static_cast<std::size_t>(n) * stride_, 0);
    nbrs_.resize(n);
    labels_.resize(n);
}

void Graph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= n_)
        throw malformed_input_error(std::string(what) + ": vertex id " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (has_edge(u, v)) return;
    adj_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] |=
        std::uint64_t{1} << (v & 63);
    adj_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(u >> 6)] |=
        std::uint64_t{1} << (u & 63);
    nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
    if (u != v) {
        nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
        ++edges_;
    } else {
        ++loops_;
    }
}

int Graph::degree(int v) const {
    check_vertex(v, "degree");
    return static_cast<int>(nbrs_[v].size()) - (has_loop(v) ? 1 : 0);
}

bool Graph::is_reflexive() const { return loops_ == n_; }
bool Graph::is_irreflexive() const { return loops_ == 0; }

void Graph::set_label(int v, std::string label) {
    check_vertex(v, "set_label");
    labels_[v] = std::move(label);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbrs_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::loop_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (has_loop(v)) out.push_back(v);
    return out;
}

bool is_homomorphism(const Graph& g, const Graph& h, const Colouring& m) {
    if (static_cast<int>(m.size()) != g.vertex_count())
        throw malformed_input_error("is_homomorphism: map size " + std::to_string(m.size()) +
                                    " != |V(G)| = " + std::to_string(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (m[v] < 0 || m[v] >= h.vertex_count())
            throw malformed_input_error("is_homomorphism: image of vertex " + std::to_string(v) +
                                        " out of range");
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbours(u)) {
            if (v > u) break; // each edge once, loops included as (u,u)
            if (!h.has_edge(m[u], m[v])) return false;
        }
    return true;
}

Graph categorical_product(const Graph& f1, const Graph& f2) {
    const int n1 = f1.vertex_count(), n2 = f2.vertex_count();
    Graph p(n1 * n2);
    for (int u1 = 0; u1 < n1; ++u1)
        for (int u2 = 0; u2 < n2; ++u2) {
            const int uid = u1 * n2 + u2;
            for (int v1 : f1.neighbours(u1))
                for (int v2 : f2.neighbours(u2)) {
                    const int vid = v1 * n2 + v2;
                    if (vid >= uid) p.add_edge(uid, vid);
                }
        }
    for (int u1 = 0; u1 < n1; ++u1)
        for (int u2 = 0; u2 < n2; ++u2) {
            const std::string a = f1.label(u1).empty() ? std::to_string(u1) : f1.label(u1);
            const std::string b = f2.label(u2).empty() ? std::to_string(u2) : f2.label(u2);
            p.set_label(u1 * n2 + u2, "(" + a + "," + b + ")");
        }
    return p;
}

int cover_vertex(int v, int sheet) { return 2 * v + sheet; }

Graph double_cover(const Graph& h) {
    Graph k2(2);
    k2.add_edge(0, 1);
    Graph p = categorical_product(h, k2);
    for (int v = 0; v < h.vertex_count(); ++v) {
        const std::string base = h.label(v).empty() ? std::to_string(v) : h.label(v);
        p.set_label(cover_vertex(v, 0), "(" + base + ",1)");
        p.set_label(cover_vertex(v, 1), "(" + base + ",2)");
    }
    return p;
}

std::optional<std::pair<int, int>> non_stiff_witness(const Graph& h) {
    const int n = h.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const auto& nu = h.neighbours(u);
            bool contained = true;
            for (int w : nu)
                if (!h.has_edge(v, w)) {
                    contained = false;
                    break;
                }
            if (contained) return std::make_pair(u, v);
        }
    return std::nullopt;
}

CheckResult check_retraction(const Graph& f, const std::vector<int>& h_vertices,
                             const Colouring& phi) {
    if (static_cast<int>(phi.size()) != f.vertex_count())
        throw malformed_input_error("check_retraction: map size mismatch");
    std::vector<char> in_h(f.vertex_count(), 0);
    for (int v : h_vertices) {
        f.check_vertex(v, "check_retraction");
        in_h[v] = 1;
    }
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (phi[v] < 0 || phi[v] >= f.vertex_count())
            throw malformed_input_error("check_retraction: image out of range");
        if (!in_h[phi[v]])
            return {false, "image of vertex " + std::to_string(v) + " lies outside H"};
    }
    for (int v : h_vertices)
        if (phi[v] != v) return {false, "vertex " + std::to_string(v) + " of H is not fixed"};
    for (int u = 0; u < f.vertex_count(); ++u)
        for (int v : f.neighbours(u)) {
            if (v > u) break;
            if (!f.has_edge(phi[u], phi[v]))
                return {false, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") is not preserved"};
        }
    return {true, ""};
}

std::optional<std::pair<Graph, Colouring>> fold_step(const Graph& h) {
    auto w = non_stiff_witness(h);
    if (!w) return std::nullopt;
    const auto [u, v] = *w; // remove u, its edges already live at v
    const int n = h.vertex_count();
    Colouring quotient(n);
    int next = 0;
    for (int x = 0; x < n; ++x) quotient[x] = (x == u) ? -1 : next++;
    quotient[u] = quotient[v];
    Graph q(n - 1);
    for (int x = 0; x < n; ++x) {
        if (x == u) continue;
        for (int y : h.neighbours(x)) {
            if (y == u || y > x) continue;
            q.add_edge(quotient[x], quotient[y]);
        }
        if (!h.label(x).empty()) q.set_label(quotient[x], h.label(x));
    }
    return std::make_pair(std::move(q), std::move(quotient));
}

std::pair<Graph, Colouring> fold_core(const Graph& h) {
    Graph cur = h;
    Colouring total(h.vertex_count());
    std::iota(total.begin(), total.end(), 0);
    while (auto step = fold_step(cur)) {
        for (int& t : total) t = step->second[t];
        cur = std::move(step->first);
    }
    return {std::move(cur), std::move(total)};
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbours(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbours(u)) {
                if (v == u) return std::nullopt; // loop
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, Colouring& map, std::vector<char>& used, int v) {
    const int n = a.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w]) continue;
        if (a.has_loop(v) != b.has_loop(w)) continue;
        if (a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(v, u) != b.has_edge(w, map[u])) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (iso_extend(a, b, map, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

std::optional<Colouring> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.loop_count() != b.loop_count())
        return std::nullopt;
    auto degs = [](const Graph& g) {
        std::vector<int> d(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return std::nullopt;
    Colouring map(a.vertex_count(), -1);
    std::vector<char> used(a.vertex_count(), 0);
    if (iso_extend(a, b, map, used, 0)) return map;
    return std::nullopt;
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph s(static_cast<int>(vertices.size()));
    std::vector<int> back(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.check_vertex(vertices[i], "induced_subgraph");
        back[vertices[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (int w : g.neighbours(vertices[i])) {
            int j = back[w];
            if (j >= 0 && j <= static_cast<int>(i)) s.add_edge(static_cast<int>(i), j);
        }
        if (!g.label(vertices[i]).empty()) s.set_label(static_cast<int>(i), g.label(vertices[i]));
    }
    return s;
}

} // namespace reconforge
