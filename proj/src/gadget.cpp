#include "reconforge/gadget.hpp"

#include <algorithm>
#include <deque>

#include "reconforge/errors.hpp"

namespace reconforge {

std::vector<int> PatternGadget::signal_values(const Colouring& c) const {
    std::vector<int> out(signals.size());
    for (std::size_t i = 0; i < signals.size(); ++i) out[i] = c[signals[i]];
    return out;
}

bool PatternGadget::pattern_member(const std::vector<int>& tuple) const {
    return std::binary_search(patterns.begin(), patterns.end(), tuple);
}

int PhiDigraph::arc_count() const {
    int total = 0;
    for (const auto& a : out_arcs) total += static_cast<int>(a.size());
    return total;
}

bool PhiDigraph::has_arc(std::pair<int, int> a, std::pair<int, int> b) const {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) return false;
    const auto& out = out_arcs[ia->second];
    return std::binary_search(out.begin(), out.end(), ib->second);
}

bool phi_arc(const Graph& h, std::pair<int, int> from, std::pair<int, int> to) {
    const auto [a, b] = from;
    const auto [c, d] = to;
    return h.has_edge(a, c) && h.has_edge(b, c) && h.has_edge(b, d) && !h.has_edge(a, d);
}

std::vector<std::pair<int, int>> phi_path(const PhiDigraph& phi, std::pair<int, int> from,
                                          std::pair<int, int> to) {
    auto pair_name = [](std::pair<int, int> p) {
        return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    };
    auto fi = phi.index.find(from);
    auto ti = phi.index.find(to);
    if (fi == phi.index.end())
        throw precondition_error("phi_path: " + pair_name(from) + " is not a Phi vertex");
    if (ti == phi.index.end())
        throw precondition_error("phi_path: " + pair_name(to) + " is not a Phi vertex");

    std::vector<int> parent(phi.pairs.size(), -1);
    std::deque<int> queue{fi->second};
    std::vector<char> seen(phi.pairs.size(), 0);
    seen[fi->second] = 1;
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        if (cur == ti->second) break;
        for (int nxt : phi.out_arcs[cur])
            if (!seen[nxt]) {
                seen[nxt] = 1;
                parent[nxt] = cur;
                queue.push_back(nxt);
            }
    }
    if (!seen[ti->second])
        throw certificate_violation("phi_path: no directed path " + pair_name(from) + " -> " +
                                    pair_name(to) +
                                    " (contradicts connectivity on a valid certificate)");
    std::vector<std::pair<int, int>> path;
    for (int cur = ti->second; cur != -1; cur = parent[cur]) path.push_back(phi.pairs[cur]);
    if (path.back() != from) path.push_back(from); // from == to case handled naturally
    std::reverse(path.begin(), path.end());
    if (path.front() != from) path.erase(path.begin());
    return path;
}

int GraphBuilder::add_vertex(std::string label) {
    if (!label.empty()) labels_.emplace_back(n_, std::move(label));
    return n_++;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw malformed_input_error("GraphBuilder::add_edge: vertex out of range");
    edges_.emplace_back(u, v);
}

std::vector<int> GraphBuilder::splice(const Graph& part, const std::map<int, int>& pinned) {
    std::vector<int> map(part.vertex_count(), -1);
    for (const auto& [pv, target] : pinned) {
        part.check_vertex(pv, "splice");
        if (target < 0 || target >= n_)
            throw malformed_input_error("GraphBuilder::splice: pinned target out of range");
        map[pv] = target;
    }
    for (int v = 0; v < part.vertex_count(); ++v)
        if (map[v] == -1) map[v] = add_vertex(part.label(v));
    for (int u = 0; u < part.vertex_count(); ++u)
        for (int v : part.neighbours(u)) {
            if (v > u) break;
            add_edge(map[u], map[v]);
        }
    return map;
}

Graph GraphBuilder::build() const {
    Graph g(n_);
    for (const auto& [u, v] : edges_) g.add_edge(u, v);
    for (const auto& [v, label] : labels_) g.set_label(v, label);
    return g;
}

namespace {

std::string tuple_name(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

} // namespace

GadgetVerification verify_pattern_gadget(const PatternGadget& g, MoveRule rule,
                                         std::uint64_t cap) {
    GadgetVerification out;

    // (a) canonical colourings are homomorphisms hitting their patterns
    out.condition_a = true;
    for (const auto& p : g.patterns) {
        auto it = g.canonical.find(p);
        if (it == g.canonical.end()) {
            out.condition_a = false;
            out.failures.push_back("no canonical colouring for pattern " + tuple_name(p));
            continue;
        }
        if (!is_homomorphism(g.graph, g.host, it->second)) {
            out.condition_a = false;
            out.failures.push_back("canonical colouring for " + tuple_name(p) +
                                   " is not a homomorphism");
        } else if (g.signal_values(it->second) != p) {
            out.condition_a = false;
            out.failures.push_back("canonical colouring for " + tuple_name(p) +
                                   " does not realise its pattern");
        }
    }
    if (!out.condition_a) return out;

    auto tuple_of = [&](const StateView& view) {
        std::vector<int> t(g.signals.size());
        for (std::size_t i = 0; i < g.signals.size(); ++i) t[i] = view.get(g.signals[i]);
        return t;
    };

    // (b) exhaust the components of the canonical colourings; a rejected
    // successor is exactly a reachable state with an out-of-pattern tuple.
    out.condition_b = true;
    std::vector<char> covered(g.patterns.size(), 0);
    for (std::size_t pi = 0; pi < g.patterns.size(); ++pi) {
        if (covered[pi]) continue;
        ExploreOptions opt;
        opt.rule = rule;
        opt.cap = cap;
        opt.admit = [&](const StateView& view) { return g.pattern_member(tuple_of(view)); };
        for (std::size_t qi = 0; qi < g.patterns.size(); ++qi)
            opt.probes.push_back(g.canonical.at(g.patterns[qi]));
        ExploreResult er =
            explore_component(g.graph, g.host, g.canonical.at(g.patterns[pi]), nullptr, opt);
        out.states_explored += er.states;
        out.largest_component = std::max(out.largest_component, er.states);
        if (er.cap_exceeded) {
            out.cap_exceeded = true;
            out.failures.push_back("condition (b): cap exceeded from pattern " +
                                   tuple_name(g.patterns[pi]));
            return out;
        }
        if (er.rejected_moves > 0) {
            out.condition_b = false;
            std::string msg = "condition (b): reachable state leaves the pattern set from " +
                              tuple_name(g.patterns[pi]);
            if (er.sample_rejected)
                msg += ", signals " + tuple_name(g.signal_values(*er.sample_rejected));
            out.failures.push_back(msg);
        }
        for (std::size_t qi = 0; qi < g.patterns.size(); ++qi)
            if (er.probe_hit[qi]) covered[qi] = 1;
    }

    // (c) single-coordinate pattern transitions inside {p,q}
    out.condition_c = true;
    for (std::size_t i = 0; i < g.patterns.size(); ++i)
        for (std::size_t j = i + 1; j < g.patterns.size(); ++j) {
            const auto& p = g.patterns[i];
            const auto& q = g.patterns[j];
            int diff = 0;
            for (std::size_t t = 0; t < p.size(); ++t) diff += p[t] != q[t];
            if (diff > 1) continue;
            ExploreOptions opt;
            opt.rule = rule;
            opt.cap = cap;
            opt.record_parents = true;
            opt.admit = [&](const StateView& view) {
                const auto t = tuple_of(view);
                return t == p || t == q;
            };
            const Colouring target = g.canonical.at(q);
            ExploreResult er =
                explore_component(g.graph, g.host, g.canonical.at(p), &target, opt);
            out.states_explored += er.states;
            if (er.cap_exceeded) {
                out.cap_exceeded = true;
                out.failures.push_back("condition (c): cap exceeded between " + tuple_name(p) +
                                       " and " + tuple_name(q));
                return out;
            }
            if (!er.target_found) {
                out.condition_c = false;
                out.failures.push_back("condition (c): no transition between " + tuple_name(p) +
                                       " and " + tuple_name(q) + " inside {p,q}");
            }
        }
    return out;
}

GadgetVerification verify_pattern_gadget(const PatternGadget& g, std::uint64_t cap) {
    return verify_pattern_gadget(g, g.rule, cap);
}

FlipSequence single_flip_sequence(const PatternGadget& g, const std::vector<int>& p,
                                  const std::vector<int>& q, std::uint64_t cap) {
    if (!g.pattern_member(p) || !g.pattern_member(q))
        throw precondition_error("single_flip_sequence: patterns outside the gadget");
    int flip_coord = -1;
    for (std::size_t t = 0; t < p.size(); ++t)
        if (p[t] != q[t]) {
            if (flip_coord != -1)
                throw precondition_error("single_flip_sequence: patterns differ on " +
                                         std::to_string(flip_coord) + " and " +
                                         std::to_string(t));
            flip_coord = static_cast<int>(t);
        }
    if (flip_coord == -1)
        throw precondition_error("single_flip_sequence: patterns are equal");

    const int flip_vertex = g.signals[flip_coord];
    const int flip_to = q[flip_coord];

    auto tuple_of = [&](const StateView& view) {
        std::vector<int> t(g.signals.size());
        for (std::size_t i = 0; i < g.signals.size(); ++i) t[i] = view.get(g.signals[i]);
        return t;
    };
    // flip validity at a state: recolouring the signal keeps a homomorphism
    auto flip_valid = [&](const StateView& view) {
        for (int u : g.graph.neighbours(flip_vertex)) {
            const int cu = u == flip_vertex ? flip_to : view.get(u);
            if (!g.host.has_edge(flip_to, cu)) return false;
        }
        if (g.rule == MoveRule::Reflexive &&
            !g.host.has_edge(view.get(flip_vertex), flip_to))
            return false;
        return true;
    };

    ExploreOptions stage_a;
    stage_a.rule = g.rule;
    stage_a.cap = cap;
    stage_a.record_parents = true;
    stage_a.admit = [&](const StateView& view) { return tuple_of(view) == p; };
    stage_a.stop_when = flip_valid;
    ExploreResult ra = explore_component(g.graph, g.host, g.canonical.at(p), nullptr, stage_a);
    if (!ra.target_found)
        throw certificate_violation("single_flip_sequence: no state of pattern " +
                                    tuple_name(p) + " admits the signal flip");

    FlipSequence seq;
    const Witness& wa = *ra.witness;
    for (std::size_t s = 0; s + 1 < wa.steps.size(); ++s) {
        for (int v = 0; v < g.graph.vertex_count(); ++v)
            if (wa.steps[s][v] != wa.steps[s + 1][v]) {
                seq.pre_moves.emplace_back(v, wa.steps[s + 1][v]);
                break;
            }
    }
    seq.flip = {flip_vertex, flip_to};

    Colouring mid = wa.steps.back();
    mid[flip_vertex] = flip_to;
    ExploreOptions stage_b;
    stage_b.rule = g.rule;
    stage_b.cap = cap;
    stage_b.record_parents = true;
    stage_b.admit = [&](const StateView& view) { return tuple_of(view) == q; };
    const Colouring target = g.canonical.at(q);
    ExploreResult rb = explore_component(g.graph, g.host, mid, &target, stage_b);
    if (!rb.target_found)
        throw certificate_violation(
            "single_flip_sequence: flipped state cannot reach the canonical colouring of " +
            tuple_name(q));
    const Witness& wb = *rb.witness;
    for (std::size_t s = 0; s + 1 < wb.steps.size(); ++s) {
        for (int v = 0; v < g.graph.vertex_count(); ++v)
            if (wb.steps[s][v] != wb.steps[s + 1][v]) {
                seq.post_moves.emplace_back(v, wb.steps[s + 1][v]);
                break;
            }
    }
    return seq;
}

} // namespace reconforge
