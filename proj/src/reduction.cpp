#include "reconforge/reduction.hpp"

#include <algorithm>

#include "reconforge/errors.hpp"
#include "reconforge/gadget_reflexive.hpp"
#include "reconforge/generators.hpp"

namespace reconforge {

const FlipSequence& HostKit::transition(bool naz_gadget, const std::vector<int>& p,
                                        const std::vector<int>& q) const {
    auto key = std::make_tuple(naz_gadget, p, q);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(key, single_flip_sequence(naz_gadget ? naz : nbo, p, q)).first;
    return it->second;
}

std::shared_ptr<const HostKit> make_quad_host_kit(const Graph& h, const Embedding& e) {
    auto kit = std::make_shared<HostKit>();
    kit->kind = "quad";
    kit->host = h;
    kit->rule = MoveRule::Irreflexive;
    const Anchor anchor = find_anchor(h, e);
    kit->v0 = anchor.zero;
    kit->v1 = anchor.ring[0];
    kit->nbo = build_nbo_quad(h, e, kit->v0, kit->v1, kit->v0, kit->v1);
    kit->naz = build_naz_quad(h, e, anchor);
    return kit;
}

std::shared_ptr<const HostKit> make_reflexive_host_kit(const Graph& h, int zero,
                                                       const std::vector<int>& f_vertices) {
    auto kit = std::make_shared<HostKit>();
    kit->kind = "reflexive";
    kit->host = h;
    kit->rule = MoveRule::Reflexive;
    const LocalTriangulationCertificate cert =
        validate_locally_triangulated(h, zero, f_vertices);
    kit->v0 = cert.zero;
    kit->v1 = cert.labelled(1);
    kit->nbo = build_nbo_reflexive(cert, reflexive_paths(cert, ReflexivePathKind::Loop01));
    kit->naz = build_naz_reflexive(cert);
    return kit;
}

namespace {

void require_proper(const Graph& g, const Colouring& f, const char* what) {
    static const Graph k4 = complete_graph(4);
    if (f.size() != static_cast<std::size_t>(g.vertex_count()))
        throw precondition_error(std::string(what) + ": size mismatch with G");
    if (!is_homomorphism(g, k4, f))
        throw precondition_error(std::string(what) + ": not a proper K4-colouring");
}

} // namespace

Colouring ReductionBundle::represent(const Colouring& k4) const {
    Colouring out(g_prime.vertex_count(), -1);
    const int v0 = kit->v0, v1 = kit->v1;
    for (int u = 0; u < source.vertex_count(); ++u)
        for (int i = 0; i < 4; ++i) out[signal_index[u][i]] = k4[u] == i ? v1 : v0;
    for (const auto& inst : gadgets) {
        const PatternGadget& tmpl = inst.kind == GadgetKind::NotAllZero ? kit->naz : kit->nbo;
        std::vector<int> pattern(inst.signals.size());
        for (std::size_t i = 0; i < inst.signals.size(); ++i) pattern[i] = out[inst.signals[i]];
        const Colouring& canon = tmpl.canonical.at(pattern);
        for (int v = 0; v < tmpl.graph.vertex_count(); ++v) out[inst.vertex_map[v]] = canon[v];
    }
    return out;
}

ReductionBundle compile(const Graph& g, const Colouring& f, const Colouring& gcol,
                        std::shared_ptr<const HostKit> kit) {
    require_proper(g, f, "compile: f");
    require_proper(g, gcol, "compile: g");

    ReductionBundle bundle;
    bundle.kit = kit;
    bundle.source = g;
    bundle.source_f = f;
    bundle.source_g = gcol;

    GraphBuilder builder;
    bundle.signal_index.resize(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int i = 0; i < 4; ++i) {
            bundle.signal_index[u][i] =
                builder.add_vertex("u" + std::to_string(u) + "_" + std::to_string(i + 1));
            if (kit->rule == MoveRule::Reflexive) {
                const int s = bundle.signal_index[u][i];
                builder.add_edge(s, s);
            }
        }

    int next_id = 0;
    for (const auto& [u, v] : g.edges())
        for (int i = 0; i < 4; ++i)
            for (auto [a, b] : {std::pair<int, int>{u, v}, std::pair<int, int>{v, u}}) {
                GadgetInstance inst;
                inst.id = next_id++;
                inst.kind = GadgetKind::NotBothOne;
                inst.source_u = a;
                inst.source_v = b;
                inst.colour = i;
                inst.signals = {bundle.signal_index[a][i], bundle.signal_index[b][i]};
                inst.vertex_map = builder.splice(
                    kit->nbo.graph,
                    {{kit->nbo.signals[0], inst.signals[0]},
                     {kit->nbo.signals[1], inst.signals[1]}});
                bundle.gadgets.push_back(std::move(inst));
            }
    for (int u = 0; u < g.vertex_count(); ++u) {
        GadgetInstance inst;
        inst.id = next_id++;
        inst.kind = GadgetKind::NotAllZero;
        inst.source_vertex = u;
        inst.signals = {bundle.signal_index[u][0], bundle.signal_index[u][1],
                        bundle.signal_index[u][2], bundle.signal_index[u][3]};
        std::map<int, int> pins;
        for (int i = 0; i < 4; ++i) pins[kit->naz.signals[i]] = inst.signals[i];
        inst.vertex_map = builder.splice(kit->naz.graph, pins);
        bundle.gadgets.push_back(std::move(inst));
    }

    bundle.g_prime = builder.build();
    bundle.f_prime = bundle.represent(f);
    bundle.g_prime_colouring = bundle.represent(gcol);
    if (!is_homomorphism(bundle.g_prime, kit->host, bundle.f_prime) ||
        !is_homomorphism(bundle.g_prime, kit->host, bundle.g_prime_colouring))
        throw certificate_violation("compile: compiled colourings are not homomorphisms");
    return bundle;
}

Colouring project(const ReductionBundle& bundle, const Colouring& psi) {
    if (psi.size() != static_cast<std::size_t>(bundle.g_prime.vertex_count()))
        throw malformed_input_error("project: colouring size mismatch with G'");
    const int v1 = bundle.kit->v1;
    Colouring out(bundle.source.vertex_count());
    for (int u = 0; u < bundle.source.vertex_count(); ++u) {
        int chosen = -1;
        for (int i = 0; i < 4 && chosen == -1; ++i)
            if (psi[bundle.signal_index[u][i]] == v1) chosen = i;
        if (chosen == -1)
            throw certificate_violation(
                "project: no signal of vertex " + std::to_string(u) +
                " shows 1 (not-all-zero gadget contract breached)");
        out[u] = chosen;
    }
    for (const auto& [u, v] : bundle.source.edges())
        if (out[u] == out[v])
            throw certificate_violation("project: adjacent vertices " + std::to_string(u) + "," +
                                        std::to_string(v) +
                                        " share a colour (not-both-one gadget contract breached)");
    return out;
}

namespace {

// Replays a template move list inside one gadget instance.
void apply_moves(Witness& w, Colouring& cur, const GadgetInstance& inst,
                 const std::vector<std::pair<int, int>>& moves) {
    for (const auto& [tv, colour] : moves) {
        const int v = inst.vertex_map[tv];
        if (cur[v] == colour) continue;
        cur[v] = colour;
        w.steps.push_back(cur);
    }
}

} // namespace

Witness lift_move(const ReductionBundle& bundle, const Colouring& from, const Colouring& to) {
    require_proper(bundle.source, from, "lift_move: from");
    require_proper(bundle.source, to, "lift_move: to");
    Witness w;
    Colouring cur = bundle.represent(from);
    w.steps.push_back(cur);
    if (from == to) return w;

    int u = -1;
    for (int v = 0; v < bundle.source.vertex_count(); ++v)
        if (from[v] != to[v]) {
            if (u != -1)
                throw precondition_error("lift_move: colourings differ on more than one vertex");
            u = v;
        }
    const int a = from[u], b = to[u];
    const int v0 = bundle.kit->v0, v1 = bundle.kit->v1;

    // Involved gadgets per stage, ascending id: the colour-layer gadgets at u
    // plus u's not-all-zero gadget, with their pattern transitions.
    struct Job {
        const GadgetInstance* inst;
        std::vector<int> p, q;
    };
    auto collect = [&](int layer, const std::vector<int>& naz_p,
                       const std::vector<int>& naz_q) {
        std::vector<Job> jobs;
        for (const auto& inst : bundle.gadgets) {
            if (inst.kind == GadgetKind::NotBothOne) {
                if (inst.colour != layer || (inst.source_u != u && inst.source_v != u)) continue;
                std::vector<int> p(2), q(2);
                for (int s = 0; s < 2; ++s) {
                    p[s] = cur[inst.signals[s]];
                    q[s] = p[s];
                }
                const int coord = inst.source_u == u ? 0 : 1;
                q[coord] = p[coord] == v0 ? v1 : v0;
                jobs.push_back({&inst, std::move(p), std::move(q)});
            } else if (inst.source_vertex == u) {
                jobs.push_back({&inst, naz_p, naz_q});
            }
        }
        return jobs; // bundle.gadgets is already id-ascending
    };
    auto run_stage = [&](const std::vector<Job>& jobs, int flip_signal, int flip_colour) {
        for (const auto& job : jobs) {
            const FlipSequence& seq = bundle.kit->transition(
                job.inst->kind == GadgetKind::NotAllZero, job.p, job.q);
            apply_moves(w, cur, *job.inst, seq.pre_moves);
        }
        cur[flip_signal] = flip_colour;
        w.steps.push_back(cur);
        for (const auto& job : jobs) {
            const FlipSequence& seq = bundle.kit->transition(
                job.inst->kind == GadgetKind::NotAllZero, job.p, job.q);
            apply_moves(w, cur, *job.inst, seq.post_moves);
        }
    };

    auto naz_pattern = [&](int one_a, int one_b) {
        std::vector<int> p(4, v0);
        if (one_a >= 0) p[one_a] = v1;
        if (one_b >= 0) p[one_b] = v1;
        return p;
    };

    // Stage 1: switch colour b on at u.
    run_stage(collect(b, naz_pattern(a, -1), naz_pattern(a, b)),
              bundle.signal_index[u][b], v1);
    // Stage 2: switch colour a off at u.
    run_stage(collect(a, naz_pattern(a, b), naz_pattern(b, -1)),
              bundle.signal_index[u][a], v0);

    if (cur != bundle.represent(to))
        throw certificate_violation("lift_move: schedule did not land on the canonical "
                                    "representation of the target colouring");
    return w;
}

Witness lift_sequence(const ReductionBundle& bundle, const Witness& k4_witness) {
    if (k4_witness.steps.empty())
        throw precondition_error("lift_sequence: empty witness");
    if (k4_witness.steps.front() != bundle.source_f ||
        k4_witness.steps.back() != bundle.source_g)
        throw precondition_error("lift_sequence: witness endpoints differ from (f,g)");
    Witness out;
    out.steps.push_back(bundle.f_prime);
    for (std::size_t s = 0; s + 1 < k4_witness.steps.size(); ++s) {
        if (k4_witness.steps[s] == k4_witness.steps[s + 1]) continue;
        Witness frag = lift_move(bundle, k4_witness.steps[s], k4_witness.steps[s + 1]);
        for (std::size_t t = 1; t < frag.steps.size(); ++t)
            out.steps.push_back(std::move(frag.steps[t]));
    }
    return out;
}

} // namespace reconforge
