#include <doctest.h>

#include <numeric>
#include <set>

#include "reconforge/errors.hpp"
#include "reconforge/generators.hpp"
#include "reconforge/reduction.hpp"

using namespace reconforge;

namespace {

std::shared_ptr<const HostKit> cube_kit() {
    static std::shared_ptr<const HostKit> kit = [] {
        auto [h, e] = cube();
        return make_quad_host_kit(h, e);
    }();
    return kit;
}

std::shared_ptr<const HostKit> octa_kit() {
    static std::shared_ptr<const HostKit> kit = [] {
        auto [h, e] = reflexive_octahedron();
        std::vector<int> all(h.vertex_count());
        std::iota(all.begin(), all.end(), 0);
        return make_reflexive_host_kit(h, 0, all);
    }();
    return kit;
}

Graph single_edge() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

} // namespace

TEST_CASE("host kits") {
    auto kit = cube_kit();
    CHECK(kit->kind == "quad");
    CHECK(kit->nbo.patterns ==
          std::vector<std::vector<int>>{{kit->v0, kit->v0}, {kit->v0, kit->v1},
                                        {kit->v1, kit->v0}});
    CHECK(kit->naz.patterns.size() == 15);

    auto rkit = octa_kit();
    CHECK(rkit->kind == "reflexive");
    CHECK(rkit->host.has_edge(rkit->v0, rkit->v1)); // 0 and 1 are adjacent here
}

TEST_CASE("compile layout and colourings") {
    auto kit = cube_kit();
    const Graph g = single_edge();
    ReductionBundle bundle = compile(g, {0, 1}, {0, 2}, kit);

    // 8 signals, 8 not-both-one gadgets, 2 not-all-zero gadgets
    CHECK(bundle.signal_index.size() == 2);
    int nbo_count = 0, naz_count = 0;
    for (const auto& inst : bundle.gadgets)
        (inst.kind == GadgetKind::NotBothOne ? nbo_count : naz_count)++;
    CHECK(nbo_count == 8);
    CHECK(naz_count == 2);

    const int nbo_interior = kit->nbo.graph.vertex_count() - 2;
    const int naz_interior = kit->naz.graph.vertex_count() - 4;
    CHECK(bundle.g_prime.vertex_count() == 8 + 8 * nbo_interior + 2 * naz_interior);

    // signal encoding: f'(u_i) = 1 iff f(u) = i
    for (int u = 0; u < 2; ++u)
        for (int i = 0; i < 4; ++i) {
            const int expect = (bundle.source_f[u] == i) ? kit->v1 : kit->v0;
            CHECK(bundle.f_prime[bundle.signal_index[u][i]] == expect);
        }
    CHECK(is_homomorphism(bundle.g_prime, kit->host, bundle.f_prime));
    CHECK(is_homomorphism(bundle.g_prime, kit->host, bundle.g_prime_colouring));

    // gadget interiors partition V(G') minus the signals
    std::vector<int> owner(bundle.g_prime.vertex_count(), -1);
    std::set<int> signals;
    for (const auto& s : bundle.signal_index) signals.insert(s.begin(), s.end());
    for (const auto& inst : bundle.gadgets) {
        const std::set<int> pinned(inst.signals.begin(), inst.signals.end());
        for (int v : inst.vertex_map) {
            if (pinned.count(v)) continue;
            CHECK(owner[v] == -1);
            owner[v] = inst.id;
        }
    }
    for (int v = 0; v < bundle.g_prime.vertex_count(); ++v)
        CHECK((signals.count(v) ? owner[v] == -1 : owner[v] != -1));
}

TEST_CASE("compile rejects improper inputs") {
    auto kit = cube_kit();
    const Graph g = single_edge();
    CHECK_THROWS_AS(compile(g, {1, 1}, {0, 2}, kit), precondition_error);
    CHECK_THROWS_AS(compile(g, {0}, {0, 2}, kit), precondition_error);
}

TEST_CASE("project") {
    auto kit = cube_kit();
    const Graph g = single_edge();
    ReductionBundle bundle = compile(g, {0, 1}, {0, 2}, kit);
    CHECK(project(bundle, bundle.f_prime) == Colouring{0, 1});
    CHECK(project(bundle, bundle.g_prime_colouring) == Colouring{0, 2});

    // min rule: signals (1,1,0,0) pick colour 1
    Colouring doubled = bundle.represent({0, 1});
    doubled[bundle.signal_index[0][1]] = kit->v1;
    CHECK(project(bundle, doubled) == Colouring{0, 1});

    // all-zero signals are a gadget-contract breach
    Colouring broken = bundle.f_prime;
    for (int i = 0; i < 4; ++i) broken[bundle.signal_index[0][i]] = kit->v0;
    CHECK_THROWS_AS(project(bundle, broken), certificate_violation);
}

TEST_CASE("lift_move produces valid fragments") {
    auto kit = cube_kit();
    // path v - u - w, recolouring u with neighbours parked on colours 3,4
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    ReductionBundle bundle = compile(path, {2, 0, 3}, {2, 1, 3}, kit);
    Witness frag = lift_move(bundle, {2, 0, 3}, {2, 1, 3});
    CHECK(frag.steps.front() == bundle.f_prime);
    CHECK(frag.steps.back() == bundle.g_prime_colouring);
    auto check = validate_witness(bundle.g_prime, kit->host, frag, kit->rule);
    CHECK(check.ok);

    // the intermediate colouring turns both signals of u on
    bool both_on = false;
    for (const auto& step : frag.steps)
        both_on |= step[bundle.signal_index[1][0]] == kit->v1 &&
                   step[bundle.signal_index[1][1]] == kit->v1;
    CHECK(both_on);

    // every intermediate state projects into {from, to}
    for (const auto& step : frag.steps) {
        const Colouring proj = project(bundle, step);
        CHECK((proj == Colouring{2, 0, 3} || proj == Colouring{2, 1, 3}));
    }

    // identity move
    Witness none = lift_move(bundle, {2, 0, 3}, {2, 0, 3});
    CHECK(none.steps.size() == 1);
}

TEST_CASE("lift_sequence follows oracle witnesses") {
    auto kit = cube_kit();
    const Graph g = single_edge();
    const Graph k4 = complete_graph(4);
    const Colouring f{0, 1}, gcol{2, 3};
    ReachResult r = reachable(g, k4, f, gcol, MoveRule::Irreflexive);
    REQUIRE(r.status == ReachStatus::Reachable);
    ReductionBundle bundle = compile(g, f, gcol, kit);
    Witness lifted = lift_sequence(bundle, *r.witness);
    CHECK(lifted.steps.front() == bundle.f_prime);
    CHECK(lifted.steps.back() == bundle.g_prime_colouring);
    CHECK(validate_witness(bundle.g_prime, kit->host, lifted, kit->rule).ok);

    // zero-move witness lifts to a zero-move witness
    ReductionBundle same = compile(g, f, f, kit);
    Witness triv;
    triv.steps = {f};
    CHECK(lift_sequence(same, triv).steps.size() == 1);
}

TEST_CASE("single-vertex instances agree with a direct G' search") {
    // G' for a one-vertex G is small enough to exhaust Hom(G',H) directly,
    // so the compiled instance can be checked against the oracle with no
    // lifting involved.
    auto kit = cube_kit();
    Graph g(1);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            ReductionBundle bundle = compile(g, {a}, {b}, kit);
            ReachResult r = reachable(bundle.g_prime, kit->host, bundle.f_prime,
                                      bundle.g_prime_colouring, kit->rule);
            REQUIRE(r.status == ReachStatus::Reachable); // K4 side always reaches
            CHECK(validate_witness(bundle.g_prime, kit->host, *r.witness, kit->rule).ok);
        }
}

TEST_CASE("reflexive host reduction") {
    auto kit = octa_kit();
    const Graph g = single_edge();
    const Graph k4 = complete_graph(4);
    ReachResult r = reachable(g, k4, {0, 1}, {1, 0}, MoveRule::Irreflexive);
    REQUIRE(r.status == ReachStatus::Reachable);
    ReductionBundle bundle = compile(g, {0, 1}, {1, 0}, kit);
    CHECK(bundle.g_prime.is_reflexive());
    Witness lifted = lift_sequence(bundle, *r.witness);
    CHECK(validate_witness(bundle.g_prime, kit->host, lifted, kit->rule).ok);
    CHECK(lifted.steps.back() == bundle.g_prime_colouring);
}
