#include <doctest.h>

#include <numeric>
#include <random>

#include "reconforge/generators.hpp"
#include "reconforge/graph.hpp"
#include "reconforge/errors.hpp"
#include "reconforge/oracle.hpp"
#include "test_util.hpp"

using namespace reconforge;

TEST_CASE("is_homomorphism basics") {
    const Graph c4 = cycle_graph(4);
    const Graph c5 = cycle_graph(5);
    const Graph k2 = complete_graph(2);

    Colouring identity(c4.vertex_count());
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(is_homomorphism(c4, c4, identity));

    CHECK(is_homomorphism(c4, k2, {0, 1, 0, 1}));

    // no map C5 -> K2 works: odd cycle has no 2-colouring
    for (int mask = 0; mask < 32; ++mask) {
        Colouring m(5);
        for (int v = 0; v < 5; ++v) m[v] = mask >> v & 1;
        CHECK_FALSE(is_homomorphism(c5, k2, m));
    }

    CHECK_THROWS_AS(is_homomorphism(c4, k2, {0, 1, 0}), malformed_input_error);
    CHECK_THROWS_AS(is_homomorphism(c4, k2, {0, 1, 0, 7}), malformed_input_error);

    // loops must map to loops
    Graph looped(2);
    looped.add_edge(0, 1);
    looped.add_edge(0, 0);
    const Graph p2_reflexive = make_reflexive(path_graph(2));
    CHECK(is_homomorphism(looped, p2_reflexive, {0, 1}));
    CHECK_FALSE(is_homomorphism(looped, k2, {0, 1}));
}

TEST_CASE("categorical product") {
    const Graph k2 = complete_graph(2);
    const Graph p = categorical_product(k2, k2);
    CHECK(p.vertex_count() == 4);
    CHECK(p.edge_count() == 2); // two disjoint edges
    CHECK_FALSE(is_connected(p));

    // W5 x K2: two 5-cycles plus two hub images of degree 5
    const Graph w5k2 = categorical_product(wheel(5), k2);
    CHECK(w5k2.vertex_count() == 12);
    std::vector<int> degs;
    for (int v = 0; v < 12; ++v) degs.push_back(w5k2.degree(v));
    CHECK(std::count(degs.begin(), degs.end(), 5) == 2);
    CHECK(std::count(degs.begin(), degs.end(), 3) == 10);
    // the sheet-alternating rim cycles exist
    for (int sheet : {0, 1}) {
        for (int r = 0; r < 5; ++r) {
            const int u = 2 * r + (r % 2 == 0 ? sheet : 1 - sheet);
            const int v = 2 * ((r + 1) % 5) + ((r + 1) % 2 == 0 ? sheet : 1 - sheet);
            CHECK(w5k2.has_edge(u, v));
        }
    }

    // C5 x K2 is the 10-cycle
    const Graph c10 = cycle_graph(10);
    CHECK(is_isomorphic(categorical_product(cycle_graph(5), k2), c10));

    // loops multiply: loop at (u,v) iff loops at both
    Graph l(1);
    l.add_edge(0, 0);
    const Graph lp = categorical_product(l, k2);
    CHECK(lp.loop_count() == 0);
    const Graph ll = categorical_product(l, l);
    CHECK(ll.loop_count() == 1);
}

TEST_CASE("double cover") {
    // bipartite graph: two disjoint copies
    const Graph c4 = cycle_graph(4);
    const Graph cover = double_cover(c4);
    CHECK(cover.vertex_count() == 8);
    CHECK_FALSE(is_connected(cover));
    CHECK(cover.label(cover_vertex(2, 0)) == "(2,1)");

    const Graph k2cover = double_cover(complete_graph(2));
    CHECK(k2cover.vertex_count() == 4);
    CHECK(k2cover.edge_count() == 2); // two disjoint edges, not C4
    CHECK_FALSE(is_isomorphic(k2cover, c4));
}

TEST_CASE("non_stiff_witness") {
    CHECK_FALSE(non_stiff_witness(cube().first).has_value()); // stiff
    CHECK(non_stiff_witness(reflexive_triangle().first).has_value());
    auto w = non_stiff_witness(cycle_graph(4)); // opposite rim pair
    REQUIRE(w.has_value());
    CHECK((w->first + 2) % 4 == w->second % 4);
}

TEST_CASE("check_retraction") {
    const Graph f = wheel(5);
    std::vector<int> all(f.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    Colouring identity = all;
    CHECK(check_retraction(f, all, identity).ok);

    // an edge has no one-vertex retract
    const Graph k2 = complete_graph(2);
    auto res = check_retraction(k2, {0}, {0, 0});
    CHECK_FALSE(res.ok);
    CHECK_FALSE(res.reason.empty());

    // image outside H is a failure reason, not an exception
    auto outside = check_retraction(k2, {0}, {0, 1});
    CHECK_FALSE(outside.ok);
}

TEST_CASE("fold_step and fold_core") {
    // W4 folds to K3 in two steps
    const Graph w4 = wheel(4);
    auto s1 = fold_step(w4);
    REQUIRE(s1.has_value());
    auto s2 = fold_step(s1->first);
    REQUIRE(s2.has_value());
    CHECK(is_isomorphic(s2->first, complete_graph(3)));
    CHECK_FALSE(fold_step(s2->first).has_value());
    auto [core, quotient] = fold_core(w4);
    CHECK(is_isomorphic(core, complete_graph(3)));
    CHECK(quotient.size() == 5);

    CHECK_FALSE(fold_step(cube().first).has_value());

    // reflexive path dismantles to a single looped vertex
    auto [p3core, p3map] = fold_core(make_reflexive(path_graph(3)));
    CHECK(p3core.vertex_count() == 1);
    CHECK(p3core.loop_count() == 1);
}

TEST_CASE("fold preserves homomorphism existence") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = test::random_graph(rng, 1 + trial % 5, 0.5);
        Graph h = test::random_graph(rng, 2 + trial % 6, 0.55, trial % 3 == 0);
        auto folded = fold_step(h);
        if (!folded) continue;
        const bool before = !enumerate_homs(g, h, 1).homs.empty();
        const bool after = !enumerate_homs(g, folded->first, 1).homs.empty();
        CHECK(before == after);
    }
}

TEST_CASE("product commutes with projections") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph f1 = test::random_graph(rng, 3, 0.7);
        const Graph f2 = test::random_graph(rng, 3, 0.7, true);
        const Graph g = test::random_graph(rng, 3, 0.5);
        const Graph prod = categorical_product(f1, f2);
        auto homs = enumerate_homs(g, prod, 50).homs;
        for (const auto& hom : homs) {
            Colouring pi1(hom.size()), pi2(hom.size());
            for (std::size_t v = 0; v < hom.size(); ++v) {
                pi1[v] = hom[v] / f2.vertex_count();
                pi2[v] = hom[v] % f2.vertex_count();
            }
            CHECK(is_homomorphism(g, f1, pi1));
            CHECK(is_homomorphism(g, f2, pi2));
        }
    }
}

TEST_CASE("stiffness agrees with frozen identity") {
    // closed neighbourhoods pair with the irreflexive rule on irreflexive
    // graphs and with the reflexive rule on reflexive ones
    std::mt19937 rng(99);
    std::vector<Graph> pool;
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = test::random_graph(rng, 2 + trial % 7, 0.5);
        pool.push_back(trial % 2 == 0 ? make_reflexive(std::move(g)) : g);
    }
    pool.push_back(cube().first);
    pool.push_back(reflexive_octahedron().first);
    for (const Graph& h : pool) {
        if (h.vertex_count() > 10) continue;
        Colouring identity(h.vertex_count());
        std::iota(identity.begin(), identity.end(), 0);
        const MoveRule rule =
            h.is_reflexive() ? MoveRule::Reflexive : MoveRule::Irreflexive;
        const bool stiff = !non_stiff_witness(h).has_value();
        FrozenResult fr = frozen_vertices(h, h, identity, rule);
        REQUIRE(fr.exhausted);
        const bool all_frozen =
            std::all_of(fr.frozen.begin(), fr.frozen.end(), [](bool b) { return b; });
        CHECK(stiff == all_frozen);
    }
}

TEST_CASE("brute-force isomorphism") {
    CHECK(is_isomorphic(cycle_graph(4), double_cover(complete_graph(2))) == false);
    Graph relabeled(4);
    relabeled.add_edge(2, 1);
    relabeled.add_edge(1, 3);
    relabeled.add_edge(3, 0);
    relabeled.add_edge(0, 2);
    auto iso = find_isomorphism(cycle_graph(4), relabeled);
    REQUIRE(iso.has_value());
    CHECK_FALSE(is_isomorphic(cycle_graph(6), complete_graph(3)));
    CHECK(is_isomorphic(make_reflexive(complete_graph(3)), reflexive_triangle().first));
}

TEST_CASE("induced subgraph") {
    const Graph w = wheel(5);
    const Graph rim = induced_subgraph(w, {0, 1, 2, 3, 4});
    CHECK(is_isomorphic(rim, cycle_graph(5)));
}
