#include <doctest.h>

#include <numeric>

#include "reconforge/errors.hpp"
#include "reconforge/generators.hpp"
#include "reconforge/oracle.hpp"
#include "reconforge/surface.hpp"
#include "reconforge/transforms.hpp"

using namespace reconforge;

TEST_CASE("colouring lift and projection") {
    const Graph c6 = cycle_graph(6);
    const Graph w5 = wheel(5);
    // a C6 -> W5 colouring walking around the rim
    const Colouring f{0, 1, 2, 3, 4, 0};
    REQUIRE_FALSE(is_homomorphism(c6, w5, f)); // 4~0 ok but 0 repeats adjacently
    const Colouring g{0, 1, 0, 1, 2, 1};
    REQUIRE(is_homomorphism(c6, w5, g));
    const Colouring lifted = lift_to_cover(c6, g);
    CHECK(is_homomorphism(c6, double_cover(w5), lifted));
    CHECK(project_from_cover(lifted) == g);

    CHECK_THROWS_AS(lift_to_cover(cycle_graph(5), {0, 1, 0, 1, 2}), precondition_error);
}

TEST_CASE("xK2 instance equivalence") {
    const Graph p3 = path_graph(3);
    const Graph w5 = wheel(5);
    const Graph cover = double_cover(w5);
    auto homs = enumerate_homs(p3, w5).homs;
    REQUIRE(homs.size() == 70); // sum of squared degrees
    auto cover_homs = enumerate_homs(p3, cover).homs;
    CHECK(cover_homs.size() == 140);
    for (const auto& f : homs)
        for (const auto& g : homs) {
            const bool base = reachable(p3, w5, f, g, MoveRule::Irreflexive).status ==
                              ReachStatus::Reachable;
            const bool lifted = reachable(p3, cover, lift_to_cover(p3, f),
                                          lift_to_cover(p3, g), MoveRule::Irreflexive)
                                    .status == ReachStatus::Reachable;
            CHECK(base == lifted);
        }
}

TEST_CASE("pp_lift") {
    {
        auto [h, e] = wheel_pp(5);
        PpLift lift = pp_lift(h, e);
        CHECK(lift.graph.vertex_count() == 12);
        FaceList f = trace_faces(lift.graph, lift.embedding);
        CHECK(f.face_count() == 10);
        CHECK(f.all_faces_of_length(4));
        CHECK(validate_sphere_quadrangulation(lift.graph, lift.embedding).all_passed());
        // explicit bijection onto the double cover
        const Graph cover = double_cover(h);
        std::vector<char> hit(cover.vertex_count(), 0);
        for (int v = 0; v < lift.graph.vertex_count(); ++v)
            hit[lift.iso_to_double_cover[v]] = 1;
        CHECK(std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }));
        for (const auto& [u, v] : lift.graph.edges())
            CHECK(cover.has_edge(lift.iso_to_double_cover[u], lift.iso_to_double_cover[v]));
        CHECK(is_isomorphic(lift.graph, categorical_product(h, complete_graph(2))));
    }
    {
        auto [h, e] = grotzsch();
        PpLift lift = pp_lift(h, e);
        CHECK(lift.graph.vertex_count() == 22);
        CHECK(validate_sphere_quadrangulation(lift.graph, lift.embedding).all_passed());
        CHECK(subgraph_free(lift.graph, ForbiddenSubgraph::K23));
    }
    {
        // bipartite projective-plane input is rejected upstream
        Graph c6 = cycle_graph(6);
        Embedding e;
        e.rotations.resize(6);
        for (int i = 0; i < 6; ++i) e.rotations[i] = {(i + 5) % 6, (i + 1) % 6};
        e.negative_edges.push_back({0, 5});
        CHECK_THROWS_AS(pp_lift(c6, e), precondition_error);
    }
}

TEST_CASE("wheel retraction") {
    WheelRetraction wr = wheel_retraction(6);
    CHECK(wr.h_graph.vertex_count() == 8);
    CHECK(check_retraction(wr.product, wr.h_vertices, wr.phi).ok);
    CHECK(validate_sphere_quadrangulation(wr.h_graph, wr.h_embedding).all_passed());
    // phi fixes H pointwise and restricts to the identity through the inclusion
    for (int v : wr.h_vertices) CHECK(wr.phi[v] == v);
    CHECK(is_isomorphic(wr.h_graph, cube().first)); // the hexagonal drum is Q3

    CHECK_NOTHROW(wheel_retraction(8));
    CHECK_THROWS_AS(wheel_retraction(5), malformed_input_error);
    CHECK_THROWS_AS(wheel_retraction(4), malformed_input_error);
}

TEST_CASE("retract instances agree with the oracle") {
    // H6 inside W6 x K2: tiny instances reach identically on both sides
    WheelRetraction wr = wheel_retraction(6);
    const Graph& f_graph = wr.product;
    const Graph& h_graph = wr.h_graph;
    // inclusion of h into the product
    const std::vector<int>& inc = wr.h_global_ids;
    const Graph k2 = complete_graph(2);
    auto homs = enumerate_homs(k2, h_graph).homs;
    int agreements = 0;
    for (std::size_t a = 0; a < homs.size() && agreements < 200; ++a)
        for (std::size_t b = 0; b < homs.size() && agreements < 200; ++b) {
            const bool small = reachable(k2, h_graph, homs[a], homs[b],
                                         MoveRule::Irreflexive)
                                   .status == ReachStatus::Reachable;
            Colouring fa(2), fb(2);
            for (int v = 0; v < 2; ++v) {
                fa[v] = inc[homs[a][v]];
                fb[v] = inc[homs[b][v]];
            }
            const bool big = reachable(k2, f_graph, fa, fb, MoveRule::Irreflexive).status ==
                             ReachStatus::Reachable;
            CHECK(small == big);
            ++agreements;
        }
    CHECK(agreements > 0);
}

TEST_CASE("generators") {
    const Graph w5 = wheel(5);
    CHECK(w5.vertex_count() == 6);
    CHECK(w5.edge_count() == 10);

    const Graph gr = generalized_mycielski(5, 1);
    CHECK(gr.vertex_count() == 11);
    CHECK(gr.edge_count() == 20);
    CHECK(is_isomorphic(gr, grotzsch().first));
    // chromatic number four, by brute force
    CHECK(enumerate_homs(gr, complete_graph(3), 1).homs.empty());
    CHECK_FALSE(enumerate_homs(gr, complete_graph(4), 1).homs.empty());

    auto [ro, roe] = reflexive_octahedron();
    CHECK(ro.vertex_count() == 6);
    CHECK(ro.edge_count() == 12);
    CHECK(ro.loop_count() == 6);
    CHECK(validate_reflexive_triangulation(ro, roe).all_passed());

    CHECK(validate_pp_quadrangulation(generalized_mycielski_pp(7, 2).first,
                                      generalized_mycielski_pp(7, 2).second)
              .all_passed());
    CHECK_THROWS_AS(cycle_pp(4), malformed_input_error);
    CHECK_THROWS_AS(generalized_mycielski(5, 9), malformed_input_error);
}
