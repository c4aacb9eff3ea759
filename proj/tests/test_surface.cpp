#include <doctest.h>

#include <numeric>
#include <set>

#include "reconforge/errors.hpp"
#include "reconforge/generators.hpp"
#include "reconforge/surface.hpp"

using namespace reconforge;

namespace {

std::pair<Graph, Embedding> tetrahedron() {
    Graph g = complete_graph(4);
    Embedding e;
    e.rotations = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    return {std::move(g), std::move(e)};
}

} // namespace

TEST_CASE("face tracing on the corpus") {
    {
        auto [g, e] = cycle_planar(4);
        FaceList f = trace_faces(g, e);
        CHECK(f.face_count() == 2);
        CHECK(f.all_faces_of_length(4));
        CHECK(f.euler_characteristic == 2);
    }
    {
        auto [g, e] = cycle_pp(5);
        FaceList f = trace_faces(g, e);
        CHECK(f.face_count() == 1);
        CHECK(f.faces[0].size() == 10);
        CHECK(f.euler_characteristic == 1);
    }
    {
        auto [g, e] = cube();
        FaceList f = trace_faces(g, e);
        CHECK(f.face_count() == 6);
        CHECK(f.all_faces_of_length(4));
        CHECK(f.euler_characteristic == 2);
    }
    {
        auto [g, e] = tetrahedron();
        FaceList f = trace_faces(g, e);
        CHECK(f.face_count() == 4);
        CHECK(f.all_faces_of_length(3));
    }
    // total face length is twice the edge count, on every corpus embedding
    for (auto& [g, e] : {cube(), octahedron(), icosahedron(), wheel_pp(5), wheel_pp(7),
                         grotzsch(), generalized_mycielski_pp(7, 2), cycle_pp(9)}) {
        FaceList f = trace_faces(g, e);
        std::size_t total = 0;
        for (const auto& face : f.faces) total += face.size();
        CHECK(total == 2 * static_cast<std::size_t>(g.edge_count()));
        CHECK((f.euler_characteristic == 2 || f.euler_characteristic == 1));
    }
}

TEST_CASE("malformed embeddings are rejected") {
    auto [g, e] = cycle_planar(4);
    e.rotations[0] = {1}; // missing neighbour 3
    CHECK_THROWS_AS(trace_faces(g, e), malformed_input_error);

    auto [g2, e2] = cycle_planar(4);
    e2.negative_edges.push_back({0, 2}); // not an edge
    CHECK_THROWS_AS(trace_faces(g2, e2), malformed_input_error);
}

TEST_CASE("sphere quadrangulation validator") {
    {
        auto [g, e] = cube();
        ValidationReport rep = validate_sphere_quadrangulation(g, e);
        CHECK(rep.all_passed());
        CHECK(rep.flag("min-degree-3"));
    }
    {
        auto [g, e] = cycle_planar(4);
        ValidationReport rep = validate_sphere_quadrangulation(g, e);
        CHECK_FALSE(rep.all_passed());
        CHECK_FALSE(rep.flag("not-C4"));
        CHECK(rep.flag("faces-length-4"));
    }
    {
        auto [g, e] = k23_planar();
        ValidationReport rep = validate_sphere_quadrangulation(g, e);
        CHECK_FALSE(rep.all_passed());
        CHECK_FALSE(rep.flag("K23-free"));
        CHECK(rep.flag("euler-characteristic-2"));
    }
}

TEST_CASE("projective plane validator") {
    {
        auto [g, e] = wheel_pp(5);
        ValidationReport rep = validate_pp_quadrangulation(g, e);
        CHECK(rep.all_passed());
        FaceList f = trace_faces(g, e);
        CHECK(f.face_count() == 5);
    }
    {
        auto [g, e] = grotzsch();
        ValidationReport rep = validate_pp_quadrangulation(g, e);
        CHECK(rep.all_passed());
        CHECK(trace_faces(g, e).face_count() == 10);
    }
    {
        // C6 "embedded" in the projective plane is bipartite, so it fails
        Graph c6 = cycle_graph(6);
        Embedding e;
        e.rotations.resize(6);
        for (int i = 0; i < 6; ++i) e.rotations[i] = {(i + 5) % 6, (i + 1) % 6};
        e.negative_edges.push_back({0, 5});
        ValidationReport rep = validate_pp_quadrangulation(c6, e);
        CHECK_FALSE(rep.all_passed());
        CHECK_FALSE(rep.flag("non-bipartite"));
    }
}

TEST_CASE("reflexive triangulation validator") {
    {
        auto [g, e] = reflexive_octahedron();
        ValidationReport rep = validate_reflexive_triangulation(g, e);
        CHECK(rep.all_passed());
    }
    {
        auto [g, e] = reflexive_icosahedron();
        CHECK(validate_reflexive_triangulation(g, e).all_passed());
    }
    {
        auto [g, e] = tetrahedron();
        ValidationReport rep = validate_reflexive_triangulation(make_reflexive(g), e);
        CHECK_FALSE(rep.all_passed());
        CHECK_FALSE(rep.flag("K4-free"));
    }
    {
        auto [g, e] = reflexive_triangle();
        ValidationReport rep = validate_reflexive_triangulation(g, e);
        CHECK_FALSE(rep.all_passed());
        CHECK_FALSE(rep.flag("not-reflexive-triangle"));
    }
    {
        auto [g, e] = octahedron(); // loops missing
        ValidationReport rep = validate_reflexive_triangulation(g, e);
        CHECK_FALSE(rep.flag("all-reflexive"));
    }
}

TEST_CASE("subgraph_free") {
    CHECK(subgraph_free(cube().first, ForbiddenSubgraph::K23));
    CHECK_FALSE(subgraph_free(wheel(4), ForbiddenSubgraph::K23)); // rim pair + hub
    CHECK_FALSE(subgraph_free(k23_planar().first, ForbiddenSubgraph::K23));
    CHECK(subgraph_free(octahedron().first, ForbiddenSubgraph::K4));
    CHECK_FALSE(subgraph_free(complete_graph(4), ForbiddenSubgraph::K4));
    CHECK_FALSE(subgraph_free(wheel(3), ForbiddenSubgraph::K4)); // W3 is K4
    CHECK(subgraph_free(wheel(5), ForbiddenSubgraph::K4));
    CHECK(subgraph_free(wheel(5), ForbiddenSubgraph::K23));
}

TEST_CASE("across pairs") {
    {
        auto [g, e] = cycle_planar(4);
        auto pairs = across_pairs(g, e);
        CHECK(pairs.size() == 4); // both diagonals, both orders
    }
    {
        auto [g, e] = cube();
        auto pairs = across_pairs(g, e);
        CHECK(pairs.size() == 24);
        std::set<std::pair<int, int>> seen;
        for (const auto& p : pairs) {
            CHECK_FALSE(g.has_edge(p.a, p.b));
            CHECK(p.a != p.b);
            CHECK(seen.insert({p.a, p.b}).second); // face unique per ordered pair
        }
    }
}

TEST_CASE("find_anchor") {
    auto [g, e] = cube();
    Anchor a = find_anchor(g, e);
    CHECK(a.zero == 0);
    // ring vertices are the across partners of 0: distance-2 corners
    std::set<int> ring(a.ring.begin(), a.ring.end());
    CHECK(ring == std::set<int>{3, 5, 6});
    std::set<int> alphas(a.alphas.begin(), a.alphas.end());
    CHECK(alphas == std::set<int>{1, 2, 4}); // the three neighbours of corner 0
    for (int r : a.ring) CHECK_FALSE(g.has_edge(a.zero, r));

    auto [c4, c4e] = cycle_planar(4);
    CHECK_THROWS_AS(find_anchor(c4, c4e), precondition_error);
}

TEST_CASE("four-cycle exclusion property") {
    CHECK_FALSE(non_adj_violation(cube().first).has_value());
    // K23 violates it: two 4-cycles through an edge with adjacent far corners
    auto violation = non_adj_violation(k23_planar().first);
    REQUIRE(violation.has_value());
    const auto v = *violation;
    const Graph k23 = k23_planar().first;
    CHECK(k23.has_edge(v[0], v[5]));
}
