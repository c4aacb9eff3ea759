#ifndef RECONFORGE_TRANSFORMS_HPP
#define RECONFORGE_TRANSFORMS_HPP

#include <utility>
#include <vector>

#include "reconforge/embedding.hpp"
#include "reconforge/graph.hpp"

namespace reconforge {

/// Lifts a colouring f : G -> H of a bipartite G to G -> H x K2, sending part
/// A to sheet 1 and part B to sheet 2 (canonical bipartition). Throws
/// precondition_error when G is not bipartite.
Colouring lift_to_cover(const Graph& g, const Colouring& f);

/// Composes with the projection onto the first factor.
Colouring project_from_cover(const Colouring& f);

struct PpLift {
    Graph graph;        // double cover, vertex (v,sheet) = 2v+sheet
    Embedding embedding; // sphere embedding (all-positive)
    Colouring iso_to_double_cover; // explicit bijection onto double_cover(H)
};

/// Preimage of a validated non-bipartite projective-plane quadrangulation
/// under the antipodal quotient: a sphere quadrangulation isomorphic to
/// H x K2 via the constructed bijection. Sheet 2 carries reversed rotations;
/// negative edges cross sheets.
PpLift pp_lift(const Graph& h, const Embedding& e);

struct WheelRetraction {
    Graph product;              // W_k x K2
    std::vector<int> h_vertices; // image subgraph inside the product
    Colouring phi;              // retraction product -> h_vertices
    Graph h_graph;              // induced copy of the quadrangulation H_k
    Embedding h_embedding;
    std::vector<int> h_global_ids; // h_graph vertex -> product vertex
};

/// Even k >= 6: the explicit retraction of W_k x K2 onto the non-trivial
/// sphere quadrangulation H_k (one product cycle plus both hub images).
WheelRetraction wheel_retraction(int k);

} // namespace reconforge

#endif
