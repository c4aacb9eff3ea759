#ifndef RECONFORGE_GENERATORS_HPP
#define RECONFORGE_GENERATORS_HPP

#include <utility>

#include "reconforge/embedding.hpp"
#include "reconforge/graph.hpp"

namespace reconforge {

/// Test-corpus generators. Embeddings ship with canonical rotation systems
/// and pass the matching validator.

Graph complete_graph(int k);
Graph path_graph(int n);
Graph cycle_graph(int k);
/// Rim 0..k-1 plus hub k adjacent to the whole rim.
Graph wheel(int k);
/// Adds a loop on every vertex.
Graph make_reflexive(Graph g);

/// Textbook generalized Mycielski over C_k: levels 0..r, level 0 carries the
/// cycle, (l,i) ~ (l+1, i+-1), apex adjacent to level r. Vertex (l,i) has id
/// l*k+i; the apex is k*(r+1). levels = 0 yields the wheel W_k.
Graph generalized_mycielski(int k, int levels);

/// Planar embeddings (all-positive signs).
std::pair<Graph, Embedding> cycle_planar(int k);
std::pair<Graph, Embedding> cube();
std::pair<Graph, Embedding> k23_planar();
std::pair<Graph, Embedding> octahedron();
std::pair<Graph, Embedding> icosahedron();
std::pair<Graph, Embedding> reflexive_octahedron();
std::pair<Graph, Embedding> reflexive_icosahedron();
std::pair<Graph, Embedding> reflexive_triangle();

/// Projective-plane embeddings (negative signs on boundary-crossing edges).
/// Odd k only.
std::pair<Graph, Embedding> cycle_pp(int k);
std::pair<Graph, Embedding> wheel_pp(int k);
std::pair<Graph, Embedding> generalized_mycielski_pp(int k, int levels);
std::pair<Graph, Embedding> grotzsch();

} // namespace reconforge

#endif
