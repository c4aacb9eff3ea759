#ifndef RECONFORGE_EMBEDDING_HPP
#define RECONFORGE_EMBEDDING_HPP

#include <map>
#include <utility>
#include <vector>

#include "reconforge/graph.hpp"

namespace reconforge {

/// Combinatorial embedding as a rotation system with edge signs (Ringel
/// convention): all-positive signs describe an orientable embedding, a -1
/// sign marks an edge whose ribbon is twisted. Loops never appear in
/// rotations; for reflexive graphs the rotations describe the underlying
/// irreflexive graph.
struct Embedding {
    /// rotations[v] = cyclic order of the non-loop neighbours of v.
    std::vector<std::vector<int>> rotations;
    /// Edges with sign -1, stored as (min,max) pairs. Everything else is +1.
    std::vector<std::pair<int, int>> negative_edges;

    int sign(int u, int v) const;
    bool all_positive() const { return negative_edges.empty(); }
};

/// Faces as closed boundary walks. faces[i] lists the walk's vertices in
/// order; its size is the face length (number of edge-sides traversed).
struct FaceList {
    std::vector<std::vector<int>> faces;
    int euler_characteristic = 0;

    int face_count() const { return static_cast<int>(faces.size()); }
    bool all_faces_of_length(int len) const;
};

/// Checks that every non-loop edge appears exactly once in each endpoint's
/// rotation and that signs refer to real edges. Throws malformed_input_error.
void check_embedding(const Graph& g, const Embedding& e);

/// Traces the face boundary walks of the embedding and computes
/// chi = V - E + F. Throws malformed_input_error on inconsistent rotations.
FaceList trace_faces(const Graph& g, const Embedding& e);

} // namespace reconforge

#endif
