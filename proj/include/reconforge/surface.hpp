#ifndef RECONFORGE_SURFACE_HPP
#define RECONFORGE_SURFACE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "reconforge/embedding.hpp"
#include "reconforge/graph.hpp"

namespace reconforge {

enum class ForbiddenSubgraph { K23, K4 };

/// True iff H has no (not necessarily induced) subgraph of the given kind.
/// Loops are ignored. K23 uses the common-neighbour criterion: some pair of
/// vertices with three or more common neighbours means a K_{2,3}.
bool subgraph_free(const Graph& h, ForbiddenSubgraph pattern);

/// Outcome of a structural validator: named boolean checks in a fixed order
/// plus free-form notes (derived facts). Failures are entries, not errors.
struct ValidationReport {
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> notes;

    void add(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }
    bool all_passed() const;
    bool flag(const std::string& name) const; // throws on unknown name
};

/// Sphere-quadrangulation hypotheses: connected, irreflexive,
/// chi = 2, all faces of length 4, K_{2,3}-free, not isomorphic to C4.
/// When everything holds the minimum degree is 3 or more; checked as well.
ValidationReport validate_sphere_quadrangulation(const Graph& h, const Embedding& e);

/// Projective-plane variant: connected, irreflexive, chi = 1, faces of
/// length 4, non-bipartite, K_{2,3}-free.
ValidationReport validate_pp_quadrangulation(const Graph& h, const Embedding& e);

/// Reflexive triangulation: every vertex looped, underlying irreflexive graph
/// connected with chi = 2 and triangular faces, K4-free, and not the
/// reflexive triangle.
ValidationReport validate_reflexive_triangulation(const Graph& h, const Embedding& e);

/// Ordered pair of distinct non-adjacent vertices sharing a face (a face
/// diagonal), together with that face's index.
struct AcrossPair {
    int a = -1, b = -1;
    int face = -1;
};

/// All across pairs of a quadrangulation, sorted by (a,b). On K_{2,3}-free
/// inputs the incident face is unique per pair and recorded. The sphere C4
/// (two faces with the same boundary) is collapsed to one face by convention.
std::vector<AcrossPair> across_pairs(const Graph& h, const Embedding& e);
std::vector<AcrossPair> across_pairs(const Graph& h, const FaceList& faces);

/// Degree-three corner of a sphere quadrangulation with its labelled
/// surroundings: ring vertices 1,2,3 are across from `zero` in the three
/// incident faces (in rotation order); alphas[i] is the unique common
/// neighbour of ring[i], ring[(i+1)%3] and zero.
struct Anchor {
    int zero = -1;
    std::array<int, 3> ring{};
    std::array<int, 3> alphas{}; // alpha_{1,2}, alpha_{2,3}, alpha_{3,1}
    std::array<int, 3> face_ids{};
};

/// Picks the smallest-id degree-3 vertex. Requires a validated sphere
/// quadrangulation; throws precondition_error otherwise.
Anchor find_anchor(const Graph& h, const Embedding& e);

/// Searches for a violation of the four-cycle exclusion property: distinct
/// 4-cycles abcd and a'b'cd sharing the edge cd with a adjacent to b'.
/// Returns {a,b,c,d,a',b'} when found.
std::optional<std::array<int, 6>> non_adj_violation(const Graph& h);

} // namespace reconforge

#endif
