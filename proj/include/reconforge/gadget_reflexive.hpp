#ifndef RECONFORGE_GADGET_REFLEXIVE_HPP
#define RECONFORGE_GADGET_REFLEXIVE_HPP

#include <map>
#include <vector>

#include "reconforge/gadget.hpp"

namespace reconforge {

/// Constructive witness that a stiff reflexive host is locally triangulated
/// around `zero`: the ring cycle spanning zero's neighbourhood in F, the
/// beta vertices over consecutive ring edges with their own spanning cycles,
/// and a verified unary gadget recipe (the attachment set T) for every F-edge
/// pair plus the two ring triples.
struct LocalTriangulationCertificate {
    Graph host;
    int zero = -1;
    std::vector<int> f_vertices; // sorted
    std::vector<int> ring;       // ring[i] is the vertex labelled i+1
    std::vector<int> betas;      // betas[i] sits over the ring edge (i+1, i+2)
    std::vector<std::vector<int>> beta_cycles; // spanning cycle of N_F(beta_i)
    std::map<std::vector<int>, std::vector<int>> listable; // sorted S -> T

    int ring_size() const { return static_cast<int>(ring.size()); }
    /// Vertex labelled j (1-based, wrapping: k+1 means 1). Label 0 is zero.
    int labelled(int j) const;
    const std::vector<int>& attachment(const std::vector<int>& s) const;
};

/// Greedy search for an attachment set T with common closed neighbourhood
/// exactly S. Deterministic; nullopt when the greedy gets stuck.
std::optional<std::vector<int>> find_listable_attachment(const Graph& h,
                                                         const std::vector<int>& s);

/// Unary S-gadget: identity-frozen host copy plus one reflexive signal
/// joined to the attachment set. Requires a stiff reflexive host.
PatternGadget build_listable_set_gadget(const Graph& h, const std::vector<int>& s,
                                        const std::vector<int>& attachment);

/// Embedding-driven edge variant: the attachment is {u, v} plus the two face
/// companions of the edge uv in the (underlying) triangulation.
PatternGadget build_listable_edge_gadget(const Graph& h, const Embedding& e, int u, int v);

/// Checks conditions (a)-(g) constructively; throws certificate_violation
/// naming the first failing condition by letter.
LocalTriangulationCertificate validate_locally_triangulated(const Graph& h, int zero,
                                                            const std::vector<int>& f_vertices);

/// Phi over the certified listable adjacent pairs (both orders of every
/// F-edge). Enforces arc reversal symmetry.
PhiDigraph build_phi_reflexive(const Graph& h, const LocalTriangulationCertificate& cert);

enum class ReflexivePathKind { Loop01, ToBetaI, ToBetaIPlus1 };

/// The explicit concatenated pair walks used by the reflexive gadget builders:
/// Loop01 goes (1,0) -> (0,1) around the ring; ToBetaI(i) and
/// ToBetaIPlus1(i) go (0,1) -> (beta_i, i) resp. (beta_i, i+1) via the ring
/// and the beta links. Every arc is validated; a missing arc raises
/// certificate_violation naming the offending (non-)adjacency.
std::vector<std::pair<int, int>> reflexive_paths(const LocalTriangulationCertificate& cert,
                                                 ReflexivePathKind kind, int i = 1);

/// Reflexive not-both-one style gadget from a Phi walk: a looped path whose
/// i-th vertex is the signal of a fresh {c_i,d_i} listable-pair gadget.
/// Patterns {(a0,b0),(a1,b0),(a0,b1)} with (a1,a0) and (b0,b1) the endpoints.
PatternGadget build_nbo_reflexive(const LocalTriangulationCertificate& cert,
                                  const std::vector<std::pair<int, int>>& path);

/// Reflexive not-all-zero gadget: four W gadgets wired through the
/// {0,1}/{0,2,3}/{0,3,4}/{0,5} unary gadgets along a chain.
PatternGadget build_naz_reflexive(const LocalTriangulationCertificate& cert);

} // namespace reconforge

#endif
