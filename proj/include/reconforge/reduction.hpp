#ifndef RECONFORGE_REDUCTION_HPP
#define RECONFORGE_REDUCTION_HPP

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "reconforge/gadget.hpp"
#include "reconforge/oracle.hpp"

namespace reconforge {

/// Host-side material for the reduction: the graph H, the two designated
/// vertices playing 0 and 1, and the verified gadget templates. Sequence
/// lookups are memoized, so a kit instance is not safe to share across
/// threads.
struct HostKit {
    std::string kind; // "quad" or "reflexive"
    Graph host;
    MoveRule rule = MoveRule::Irreflexive;
    int v0 = -1, v1 = -1;
    PatternGadget nbo; // {(0,0),(1,0),(0,1)} on (v0,v1)
    PatternGadget naz; // {0,1}^4 minus all-zero

    const FlipSequence& transition(bool naz_gadget, const std::vector<int>& p,
                                   const std::vector<int>& q) const;

private:
    mutable std::map<std::tuple<bool, std::vector<int>, std::vector<int>>, FlipSequence> cache_;
};

/// Builds the irreflexive kit from a validated K23-free sphere
/// quadrangulation: 0 is the anchor's degree-3 vertex, 1 the ring vertex
/// across from it.
std::shared_ptr<const HostKit> make_quad_host_kit(const Graph& h, const Embedding& e);

/// Builds the reflexive kit from a locally-triangulated certificate: 0 is the
/// certificate's centre, 1 the first ring vertex.
std::shared_ptr<const HostKit> make_reflexive_host_kit(const Graph& h, int zero,
                                                       const std::vector<int>& f_vertices);

enum class GadgetKind { NotBothOne, NotAllZero };

struct GadgetInstance {
    int id = -1;
    GadgetKind kind = GadgetKind::NotBothOne;
    int source_u = -1, source_v = -1, colour = -1; // NBO: ordered edge + layer
    int source_vertex = -1;                        // NAZ: the G-vertex
    std::vector<int> signals;    // signal ids in G'
    std::vector<int> vertex_map; // template vertex -> G' vertex
};

/// The compiled instance (G', f', g') with the bookkeeping needed for
/// projection and witness lifting.
struct ReductionBundle {
    std::shared_ptr<const HostKit> kit;
    Graph source;      // G
    Colouring source_f, source_g; // proper K4-colourings of G
    Graph g_prime;
    Colouring f_prime, g_prime_colouring;
    std::vector<std::array<int, 4>> signal_index; // [u][i] -> vertex u_i
    std::vector<GadgetInstance> gadgets;

    /// G'-colouring canonically representing a K4-colouring of G.
    Colouring represent(const Colouring& k4) const;
};

/// Steps 1-4: four signal vertices per G-vertex, both ordered not-both-one
/// gadgets per edge per colour layer, one not-all-zero gadget per vertex;
/// f' and g' extend the signal encoding by canonical gadget colourings.
ReductionBundle compile(const Graph& g, const Colouring& f, const Colouring& gcol,
                        std::shared_ptr<const HostKit> kit);

/// Backward projection: u gets the least colour whose signal shows 1.
/// Throws certificate_violation when no signal is 1 (a not-all-zero breach)
/// or when the result is improper (a not-both-one breach).
Colouring project(const ReductionBundle& bundle, const Colouring& psi);

/// Witness fragment realising one K4 move, built from the gadget transition
/// schedule (both endpoints included).
Witness lift_move(const ReductionBundle& bundle, const Colouring& from, const Colouring& to);

/// Concatenation of lift_move fragments along a K4 witness.
Witness lift_sequence(const ReductionBundle& bundle, const Witness& k4_witness);

} // namespace reconforge

#endif
