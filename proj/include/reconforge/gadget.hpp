#ifndef RECONFORGE_GADGET_HPP
#define RECONFORGE_GADGET_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reconforge/embedding.hpp"
#include "reconforge/graph.hpp"
#include "reconforge/oracle.hpp"
#include "reconforge/surface.hpp"

namespace reconforge {

/// A pattern gadget Y(x): a graph with ordered signal vertices, a pattern set
/// P of admissible signal tuples, and one canonical host-colouring per
/// pattern. Builders certify the canonical condition on construction; the
/// confinement and transition conditions are checked by
/// verify_pattern_gadget.
struct PatternGadget {
    std::string kind;
    Graph graph;
    Graph host;
    MoveRule rule = MoveRule::Irreflexive;
    std::vector<int> signals;
    std::vector<std::vector<int>> patterns;            // sorted
    std::map<std::vector<int>, Colouring> canonical;   // p -> zeta_p

    // provenance, for the CLI's benefit
    std::vector<std::pair<int, int>> phi_pairs; // pair path behind the build
    std::string provenance;

    std::vector<int> signal_values(const Colouring& c) const;
    bool pattern_member(const std::vector<int>& tuple) const;
};

/// Pair-transition digraph: vertices are ordered pairs (across pairs in the
/// quadrangulation case, listable adjacent pairs in the reflexive case); an
/// arc (a,b) -> (c,d) needs ac, bc, bd edges and ad a non-edge.
struct PhiDigraph {
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> index;
    std::vector<std::vector<int>> out_arcs; // sorted target indices
    std::vector<std::vector<int>> in_arcs;
    std::vector<int> pair_face; // quad case: face of each across pair; else -1

    int arc_count() const;
    bool has_pair(std::pair<int, int> p) const { return index.count(p) != 0; }
    bool has_arc(std::pair<int, int> a, std::pair<int, int> b) const;
};

/// True iff (ac, bc, bd in E) and (ad not in E).
bool phi_arc(const Graph& h, std::pair<int, int> from, std::pair<int, int> to);

/// Shortest directed path between two pairs (BFS, deterministic order),
/// endpoints included. Throws certificate_violation when none exists.
std::vector<std::pair<int, int>> phi_path(const PhiDigraph& phi, std::pair<int, int> from,
                                          std::pair<int, int> to);

/// Builds Phi over the across pairs of a validated K23-free sphere
/// quadrangulation and enforces the structural facts that hold there:
/// in/out degrees exactly 2, arc reversal symmetry, the undirected underlying
/// graph coinciding with the face-adjacency graph Gamma, and Gamma
/// connectivity. Violations name the failed guarantee.
PhiDigraph build_phi_quad(const Graph& h, const Embedding& e);

/// Not-both-one style gadget from a directed Phi-path: frozen host copy plus
/// a path whose i-th vertex joins the two common neighbours of the i-th pair.
/// Patterns {(a0,b0),(a1,b0),(a0,b1)}; requires a0 across a1 and b0 across b1.
PatternGadget build_nbo_quad(const Graph& h, const Embedding& e, int a0, int a1, int b0, int b1);

/// Not-all-zero gadget on the four signals, patterns {0,1}^4 minus all-zero,
/// assembled from four not-both-one gadgets, a shared host copy, the
/// x/y linking vertices and a final two-signal gadget.
PatternGadget build_naz_quad(const Graph& h, const Embedding& e, const Anchor& anchor);

struct GadgetVerification {
    bool condition_a = false; // canonical colourings realise their patterns
    bool condition_b = false; // reachable signal tuples stay inside P
    bool condition_c = false; // single-coordinate transitions realizable
    bool cap_exceeded = false;
    std::uint64_t states_explored = 0;
    std::uint64_t largest_component = 0;
    std::vector<std::string> failures;

    bool ok() const { return condition_a && condition_b && condition_c && !cap_exceeded; }
};

/// Exhaustive certification of the three gadget conditions via the oracle.
/// CapExceeded is reported distinctly from a refuted condition.
GadgetVerification verify_pattern_gadget(const PatternGadget& g, MoveRule rule,
                                         std::uint64_t cap = default_state_cap);
GadgetVerification verify_pattern_gadget(const PatternGadget& g,
                                         std::uint64_t cap = default_state_cap);

/// Incremental graph assembler used to splice gadget templates together.
class GraphBuilder {
public:
    int add_vertex(std::string label = "");
    void add_edge(int u, int v);
    int size() const { return n_; }

    /// Copies `part` into the graph; vertices pinned in `pinned` map onto
    /// existing ids, everything else becomes a fresh vertex. Returns the full
    /// part-vertex -> new-id map.
    std::vector<int> splice(const Graph& part, const std::map<int, int>& pinned);

    Graph build() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::pair<int, std::string>> labels_;
};

/// Two-stage single-flip transition sequence between canonical colourings of
/// adjacent patterns: moves keeping the tuple at p, one signal flip, moves
/// keeping it at q. Used by the reduction's witness lifting.
struct FlipSequence {
    std::vector<std::pair<int, int>> pre_moves;  // (vertex, colour), tuple stays p
    std::pair<int, int> flip;                    // the signal move
    std::vector<std::pair<int, int>> post_moves; // tuple stays q
};

/// Throws certificate_violation when no single-flip sequence exists (cannot
/// happen for verified gadgets built here).
FlipSequence single_flip_sequence(const PatternGadget& g, const std::vector<int>& p,
                                  const std::vector<int>& q, std::uint64_t cap = default_state_cap);

} // namespace reconforge

#endif
