#ifndef RECONFORGE_ORACLE_HPP
#define RECONFORGE_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "reconforge/graph.hpp"

namespace reconforge {

/// Single-vertex recolouring rule. Reflexive additionally requires the new
/// colour to be a neighbour of the old one.
enum class MoveRule { Irreflexive, Reflexive };

inline const char* to_string(MoveRule r) {
    return r == MoveRule::Irreflexive ? "irreflexive" : "reflexive";
}

/// Reconfiguration sequence f_0..f_m; consecutive steps differ on exactly one
/// vertex, every step is a homomorphism, and the move rule is respected.
struct Witness {
    std::vector<Colouring> steps;

    std::size_t move_count() const { return steps.empty() ? 0 : steps.size() - 1; }
};

inline constexpr std::uint64_t default_state_cap = 10'000'000;

/// All H-colourings of G found by backtracking with forward checking, in
/// lexicographic order (vertex id, then colour id). `cap` bounds the number
/// of colourings returned; exceeding it is an explicit signal.
struct EnumerationResult {
    std::vector<Colouring> homs;
    bool cap_exceeded = false;
};
EnumerationResult enumerate_homs(const Graph& g, const Graph& h,
                                 std::uint64_t cap = default_state_cap);

/// Every single-vertex recolouring of f that stays a homomorphism (and obeys
/// the rule), ordered by vertex id then colour id. Excludes f itself.
std::vector<Colouring> hom_neighbours(const Graph& g, const Graph& h, const Colouring& f,
                                      MoveRule rule);

/// Read-only view of a packed BFS state.
struct StateView {
    const std::uint64_t* words;
    int bits;

    int get(int v) const {
        const std::size_t pos = static_cast<std::size_t>(v) * bits;
        const std::size_t w = pos >> 6;
        const int off = static_cast<int>(pos & 63);
        std::uint64_t x = words[w] >> off;
        if (off + bits > 64) x |= words[w + 1] << (64 - off);
        return static_cast<int>(x & ((std::uint64_t{1} << bits) - 1));
    }
};

using StatePredicate = std::function<bool(const StateView&)>;

struct ExploreOptions {
    MoveRule rule = MoveRule::Irreflexive;
    std::uint64_t cap = default_state_cap;
    /// When set, successors failing the predicate are not entered; they are
    /// counted in rejected_moves instead.
    StatePredicate admit;
    /// When set, the search stops as soon as a state satisfying this is
    /// discovered (witness returned when parents are recorded).
    StatePredicate stop_when;
    bool record_parents = false;
    /// Extra states whose membership in the explored component is reported.
    std::vector<Colouring> probes;
};

struct ExploreResult {
    bool target_found = false; // target state or stop_when hit
    bool exhausted = false;    // component fully explored (within admit)
    bool cap_exceeded = false;
    std::uint64_t states = 0;
    std::uint64_t rejected_moves = 0;         // successors vetoed by admit
    std::optional<Colouring> sample_rejected; // one vetoed successor, if any
    std::vector<char> colour_changed;         // per vertex: differs from start somewhere
    std::optional<Witness> witness;           // start -> target, when recorded
    std::vector<char> probe_hit;
};

/// BFS over the component of `start` in the Hom-graph restricted to
/// single-vertex moves. Deterministic: vertices ascending, colours ascending.
/// Throws precondition_error when start/target are not homomorphisms, and
/// when |V(H)| > 64 (the packed-state engine's limit).
ExploreResult explore_component(const Graph& g, const Graph& h, const Colouring& start,
                                const Colouring* target, const ExploreOptions& options);

enum class ReachStatus { Reachable, Unreachable, CapExceeded };

inline const char* to_string(ReachStatus s) {
    switch (s) {
        case ReachStatus::Reachable: return "reachable";
        case ReachStatus::Unreachable: return "unreachable";
        default: return "cap-exceeded";
    }
}

struct ReachResult {
    ReachStatus status = ReachStatus::CapExceeded;
    std::optional<Witness> witness; // shortest, when reachable
    std::uint64_t states_explored = 0;
    std::uint64_t cap = 0;
};

/// BFS reachability from f to g. Unreachable is only reported once the whole
/// component of f has been exhausted.
ReachResult reachable(const Graph& g, const Graph& h, const Colouring& f, const Colouring& gcol,
                      MoveRule rule, std::uint64_t cap = default_state_cap);

struct FrozenResult {
    std::vector<bool> frozen; // meaningful when exhausted
    bool exhausted = false;
    std::uint64_t states = 0;
};

/// Vertices whose colour is constant over the component of f.
FrozenResult frozen_vertices(const Graph& g, const Graph& h, const Colouring& f, MoveRule rule,
                             std::uint64_t cap = default_state_cap);

struct WitnessCheck {
    bool ok = false;
    std::size_t first_failure = 0; // index of the offending step when !ok
    std::string reason;
};

/// Checks the three Witness invariants without any search.
WitnessCheck validate_witness(const Graph& g, const Graph& h, const Witness& w, MoveRule rule);

} // namespace reconforge

#endif
