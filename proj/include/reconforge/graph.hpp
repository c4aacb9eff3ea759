#ifndef RECONFORGE_GRAPH_HPP
#define RECONFORGE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace reconforge {

/// Finite undirected graph without multi-edges. Loops are allowed per vertex
/// and are represented as the edge (v,v). Vertex ids are dense 0..n-1; labels
/// are cosmetic. Intended to be immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    /// Number of non-loop edges.
    int edge_count() const { return edges_; }
    int loop_count() const { return loops_; }

    bool has_edge(int u, int v) const {
        return adj_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v >> 6)] >>
                   (v & 63) &
               1u;
    }
    bool has_loop(int v) const { return has_edge(v, v); }

    /// Adds the undirected edge uv (a loop when u == v). Idempotent.
    void add_edge(int u, int v);

    /// Sorted closed neighbourhood under loops: contains v itself iff v has a
    /// loop. This is the N(.) used by stiffness and listability checks.
    const std::vector<int>& neighbours(int v) const { return nbrs_[v]; }

    /// Degree not counting the loop.
    int degree(int v) const;

    bool is_reflexive() const;   // every vertex has a loop
    bool is_irreflexive() const; // no vertex has a loop

    void set_label(int v, std::string label);
    const std::string& label(int v) const { return labels_[v]; }

    /// All non-loop edges as (u,v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;
    /// Vertices carrying a loop, ascending.
    std::vector<int> loop_vertices() const;

    void check_vertex(int v, const char* what) const;

private:
    int n_ = 0;
    int edges_ = 0;
    int loops_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<std::string> labels_;
};

/// A vertex map G -> H, one target id per source vertex. Whether it is a
/// homomorphism is a property checked at use sites, not carried by the type.
using Colouring = std::vector<int>;

/// True iff every edge of G (loops included) maps to an edge of H.
/// Throws malformed_input_error when the map is not total or out of range.
bool is_homomorphism(const Graph& g, const Graph& h, const Colouring& m);

/// Vertex (u1,u2) of the product gets id u1*|V(F2)|+u2.
Graph categorical_product(const Graph& f1, const Graph& f2);

/// Bipartite double cover: categorical_product(H, K2) with (v,j) -> 2v+j and
/// canonical "(v,1)"/"(v,2)" labels.
Graph double_cover(const Graph& h);
int cover_vertex(int v, int sheet);

/// Distinct u,v with N(u) subseteq N(v) (closed neighbourhoods), if any.
/// The graph is stiff iff this returns nullopt.
std::optional<std::pair<int, int>> non_stiff_witness(const Graph& h);

struct CheckResult {
    bool ok = false;
    std::string reason; // empty when ok
    explicit operator bool() const { return ok; }
};

/// True iff phi is a homomorphism F -> F whose image lies in h_vertices and
/// which fixes h_vertices pointwise. Failures come back as reasons.
CheckResult check_retraction(const Graph& f, const std::vector<int>& h_vertices,
                             const Colouring& phi);

/// One fold/dismantle step: if some u is dominated (N(u) subseteq N(v)),
/// returns the graph with u removed together with the quotient map old->new.
std::optional<std::pair<Graph, Colouring>> fold_step(const Graph& h);

/// Iterates fold_step to a fixed point; returns the stiff core and the
/// composed quotient map.
std::pair<Graph, Colouring> fold_core(const Graph& h);

/// Connectivity of the underlying graph (loops ignored); the empty graph and
/// singletons are connected.
bool is_connected(const Graph& g);

/// 2-colouring of the underlying irreflexive graph, part 0 containing the
/// smallest vertex of each component. nullopt when an odd cycle or loop exists.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Brute-force isomorphism search, meant for graphs up to ~12 vertices.
std::optional<Colouring> find_isomorphism(const Graph& a, const Graph& b);
bool is_isomorphic(const Graph& a, const Graph& b);

/// Subgraph of G induced by `vertices` (ascending); new ids follow the order
/// of `vertices`.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

} // namespace reconforge

#endif
