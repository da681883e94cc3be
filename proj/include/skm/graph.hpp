#ifndef SKM_GRAPH_HPP
#define SKM_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace skm {

/// Simple undirected graph on vertices 0..n-1, no loops or multi-edges.
/// Adjacency is stored as one 64-bit row mask per vertex, which caps the
/// order at 64 -- more than the toolkit ever needs (graph6 itself stops
/// at 62 with a one-byte header).
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    explicit Graph(int n = 0);

    int order() const { return n_; }
    std::size_t edge_count() const;
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    /// Bit mask of neighbors of v.
    std::uint64_t neighbor_mask(int v) const { return rows_[v]; }
    int degree(int v) const;

    /// Edges as (u,v) pairs with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    int n_;
    std::vector<std::uint64_t> rows_;

    void check_vertex(int v) const;
};

/// A subset of the vertices of some graph.
using VertexSet = std::vector<int>;

/// Validates s against g (range, duplicates) and packs it into a bit mask.
std::uint64_t vertex_mask(const Graph& g, const VertexSet& s);

/// Component structure of a graph: the multiset of component orders plus
/// the two counts the Tutte-type criteria need -- odd components of order
/// at least 3, and isolated vertices.
struct ComponentSummary {
    std::vector<int> orders;  // ascending
    int odd_big = 0;          // components of odd order >= 3
    int isolated = 0;         // components of order 1
};

// Constructors for the join/union graph algebra.
Graph complete(int m);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph copies(int m, const Graph& g);
Graph join(const Graph& g1, const Graph& g2);

/// Induced subgraph on V(g)\s, surviving vertices relabeled to
/// 0..n-|s|-1 in their original relative order.
Graph delete_vertices(const Graph& g, const VertexSet& s);

ComponentSummary component_summary(const Graph& g);

/// (odd_big, isolated) of the subgraph induced on keep_mask, without
/// materializing it. Hot path of the deficiency scans.
std::pair<int, int> component_counts_on(const Graph& g, std::uint64_t keep_mask);

bool is_connected(const Graph& g);

/// Vertex connectivity; kappa(K_n) = n-1 by convention. Requires n >= 2.
int vertex_connectivity(const Graph& g);

/// Adjacency-preserving bijection test via invariant-pruned backtracking.
/// Intended for n <= 16.
bool are_isomorphic(const Graph& g1, const Graph& g2);

/// Canonical form for n <= 16: the maximum, over vertex orderings
/// compatible with an iterated degree refinement, of the upper-triangle
/// adjacency bit string. Equal codes <=> isomorphic.
unsigned __int128 canonical_code(const Graph& g);

/// Rebuilds the graph a canonical code describes.
Graph graph_from_code(unsigned __int128 code, int n);

// graph6 (n <= 62, single-byte header) and edge-list text formats.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);
Graph parse_edge_list(const std::string& text);

}  // namespace skm

#endif
