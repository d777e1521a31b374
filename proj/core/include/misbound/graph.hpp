#pragma once

#include "misbound/error.hpp"
#include "misbound/vertex_set.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace misbound {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1, at most 64 of them.
///
/// Rows are open neighbourhoods. Every constructor checks symmetry, absence of
/// self-loops and that no row mentions a vertex >= n.
class Graph {
public:
    /// The null graph (n = 0). Valid as a value; MIS(null) = {{}}.
    Graph() = default;

    static Graph from_adjacency(std::span<const VertexSet> rows);
    /// Duplicate edges are accepted and collapse. Self-loops and out-of-range
    /// endpoints throw DomainError.
    static Graph from_edges(int n, std::span<const Edge> edges);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::first_n(n_); }
    VertexSet neighbors(int u) const { return adj_[static_cast<std::size_t>(u)]; }
    int degree(int u) const { return neighbors(u).size(); }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    int edge_count() const;
    /// (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// Constructors for graph families.

/// K_k. k = 0 is rejected so that K_k always has k >= 1 vertices.
Graph complete_graph(int k);
Graph empty_graph(int n);
/// C_n, n >= 3.
Graph cycle_graph(int n);
/// P_n on n >= 1 vertices: 0-1-...-(n-1).
Graph path_graph(int n);
/// Vertices of `second` are shifted up by first.order().
Graph disjoint_union(const Graph& first, const Graph& second);
/// Extremal graph M_n for n >= 2: triangles, plus a leading K_4 when
/// n = 1 (mod 3) or a leading K_2 when n = 2 (mod 3).
Graph moon_moser(int n);

// Neighbourhood and deletion primitives.

VertexSet closed_neighborhood(const Graph& g, int v);

struct VertexDegree {
    int vertex;
    int degree;
    bool operator==(const VertexDegree&) const = default;
};

/// Lowest-index vertex of minimum degree. Throws DomainError on the null graph.
VertexDegree min_degree_vertex(const Graph& g);

/// An induced subgraph together with the sorted map new index -> old index.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> index_map;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);
/// G - N[w].
InducedSubgraph delete_closed_neighborhood(const Graph& g, int w);
/// Maps a set over subgraph indices back to the parent graph's indices.
VertexSet lift(VertexSet s, std::span<const int> index_map);

/// Relabels vertex v as perm[v]. `perm` must be a permutation of 0..n-1.
Graph permute(const Graph& g, std::span<const int> perm);

// Upper-triangle edge bitmaps.
//
// Pair (u, v) with u < v has index v(v-1)/2 + u, giving the order
// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... This is the graph6 body
// order and the bit order of sweep codes.

constexpr std::int64_t pair_count(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }
constexpr std::int64_t pair_index(int u, int v) { return static_cast<std::int64_t>(v) * (v - 1) / 2 + u; }

/// Builds a graph from a predicate answering "is pair k an edge?".
template <class BitAt>
Graph graph_from_pair_bits(int n, BitAt&& bit_at)
{
    if (n < 0 || n > kMaxVertices)
        throw CapacityError("graph order " + std::to_string(n) + " outside [0, 64]");
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    std::int64_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++k)
            if (bit_at(k)) {
                rows[static_cast<std::size_t>(u)].insert(v);
                rows[static_cast<std::size_t>(v)].insert(u);
            }
    return Graph::from_adjacency(rows);
}

/// Largest order whose pair bitmap fits one 64-bit code.
inline constexpr int kMaxCodeOrder = 11;

/// Bit k of `code` (least significant first) is pair k.
Graph graph_from_edge_code(int n, std::uint64_t code);
std::uint64_t edge_code(const Graph& g);

} // namespace misbound
