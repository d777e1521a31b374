#include "misbound/graph.hpp"

#include <algorithm>
#include <string>

namespace misbound {

namespace {

void check_order(int n)
{
    if (n < 0 || n > kMaxVertices)
        throw CapacityError("graph order " + std::to_string(n) + " outside [0, 64]");
}

void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw DomainError("vertex " + std::to_string(v) + " out of range for graph of order " +
                          std::to_string(g.order()));
}

} // namespace

Graph Graph::from_adjacency(std::span<const VertexSet> rows)
{
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const VertexSet all = VertexSet::first_n(n);
    Graph g;
    g.n_ = n;
    for (int u = 0; u < n; ++u) {
        const VertexSet row = rows[static_cast<std::size_t>(u)];
        if (!row.subset_of(all))
            throw DomainError("row " + std::to_string(u) + " names a vertex >= " + std::to_string(n));
        if (row.contains(u))
            throw DomainError("self-loop at vertex " + std::to_string(u));
        for (int v : row)
            if (!rows[static_cast<std::size_t>(v)].contains(u))
                throw DomainError("asymmetric adjacency between " + std::to_string(u) + " and " +
                                  std::to_string(v));
        g.adj_[static_cast<std::size_t>(u)] = row;
    }
    return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    check_order(n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") out of range for n = " + std::to_string(n));
        if (u == v)
            throw DomainError("self-loop at vertex " + std::to_string(u));
        rows[static_cast<std::size_t>(u)].insert(v);
        rows[static_cast<std::size_t>(v)].insert(u);
    }
    return from_adjacency(rows);
}

int Graph::edge_count() const
{
    int twice = 0;
    for (int u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u) - VertexSet::first_n(u + 1)) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const
{
    return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph complete_graph(int k)
{
    if (k < 1) throw DomainError("complete graph needs k >= 1");
    check_order(k);
    const VertexSet all = VertexSet::first_n(k);
    std::vector<VertexSet> rows;
    for (int u = 0; u < k; ++u) rows.push_back(all - VertexSet::singleton(u));
    return Graph::from_adjacency(rows);
}

Graph empty_graph(int n)
{
    check_order(n);
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    return Graph::from_adjacency(rows);
}

Graph cycle_graph(int n)
{
    if (n < 3) throw DomainError("cycle needs n >= 3");
    check_order(n);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n)
{
    if (n < 1) throw DomainError("path needs n >= 1");
    check_order(n);
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& first, const Graph& second)
{
    const int offset = first.order();
    const int n = offset + second.order();
    if (n > kMaxVertices)
        throw CapacityError("disjoint union has " + std::to_string(n) + " vertices, more than 64");
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int u = 0; u < offset; ++u) rows[static_cast<std::size_t>(u)] = first.neighbors(u);
    for (int u = 0; u < second.order(); ++u)
        rows[static_cast<std::size_t>(u + offset)] = VertexSet(second.neighbors(u).bits() << offset);
    return Graph::from_adjacency(rows);
}

Graph moon_moser(int n)
{
    if (n < 2) throw DomainError("M_n is defined for n >= 2");
    check_order(n);
    Graph g;
    int triangles = n / 3;
    switch (n % 3) {
    case 1:
        g = complete_graph(4);
        triangles = (n - 4) / 3;
        break;
    case 2:
        g = complete_graph(2);
        break;
    default:
        break;
    }
    const Graph triangle = complete_graph(3);
    for (int i = 0; i < triangles; ++i) g = disjoint_union(g, triangle);
    return g;
}

VertexSet closed_neighborhood(const Graph& g, int v)
{
    check_vertex(g, v);
    return g.neighbors(v) | VertexSet::singleton(v);
}

VertexDegree min_degree_vertex(const Graph& g)
{
    if (g.order() == 0) throw DomainError("null graph has no vertices");
    VertexDegree best{0, g.degree(0)};
    for (int u = 1; u < g.order(); ++u)
        if (g.degree(u) < best.degree) best = {u, g.degree(u)};
    return best;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep)
{
    keep &= g.vertices();
    std::array<int, kMaxVertices> new_index{};
    InducedSubgraph out;
    out.index_map.reserve(static_cast<std::size_t>(keep.size()));
    for (int v : keep) {
        new_index[static_cast<std::size_t>(v)] = static_cast<int>(out.index_map.size());
        out.index_map.push_back(v);
    }
    std::vector<VertexSet> rows(out.index_map.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int v : g.neighbors(out.index_map[i]) & keep)
            rows[i].insert(new_index[static_cast<std::size_t>(v)]);
    out.graph = Graph::from_adjacency(rows);
    return out;
}

InducedSubgraph delete_closed_neighborhood(const Graph& g, int w)
{
    return induced_subgraph(g, g.vertices() - closed_neighborhood(g, w));
}

VertexSet lift(VertexSet s, std::span<const int> index_map)
{
    VertexSet out;
    for (int i : s) out.insert(index_map[static_cast<std::size_t>(i)]);
    return out;
}

Graph permute(const Graph& g, std::span<const int> perm)
{
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n) throw DomainError("permutation size mismatch");
    VertexSet seen;
    for (int p : perm) {
        if (p < 0 || p >= n || seen.contains(p)) throw DomainError("not a permutation");
        seen.insert(p);
    }
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])].insert(
                perm[static_cast<std::size_t>(v)]);
    return Graph::from_adjacency(rows);
}

Graph graph_from_edge_code(int n, std::uint64_t code)
{
    if (n > kMaxCodeOrder)
        throw CapacityError("edge codes cover n <= 11, got " + std::to_string(n));
    if (n >= 0 && pair_count(n) < 64 && (code >> pair_count(n)) != 0)
        throw DomainError("edge code has bits beyond the last pair");
    return graph_from_pair_bits(n, [code](std::int64_t k) { return ((code >> k) & 1U) != 0; });
}

std::uint64_t edge_code(const Graph& g)
{
    if (g.order() > kMaxCodeOrder)
        throw CapacityError("edge codes cover n <= 11, got " + std::to_string(g.order()));
    std::uint64_t code = 0;
    for (auto [u, v] : g.edges()) code |= std::uint64_t{1} << pair_index(u, v);
    return code;
}

} // namespace misbound
