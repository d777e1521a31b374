#pragma once

// Reference implementations used only by tests. They share nothing with the
// library beyond reading a graph's edge list: adjacency is a boolean matrix,
// sets are sorted vectors, and every check is a direct transcription of the
// definition.

#include "misbound/enumerate.hpp"
#include "misbound/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace misbound::oracle {

using NaiveSet = std::vector<int>;

struct NaiveGraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    explicit NaiveGraph(const Graph& g) : n(g.order()), adj(n, std::vector<bool>(n, false))
    {
        for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
    }
};

inline bool naive_independent(const NaiveGraph& g, const NaiveSet& s)
{
    for (int u : s)
        for (int v : s)
            if (g.adj[u][v]) return false;
    return true;
}

// No independent proper superset exists; checking single-vertex extensions is
// enough because independence is hereditary.
inline bool naive_maximal(const NaiveGraph& g, const NaiveSet& s)
{
    if (!naive_independent(g, s)) return false;
    for (int v = 0; v < g.n; ++v) {
        if (std::find(s.begin(), s.end(), v) != s.end()) continue;
        NaiveSet bigger = s;
        bigger.push_back(v);
        if (naive_independent(g, bigger)) return false;
    }
    return true;
}

/// All maximal independent sets, each sorted, the family sorted lexicographically.
inline std::vector<NaiveSet> naive_mis(const Graph& graph)
{
    const NaiveGraph g(graph);
    std::vector<NaiveSet> out;
    NaiveSet current;
    std::function<void(int)> choose = [&](int v) {
        if (v == g.n) {
            if (naive_maximal(g, current)) out.push_back(current);
            return;
        }
        choose(v + 1);
        current.push_back(v);
        choose(v + 1);
        current.pop_back();
    };
    choose(0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<NaiveSet> as_naive(const std::vector<VertexSet>& sets)
{
    std::vector<NaiveSet> out;
    for (VertexSet s : sets) out.push_back(s.to_vector());
    std::sort(out.begin(), out.end());
    return out;
}

/// Largest product over all partitions of n, by explicit enumeration of
/// partitions in non-increasing part order. Exponential; fine for n <= 40.
inline std::uint64_t naive_max_product(int n)
{
    std::uint64_t best = 0;
    std::function<void(int, int, std::uint64_t)> walk = [&](int left, int max_part, std::uint64_t product) {
        if (left == 0) {
            best = std::max(best, product);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) walk(left - p, p, product * static_cast<std::uint64_t>(p));
    };
    walk(n, n, 1);
    return best;
}

} // namespace misbound::oracle
