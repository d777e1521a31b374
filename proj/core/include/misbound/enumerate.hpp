#pragma once

#include "misbound/graph.hpp"
#include "misbound/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace misbound {

enum class EnumAlgorithm {
    oracle,    ///< scan every vertex subset
    branching, ///< branch on N[v] for a minimum-degree v, recurse on G - N[w]
    pivot,     ///< Bron-Kerbosch with pivoting on the complement graph
};

std::string_view to_string(EnumAlgorithm algo);
/// Accepts "oracle", "branching", "pivot"; throws DomainError otherwise.
EnumAlgorithm parse_algorithm(std::string_view name);

struct EnumStats {
    /// Oracle: subsets scanned (2^n). Branching: sets emitted by the root's
    /// branches before deduplication. Pivot: sets emitted (never duplicates).
    std::uint64_t candidates_generated = 0;
    /// Recursive invocations below the root.
    std::uint64_t recursive_calls = 0;
    /// Deepest recursion level reached; the root is level 0.
    int max_depth = 0;

    bool operator==(const EnumStats&) const = default;
};

/// How the branching enumerator split the input at the top level.
struct BranchRoot {
    int vertex;   ///< minimum-degree vertex v
    int degree;   ///< deg(v)
    int branches; ///< recursive calls spawned, one per w in N[v]

    bool operator==(const BranchRoot&) const = default;
};

struct MisReport {
    /// Maximal independent sets, ascending by bitset value, no duplicates.
    std::vector<VertexSet> sets;
    std::uint64_t count = 0;
    EnumStats stats;
    /// Set only by the branching enumerator on a non-null graph.
    std::optional<BranchRoot> root;
};

/// Largest order the subset-scan oracle accepts.
inline constexpr int kOracleMaxOrder = 25;

/// Throws DomainError if `s` names a vertex >= g.order().
bool is_independent(const Graph& g, VertexSet s);
bool is_maximal_independent(const Graph& g, VertexSet s);

/// Throws BoundViolation when count > g(n).
void enforce_bound(int n, std::uint64_t count);

MisReport enumerate_oracle(const Graph& g);
MisReport enumerate_branching(const Graph& g);
MisReport enumerate_pivot(const Graph& g);
MisReport enumerate(const Graph& g, EnumAlgorithm algo);

/// Number of maximal independent sets. Oracle and pivot count without storing
/// sets; branching has to materialise them to remove duplicates.
std::uint64_t count_mis(const Graph& g, EnumAlgorithm algo);

} // namespace misbound
