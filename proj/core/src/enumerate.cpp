#include "misbound/enumerate.hpp"

#include "misbound/bound.hpp"
#include "misbound/error.hpp"

#include <algorithm>
#include <string>

namespace misbound {

namespace {

void check_within(const Graph& g, VertexSet s)
{
    if (!s.subset_of(g.vertices()))
        throw DomainError("vertex set names a vertex outside a graph of order " +
                          std::to_string(g.order()));
}

bool independent_unchecked(const Graph& g, VertexSet s)
{
    for (int u : s)
        if (g.neighbors(u).intersects(s)) return false;
    return true;
}

bool dominating_unchecked(const Graph& g, VertexSet s)
{
    for (int v : g.vertices() - s)
        if (!g.neighbors(v).intersects(s)) return false;
    return true;
}

void canonicalize(std::vector<VertexSet>& sets)
{
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

// Oracle --------------------------------------------------------------------

template <class Emit>
std::uint64_t scan_subsets(const Graph& g, Emit&& emit)
{
    if (g.order() > kOracleMaxOrder)
        throw CapacityError("oracle enumerator handles n <= 25, got " + std::to_string(g.order()));
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const VertexSet s(mask);
        if (independent_unchecked(g, s) && dominating_unchecked(g, s)) emit(s);
    }
    return limit;
}

// Branching -----------------------------------------------------------------

struct BranchContext {
    std::uint64_t calls = 0;
    int max_depth = 0;
};

std::vector<VertexSet> branch(const Graph& g, int depth, BranchContext& ctx,
                              EnumStats* root_stats, std::optional<BranchRoot>* root)
{
    ctx.max_depth = std::max(ctx.max_depth, depth);
    if (g.order() == 0) return {VertexSet{}};

    const auto [v, d] = min_degree_vertex(g);
    std::vector<VertexSet> out;
    int branches = 0;
    for (int w : closed_neighborhood(g, v)) {
        const InducedSubgraph rest = delete_closed_neighborhood(g, w);
        ++ctx.calls;
        ++branches;
        for (VertexSet j : branch(rest.graph, depth + 1, ctx, nullptr, nullptr))
            out.push_back(lift(j, rest.index_map) | VertexSet::singleton(w));
    }
    if (root_stats != nullptr) {
        root_stats->candidates_generated = out.size();
        *root = BranchRoot{v, d, branches};
    }
    canonicalize(out);
    return out;
}

// Pivot ---------------------------------------------------------------------

struct PivotSearch {
    const Graph& g;
    VertexSet all;
    std::uint64_t calls = 0;
    int max_depth = 0;

    VertexSet non_neighbors(int u) const { return all - g.neighbors(u) - VertexSet::singleton(u); }

    // Maximal cliques of the complement are maximal independent sets of g.
    template <class Emit>
    void expand(VertexSet grown, VertexSet candidates, VertexSet excluded, int depth, Emit& emit)
    {
        max_depth = std::max(max_depth, depth);
        if (candidates.empty()) {
            if (excluded.empty()) emit(grown);
            return;
        }
        int pivot = -1;
        int best = -1;
        for (int u : candidates | excluded) {
            const int reach = (candidates & non_neighbors(u)).size();
            if (reach > best) {
                best = reach;
                pivot = u;
            }
        }
        for (int v : candidates - non_neighbors(pivot)) {
            const VertexSet nv = non_neighbors(v);
            ++calls;
            expand(grown | VertexSet::singleton(v), candidates & nv, excluded & nv, depth + 1, emit);
            candidates.erase(v);
            excluded.insert(v);
        }
    }
};

template <class Emit>
void run_pivot(const Graph& g, EnumStats& stats, Emit&& emit)
{
    PivotSearch search{g, g.vertices()};
    std::uint64_t emitted = 0;
    auto counting_emit = [&](VertexSet s) {
        ++emitted;
        emit(s);
    };
    search.expand(VertexSet{}, g.vertices(), VertexSet{}, 0, counting_emit);
    stats.candidates_generated = emitted;
    stats.recursive_calls = search.calls;
    stats.max_depth = search.max_depth;
}

} // namespace

std::string_view to_string(EnumAlgorithm algo)
{
    switch (algo) {
    case EnumAlgorithm::oracle: return "oracle";
    case EnumAlgorithm::branching: return "branching";
    case EnumAlgorithm::pivot: return "pivot";
    }
    return "unknown";
}

EnumAlgorithm parse_algorithm(std::string_view name)
{
    for (auto algo : {EnumAlgorithm::oracle, EnumAlgorithm::branching, EnumAlgorithm::pivot})
        if (name == to_string(algo)) return algo;
    throw DomainError("unknown algorithm '" + std::string(name) + "'");
}

bool is_independent(const Graph& g, VertexSet s)
{
    check_within(g, s);
    return independent_unchecked(g, s);
}

bool is_maximal_independent(const Graph& g, VertexSet s)
{
    check_within(g, s);
    return independent_unchecked(g, s) && dominating_unchecked(g, s);
}

void enforce_bound(int n, std::uint64_t count)
{
    const std::uint64_t bound = moon_moser_bound(n);
    if (count > bound)
        throw BoundViolation("Moon-Moser theorem violated: " + std::to_string(count) +
                             " maximal independent sets on " + std::to_string(n) +
                             " vertices, but g(n) = " + std::to_string(bound));
}

MisReport enumerate_oracle(const Graph& g)
{
    MisReport report;
    report.stats.candidates_generated = scan_subsets(g, [&](VertexSet s) { report.sets.push_back(s); });
    report.count = report.sets.size();
    enforce_bound(g.order(), report.count);
    return report;
}

MisReport enumerate_branching(const Graph& g)
{
    MisReport report;
    BranchContext ctx;
    report.sets = branch(g, 0, ctx, &report.stats, &report.root);
    if (g.order() == 0) report.stats.candidates_generated = 1;
    report.stats.recursive_calls = ctx.calls;
    report.stats.max_depth = ctx.max_depth;
    report.count = report.sets.size();
    enforce_bound(g.order(), report.count);
    return report;
}

MisReport enumerate_pivot(const Graph& g)
{
    MisReport report;
    run_pivot(g, report.stats, [&](VertexSet s) { report.sets.push_back(s); });
    std::sort(report.sets.begin(), report.sets.end());
    report.count = report.sets.size();
    enforce_bound(g.order(), report.count);
    return report;
}

MisReport enumerate(const Graph& g, EnumAlgorithm algo)
{
    switch (algo) {
    case EnumAlgorithm::oracle: return enumerate_oracle(g);
    case EnumAlgorithm::branching: return enumerate_branching(g);
    case EnumAlgorithm::pivot: return enumerate_pivot(g);
    }
    throw DomainError("unknown algorithm");
}

std::uint64_t count_mis(const Graph& g, EnumAlgorithm algo)
{
    std::uint64_t count = 0;
    switch (algo) {
    case EnumAlgorithm::oracle:
        scan_subsets(g, [&](VertexSet) { ++count; });
        break;
    case EnumAlgorithm::branching:
        return enumerate_branching(g).count;
    case EnumAlgorithm::pivot: {
        EnumStats stats;
        run_pivot(g, stats, [&](VertexSet) { ++count; });
        break;
    }
    }
    enforce_bound(g.order(), count);
    return count;
}

} // namespace misbound
