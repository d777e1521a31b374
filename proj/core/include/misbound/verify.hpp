#pragma once

#include "misbound/enumerate.hpp"
#include "misbound/graph.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

namespace misbound {

/// Largest n swept by default (2^21 labeled graphs).
inline constexpr int kSweepMaxOrder = 7;
/// Largest n swept with SweepOptions::long_run (2^28 labeled graphs).
inline constexpr int kSweepLongRunOrder = 8;

struct SweepOptions {
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned jobs = 0;
    /// Permit n = kSweepLongRunOrder.
    bool long_run = false;
};

/// Outcome of an exhaustive sweep over every labeled graph on n vertices.
///
/// Construction fails with BoundViolation if max_count_observed exceeds g(n)
/// or a witness does not attain g(n).
class BoundCertificate {
public:
    BoundCertificate(int n, std::uint64_t graphs_checked, std::uint64_t max_count_observed,
                     std::uint64_t extremal_labeled_count, std::vector<Graph> extremal_witnesses,
                     std::chrono::duration<double> elapsed);

    int n() const { return n_; }
    std::uint64_t graphs_checked() const { return graphs_checked_; }
    std::uint64_t max_count_observed() const { return max_count_observed_; }
    std::uint64_t bound() const { return bound_; }
    /// Labeled graphs with exactly g(n) maximal independent sets.
    std::uint64_t extremal_labeled_count() const { return extremal_labeled_count_; }
    /// One canonical representative per isomorphism class attaining g(n),
    /// ordered by canonical code.
    const std::vector<Graph>& extremal_witnesses() const { return extremal_witnesses_; }
    std::chrono::duration<double> elapsed() const { return elapsed_; }

private:
    int n_;
    std::uint64_t graphs_checked_;
    std::uint64_t max_count_observed_;
    std::uint64_t bound_;
    std::uint64_t extremal_labeled_count_;
    std::vector<Graph> extremal_witnesses_;
    std::chrono::duration<double> elapsed_;
};

/// Enumerates all 2^(n(n-1)/2) labeled graphs, decoding integer c as the edge
/// code of graph_from_edge_code, and counts maximal independent sets with
/// `algo`. The code range is split into contiguous chunks, one per worker;
/// partial results are merged in chunk order.
BoundCertificate sweep_all_graphs(int n, EnumAlgorithm algo, SweepOptions options = {});

/// Canonical labeling: the relabeling whose pair bitmap, read in pair order
/// (0,1), (0,2), (1,2), ..., is lexicographically smallest. Factorial time;
/// n <= 8.
Graph canonical_form(const Graph& g);

/// Canonical representatives of every isomorphism class on n <= 7 vertices
/// with g(n) maximal independent sets.
std::vector<Graph> extremal_census(int n);

/// G(n, 1/2): pair k is an edge iff bit (k mod 64) of the (k / 64)-th draw of
/// `rng` is set.
Graph random_graph(int n, std::mt19937_64& rng);

/// Draws `samples` graphs G(n, 1/2) from std::mt19937_64 seeded with `seed`
/// and checks that every enumerator returns the same family and that the count
/// stays within g(n). Requires 8 <= n <= 20.
bool spot_check_random(int n, int samples, std::uint64_t seed);

/// `key: value` lines. Without elapsed the text is a pure function of the sweep.
std::string format_certificate(const BoundCertificate& cert, bool include_elapsed = true);
/// graph6, one witness per line.
void write_witnesses(std::ostream& out, const BoundCertificate& cert);

} // namespace misbound
