#include "misbound/verify.hpp"

#include "misbound/bound.hpp"
#include "misbound/error.hpp"
#include "misbound/graph6.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace misbound {

namespace {

struct PartialSweep {
    std::uint64_t checked = 0;
    std::uint64_t max_count = 0;
    std::vector<std::uint64_t> extremal_codes;
};

PartialSweep sweep_range(int n, EnumAlgorithm algo, std::uint64_t begin, std::uint64_t end,
                         std::uint64_t bound)
{
    PartialSweep part;
    for (std::uint64_t code = begin; code < end; ++code) {
        const std::uint64_t count = count_mis(graph_from_edge_code(n, code), algo);
        ++part.checked;
        part.max_count = std::max(part.max_count, count);
        if (count == bound) part.extremal_codes.push_back(code);
    }
    return part;
}

// Pair bitmap with pair 0 in the most significant used position, so that the
// numeric order is the lexicographic order of the bit sequence.
std::uint64_t lexicographic_key(const Graph& g)
{
    const auto pairs = pair_count(g.order());
    std::uint64_t key = 0;
    for (auto [u, v] : g.edges()) key |= std::uint64_t{1} << (pairs - 1 - pair_index(u, v));
    return key;
}

} // namespace

BoundCertificate::BoundCertificate(int n, std::uint64_t graphs_checked, std::uint64_t max_count_observed,
                                   std::uint64_t extremal_labeled_count,
                                   std::vector<Graph> extremal_witnesses,
                                   std::chrono::duration<double> elapsed)
    : n_(n),
      graphs_checked_(graphs_checked),
      max_count_observed_(max_count_observed),
      bound_(moon_moser_bound(n)),
      extremal_labeled_count_(extremal_labeled_count),
      extremal_witnesses_(std::move(extremal_witnesses)),
      elapsed_(elapsed)
{
    enforce_bound(n_, max_count_observed_);
    for (const Graph& w : extremal_witnesses_)
        if (w.order() != n_ || count_mis(w, EnumAlgorithm::pivot) != bound_)
            throw BoundViolation("extremal witness does not attain g(" + std::to_string(n_) + ")");
}

BoundCertificate sweep_all_graphs(int n, EnumAlgorithm algo, SweepOptions options)
{
    if (n < 0) throw DomainError("negative vertex count");
    if (n > kSweepLongRunOrder || (n == kSweepLongRunOrder && !options.long_run))
        throw CapacityError("exhaustive sweep covers n <= " + std::to_string(kSweepMaxOrder) +
                            " (n = " + std::to_string(kSweepLongRunOrder) +
                            " needs the long-run option), got " + std::to_string(n));

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    const std::uint64_t bound = moon_moser_bound(n);
    unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));

    std::vector<PartialSweep> parts(jobs);
    std::vector<std::exception_ptr> failures(jobs);
    {
        std::vector<std::jthread> workers;
        for (unsigned i = 0; i < jobs; ++i) {
            const std::uint64_t begin = total * i / jobs;
            const std::uint64_t end = total * (i + 1) / jobs;
            workers.emplace_back([&, i, begin, end] {
                try {
                    parts[i] = sweep_range(n, algo, begin, end, bound);
                } catch (...) {
                    failures[i] = std::current_exception();
                }
            });
        }
    }
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    std::uint64_t checked = 0;
    std::uint64_t max_count = 0;
    std::uint64_t extremal = 0;
    std::map<std::uint64_t, Graph> classes;
    for (const PartialSweep& part : parts) {
        checked += part.checked;
        max_count = std::max(max_count, part.max_count);
        extremal += part.extremal_codes.size();
        for (std::uint64_t code : part.extremal_codes) {
            const Graph canon = canonical_form(graph_from_edge_code(n, code));
            classes.emplace(lexicographic_key(canon), canon);
        }
    }
    std::vector<Graph> witnesses;
    for (auto& [key, g] : classes) witnesses.push_back(g);

    return BoundCertificate(n, checked, max_count, extremal, std::move(witnesses),
                            std::chrono::steady_clock::now() - start);
}

Graph canonical_form(const Graph& g)
{
    const int n = g.order();
    if (n > kSweepLongRunOrder)
        throw CapacityError("canonical form is factorial-time; n <= 8, got " + std::to_string(n));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Graph best = g;
    std::uint64_t best_key = lexicographic_key(g);
    while (std::next_permutation(perm.begin(), perm.end())) {
        Graph candidate = permute(g, perm);
        const std::uint64_t key = lexicographic_key(candidate);
        if (key < best_key) {
            best_key = key;
            best = std::move(candidate);
        }
    }
    return best;
}

std::vector<Graph> extremal_census(int n)
{
    if (n > kSweepMaxOrder)
        throw CapacityError("extremal census covers n <= 7, got " + std::to_string(n));
    return sweep_all_graphs(n, EnumAlgorithm::pivot).extremal_witnesses();
}

Graph random_graph(int n, std::mt19937_64& rng)
{
    if (n < 0 || n > kMaxVertices) throw CapacityError("graph order outside [0, 64]");
    std::vector<std::uint64_t> words(static_cast<std::size_t>((pair_count(n) + 63) / 64));
    for (auto& w : words) w = rng();
    return graph_from_pair_bits(n, [&words](std::int64_t k) {
        return ((words[static_cast<std::size_t>(k / 64)] >> (k % 64)) & 1U) != 0;
    });
}

bool spot_check_random(int n, int samples, std::uint64_t seed)
{
    if (n < 8 || n > 20) throw DomainError("random spot checks cover 8 <= n <= 20");
    std::mt19937_64 rng(seed);
    const std::uint64_t bound = moon_moser_bound(n);
    for (int i = 0; i < samples; ++i) {
        const Graph g = random_graph(n, rng);
        try {
            const MisReport reference = enumerate_pivot(g);
            if (reference.count > bound) return false;
            if (enumerate_branching(g).sets != reference.sets) return false;
            if (enumerate_oracle(g).sets != reference.sets) return false;
        } catch (const BoundViolation&) {
            return false;
        }
    }
    return true;
}

std::string format_certificate(const BoundCertificate& cert, bool include_elapsed)
{
    std::ostringstream out;
    out << "n: " << cert.n() << '\n'
        << "graphs_checked: " << cert.graphs_checked() << '\n'
        << "max_count_observed: " << cert.max_count_observed() << '\n'
        << "bound: " << cert.bound() << '\n'
        << "violations: 0\n"
        << "extremal_labeled_count: " << cert.extremal_labeled_count() << '\n'
        << "extremal_classes: " << cert.extremal_witnesses().size() << '\n';
    for (const Graph& w : cert.extremal_witnesses()) out << "witness: " << encode_graph6(w) << '\n';
    if (include_elapsed)
        out << "elapsed_seconds: " << std::fixed << std::setprecision(3) << cert.elapsed().count() << '\n';
    return out.str();
}

void write_witnesses(std::ostream& out, const BoundCertificate& cert)
{
    for (const Graph& w : cert.extremal_witnesses()) out << encode_graph6(w) << '\n';
}

} // namespace misbound
