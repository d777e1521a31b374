#include "cli.hpp"

#include "misbound/bound.hpp"
#include "misbound/edge_list.hpp"
#include "misbound/error.hpp"
#include "misbound/graph6.hpp"
#include "misbound/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace misbound::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string path;
    std::string inline_graph6;
    std::string format = "auto";
    std::string algo = "pivot";
};

std::string read_all(std::istream& in)
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool looks_like_edge_list(std::string_view text)
{
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start == std::string_view::npos) return false;
    text.remove_prefix(start);
    if (text[0] == '#') return true;
    if (text.size() >= 2 && text[0] == 'n' && (text[1] == ' ' || text[1] == '\t')) return true;
    return static_cast<unsigned char>(text[0]) < 63;
}

std::vector<Graph> load_graphs(const InputOptions& opts, std::istream& in)
{
    if (!opts.path.empty() && !opts.inline_graph6.empty())
        throw UsageError("give either an input file or --graph6, not both");

    std::string text;
    if (!opts.inline_graph6.empty()) {
        text = opts.inline_graph6;
    } else if (!opts.path.empty() && opts.path != "-") {
        std::ifstream file(opts.path, std::ios::binary);
        if (!file) throw UsageError("cannot open " + opts.path);
        text = read_all(file);
    } else {
        text = read_all(in);
    }
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw UsageError("no input graph");

    const bool edge_list =
        opts.format == "edgelist" || (opts.format == "auto" && looks_like_edge_list(text));
    if (edge_list) return {parse_edge_list(text)};
    std::istringstream lines(text);
    return read_graph6_lines(lines);
}

void print_set(std::ostream& out, VertexSet s)
{
    bool first = true;
    for (int v : s) {
        out << (first ? "" : " ") << v;
        first = false;
    }
    out << '\n';
}

void add_input_options(CLI::App* cmd, InputOptions& opts)
{
    cmd->add_option("input", opts.path, "graph file (graph6 lines or edge list); stdin if omitted");
    cmd->add_option("--graph6", opts.inline_graph6, "inline graph6 string");
    cmd->add_option("--format", opts.format, "input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    cmd->add_option("--algo", opts.algo, "enumerator")
        ->check(CLI::IsMember({"oracle", "branching", "pivot"}));
}

int cmd_bound(bool have_n, int n, bool have_table, int table_max, bool check, std::ostream& out)
{
    if (!have_n && !have_table && !check) throw UsageError("bound needs n, --table or --check");
    if (have_n) out << moon_moser_bound(n) << '\n';
    if (have_table)
        for (int k = 0; k <= table_max; ++k) out << k << ' ' << moon_moser_bound(k) << '\n';
    if (!check) return kExitOk;

    bool all = true;
    auto report = [&](std::string_view name, bool ok) {
        out << name << ' ' << (ok ? "PASS" : "FAIL") << '\n';
        all = all && ok;
    };
    bool sandwich = true;
    for (int k = 4; k <= kBoundGuard; ++k) sandwich = sandwich && sandwich_check(k);
    report("sandwich", sandwich);
    report("nondecreasing", g_is_nondecreasing(kBoundGuard));
    bool product = true;
    for (int k = 2; k <= kBoundGuard; ++k) product = product && max_product_partition(k) == moon_moser_bound(k);
    report("product_partition", product);
    bool high = true;
    for (int k = 4; k <= kBoundGuard; ++k)
        for (int d = 3; d < k; ++d) high = high && high_degree_case(k, d) <= 0;
    report("high_degree_case", high);
    bool two = true;
    for (int k = 3; k <= kBoundGuard; ++k) two = two && degree_two_case(k) <= 0;
    report("degree_two_case", two);
    bool one = true;
    for (int k = 2; k <= kBoundGuard; ++k) one = one && degree_one_case(k) <= 0;
    report("degree_one_case", one);
    return all ? kExitOk : kExitFailure;
}

} // namespace

Graph make_family(std::string_view family, int n)
{
    if (family == "moon-moser") return moon_moser(n);
    if (family == "complete") return complete_graph(n);
    if (family == "cycle") return cycle_graph(n);
    if (family == "path") return path_graph(n);
    if (family == "empty") return empty_graph(n);
    throw DomainError("unknown family '" + std::string(family) + "'");
}

std::vector<BenchRow> run_bench(std::string_view family, int n_min, int n_max, EnumAlgorithm algo)
{
    using clock = std::chrono::steady_clock;
    constexpr std::chrono::duration<double> kMinSample{0.02};

    const int step = family == "moon-moser" ? 3 : 1;
    std::vector<BenchRow> rows;
    for (int n = n_min; n <= n_max; n += step) {
        const Graph g = make_family(family, n);
        std::uint64_t count = 0;
        int reps = 0;
        const auto start = clock::now();
        std::chrono::duration<double> spent{};
        do {
            count = count_mis(g, algo);
            ++reps;
            spent = clock::now() - start;
        } while (spent < kMinSample);
        BenchRow row{n, count, spent.count() / reps, std::nullopt};
        const auto previous = std::find_if(rows.begin(), rows.end(), [&](const BenchRow& r) { return r.n == n - 3; });
        if (previous != rows.end() && previous->seconds > 0) row.ratio = row.seconds / previous->seconds;
        rows.push_back(row);
    }
    return rows;
}

std::string format_bench_tsv(const std::vector<BenchRow>& rows)
{
    std::ostringstream out;
    out << "n\tcount\tseconds\tratio\n";
    for (const BenchRow& r : rows) {
        out << r.n << '\t' << r.count << '\t' << std::scientific << std::setprecision(6) << r.seconds << '\t';
        if (r.ratio)
            out << std::fixed << std::setprecision(3) << *r.ratio;
        else
            out << "NA";
        out << '\n';
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Maximal independent set enumeration and Moon-Moser bound checks", "misbound"};
    app.require_subcommand(1);

    // bound
    int bound_n = 0;
    int table_max = 0;
    bool check = false;
    auto* bound = app.add_subcommand("bound", "print g(n), the maximum number of maximal independent sets");
    auto* bound_n_opt = bound->add_option("n", bound_n, "vertex count")->check(CLI::NonNegativeNumber);
    auto* table_opt = bound->add_option("--table", table_max, "print n and g(n) for 0..N")->check(CLI::NonNegativeNumber);
    bound->add_flag("--check", check, "check the structural inequalities of g over the whole guard range");

    // generate
    std::string family;
    int gen_n = 0;
    auto* generate = app.add_subcommand("generate", "emit a graph family member as graph6");
    generate->add_option("family", family, "graph family")
        ->required()
        ->check(CLI::IsMember({"moon-moser", "complete", "cycle", "path", "empty"}));
    generate->add_option("n", gen_n, "vertex count")->required();

    // count
    InputOptions count_opts;
    bool stats = false;
    auto* count = app.add_subcommand("count", "count maximal independent sets");
    add_input_options(count, count_opts);
    count->add_flag("--stats", stats, "also print enumeration counters");

    // enumerate
    InputOptions enum_opts;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "print every maximal independent set");
    add_input_options(enumerate_cmd, enum_opts);

    // verify
    int verify_n = 0;
    std::string verify_algo = "pivot";
    unsigned jobs = 0;
    std::string witness_path;
    bool long_run = false;
    auto* verify = app.add_subcommand("verify", "check the bound on every labeled graph with n vertices");
    verify->add_option("n", verify_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--algo", verify_algo, "enumerator")->check(CLI::IsMember({"oracle", "branching", "pivot"}));
    verify->add_option("--jobs", jobs, "worker threads (default: hardware concurrency)");
    verify->add_option("--witnesses", witness_path, "write extremal witnesses as graph6");
    verify->add_flag("--long-run", long_run, "allow n = 8 (2^28 graphs)");

    // bench
    std::string bench_family = "moon-moser";
    int n_min = 0;
    int n_max = 0;
    std::string bench_algo = "pivot";
    auto* bench = app.add_subcommand("bench", "time counting across a graph family, TSV output");
    bench->add_option("--family", bench_family, "graph family")
        ->check(CLI::IsMember({"moon-moser", "complete", "cycle", "path", "empty"}));
    bench->add_option("--n-min", n_min, "smallest n")->required();
    bench->add_option("--n-max", n_max, "largest n")->required();
    bench->add_option("--algo", bench_algo, "enumerator")->check(CLI::IsMember({"oracle", "branching", "pivot"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bound->parsed())
            return cmd_bound(bound_n_opt->count() > 0, bound_n, table_opt->count() > 0, table_max, check, out);

        if (generate->parsed()) {
            out << encode_graph6(make_family(family, gen_n)) << '\n';
            return kExitOk;
        }

        if (count->parsed()) {
            const EnumAlgorithm algo = parse_algorithm(count_opts.algo);
            for (const Graph& g : load_graphs(count_opts, in)) {
                if (!stats) {
                    out << count_mis(g, algo) << '\n';
                    continue;
                }
                const MisReport report = enumerate(g, algo);
                out << report.count << '\n'
                    << "candidates_generated: " << report.stats.candidates_generated << '\n'
                    << "recursive_calls: " << report.stats.recursive_calls << '\n'
                    << "max_depth: " << report.stats.max_depth << '\n';
            }
            return kExitOk;
        }

        if (enumerate_cmd->parsed()) {
            const auto graphs = load_graphs(enum_opts, in);
            if (graphs.size() != 1) throw UsageError("enumerate takes exactly one graph");
            for (VertexSet s : enumerate(graphs.front(), parse_algorithm(enum_opts.algo)).sets) print_set(out, s);
            return kExitOk;
        }

        if (verify->parsed()) {
            const BoundCertificate cert =
                sweep_all_graphs(verify_n, parse_algorithm(verify_algo), SweepOptions{jobs, long_run});
            out << "algorithm: " << verify_algo << '\n' << format_certificate(cert);
            if (!witness_path.empty()) {
                std::ofstream file(witness_path);
                if (!file) throw DomainError("cannot write " + witness_path);
                write_witnesses(file, cert);
            }
            return kExitOk;
        }

        if (bench->parsed()) {
            if (n_min > n_max) throw UsageError("--n-min must not exceed --n-max");
            out << format_bench_tsv(run_bench(bench_family, n_min, n_max, parse_algorithm(bench_algo)));
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BoundViolation& e) {
        err << "FATAL: " << e.what() << '\n';
        return kExitFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

} // namespace misbound::cli
