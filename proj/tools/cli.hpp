#pragma once

#include "misbound/enumerate.hpp"
#include "misbound/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace misbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool with `args` (program name excluded). Returns the exit code:
/// 0 on success, 1 on validation failure or bound violation, 2 on usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Families accepted by `generate` and `bench`: moon-moser, complete, cycle, path, empty.
Graph make_family(std::string_view family, int n);

struct BenchRow {
    int n;
    std::uint64_t count;
    double seconds;
    /// seconds / seconds of the row for n - 3, when that row exists.
    std::optional<double> ratio;
};

/// Times count_mis over the family for n_min..n_max. moon-moser advances n
/// by 3 so consecutive counts differ by a factor of 3; other families by 1.
std::vector<BenchRow> run_bench(std::string_view family, int n_min, int n_max, EnumAlgorithm algo);

/// Tab-separated: header "n count seconds ratio", ratio "NA" when undefined.
std::string format_bench_tsv(const std::vector<BenchRow>& rows);

} // namespace misbound::cli
