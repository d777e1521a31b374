#include "misbound/edge_list.hpp"

#include "misbound/error.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace misbound {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

int parse_int(std::string_view token, std::size_t line_no)
{
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || end != token.data() + token.size())
        throw FormatError("line " + std::to_string(line_no) + ": '" + std::string(token) +
                          "' is not an integer");
    return value;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::optional<int> n;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        if (!n) {
            if (tokens.size() != 2 || tokens[0] != "n")
                throw FormatError("line " + std::to_string(line_no) + ": expected header 'n <count>'");
            const int order = parse_int(tokens[1], line_no);
            if (order < 0) throw FormatError("negative vertex count");
            if (order > kMaxVertices)
                throw CapacityError("edge list declares " + std::to_string(order) + " vertices, more than 64");
            n = order;
            continue;
        }
        if (tokens.size() != 2)
            throw FormatError("line " + std::to_string(line_no) + ": expected 'u v'");
        const int u = parse_int(tokens[0], line_no);
        const int v = parse_int(tokens[1], line_no);
        if (u == v) throw DomainError("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
        if (u < 0 || v < 0 || u >= *n || v >= *n)
            throw DomainError("line " + std::to_string(line_no) + ": vertex out of range for n = " +
                              std::to_string(*n));
        edges.emplace_back(u, v);
    }
    if (!n) throw FormatError("missing 'n <count>' header");
    return Graph::from_edges(*n, edges);
}

std::string format_edge_list(const Graph& g)
{
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace misbound
