#include "misbound/graph6.hpp"

#include <istream>

namespace misbound {

namespace {

constexpr int kOffset = 63;
constexpr int kBitsPerByte = 6;

std::size_t body_length(int n)
{
    return static_cast<std::size_t>((pair_count(n) + kBitsPerByte - 1) / kBitsPerByte);
}

} // namespace

std::string encode_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw CapacityError("graph6 short form covers n <= 62, got " + std::to_string(n));
    std::string out(1 + body_length(n), static_cast<char>(kOffset));
    out[0] = static_cast<char>(kOffset + n);
    for (auto [u, v] : g.edges()) {
        const auto k = pair_index(u, v);
        out[static_cast<std::size_t>(1 + k / kBitsPerByte)] +=
            static_cast<char>(1 << (kBitsPerByte - 1 - k % kBitsPerByte));
    }
    return out;
}

Graph decode_graph6(std::string_view text, PadBits pad)
{
    if (text.empty()) throw Graph6Error(Graph6Fault::malformed, "empty graph6 string");
    for (char c : text) {
        const auto byte = static_cast<unsigned char>(c);
        if (byte < kOffset || byte > 126)
            throw Graph6Error(Graph6Fault::malformed,
                              "graph6 byte " + std::to_string(byte) + " outside 63..126");
    }
    const int n = static_cast<unsigned char>(text[0]) - kOffset;
    if (n > kGraph6MaxOrder)
        throw CapacityError("long-form graph6 headers (n >= 63) are not supported");

    const std::string_view body = text.substr(1);
    if (body.size() != body_length(n))
        throw Graph6Error(Graph6Fault::wrong_length,
                          "graph6 body for n = " + std::to_string(n) + " needs " +
                              std::to_string(body_length(n)) + " bytes, got " + std::to_string(body.size()));

    const auto bit_at = [body](std::int64_t k) {
        const int value = static_cast<unsigned char>(body[static_cast<std::size_t>(k / kBitsPerByte)]) - kOffset;
        return ((value >> (kBitsPerByte - 1 - k % kBitsPerByte)) & 1) != 0;
    };
    if (pad == PadBits::strict)
        for (auto k = pair_count(n); k < static_cast<std::int64_t>(body.size()) * kBitsPerByte; ++k)
            if (bit_at(k)) throw Graph6Error(Graph6Fault::nonzero_padding, "graph6 pad bits are not zero");

    return graph_from_pair_bits(n, bit_at);
}

std::vector<Graph> read_graph6_lines(std::istream& in, PadBits pad)
{
    std::vector<Graph> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view = line;
        if (first && view.starts_with(">>graph6<<")) view.remove_prefix(10);
        first = false;
        if (view.empty()) continue;
        out.push_back(decode_graph6(view, pad));
    }
    return out;
}

} // namespace misbound
