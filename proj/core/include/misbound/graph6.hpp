#pragma once

#include "misbound/error.hpp"
#include "misbound/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace misbound {

/// Short-form graph6 only: one header byte 63 + n, so n <= 62.
inline constexpr int kGraph6MaxOrder = 62;

enum class Graph6Fault {
    malformed,        ///< byte outside 63..126, or empty input
    wrong_length,     ///< body shorter or longer than n requires
    nonzero_padding,  ///< unused low bits of the last byte are set (strict mode)
};

class Graph6Error : public FormatError {
public:
    Graph6Error(Graph6Fault fault, const std::string& what) : FormatError(what), fault_(fault) {}
    Graph6Fault fault() const { return fault_; }

private:
    Graph6Fault fault_;
};

enum class PadBits {
    strict,  ///< nonzero pad bits are an error
    lenient, ///< pad bits are ignored
};

/// Header byte 63 + n, then the upper-triangle pairs packed six per byte,
/// most significant bit first, each byte offset by 63, last byte zero-padded.
std::string encode_graph6(const Graph& g);

/// Inverse of encode_graph6. No surrounding whitespace is accepted.
Graph decode_graph6(std::string_view text, PadBits pad = PadBits::strict);

/// One graph per line. Blank lines and a leading ">>graph6<<" marker are skipped,
/// trailing '\r' is stripped.
std::vector<Graph> read_graph6_lines(std::istream& in, PadBits pad = PadBits::strict);

} // namespace misbound
