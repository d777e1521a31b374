#pragma once

#include "misbound/graph.hpp"

#include <string>
#include <string_view>

namespace misbound {

// Line-oriented edge list:
//
//   # comment
//   n 4
//   0 1
//   2 3
//
// The `n` header comes first so isolated vertices are representable. Vertices
// are 0-based. Anything after '#' on a line is ignored. Duplicate edges are
// accepted once; self-loops and out-of-range vertices throw DomainError;
// anything unparseable throws FormatError.

Graph parse_edge_list(std::string_view text);

/// Header line, then one "u v" line per edge with u < v, sorted.
std::string format_edge_list(const Graph& g);

} // namespace misbound
