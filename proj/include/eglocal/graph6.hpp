#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "eglocal/errors.hpp"
#include "eglocal/graph.hpp"

namespace eglocal {

/// Decodes one graph6 record (an optional ">>graph6<<" prefix is accepted).
/// Throws Graph6Error naming the offending byte offset.
Graph parse_graph6(std::string_view line);

/// Encodes g; uses the 4-byte size header for n >= 63.
std::string to_graph6(const Graph& g);

/// One record read from a corpus stream.
struct Graph6Record {
    std::size_t line = 0;  // 1-based
    std::string text;
};

/// Reads non-empty lines, skipping a bare ">>graph6<<" header and trailing whitespace.
std::vector<Graph6Record> read_graph6_records(std::istream& in);

}  // namespace eglocal
