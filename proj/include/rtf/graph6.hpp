#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rtf/graph.hpp"

namespace rtf {

struct graph6_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph6 text encoding: size header (1, 4 or 8 bytes), then the upper
// triangle x(i,j), i<j, ordered column by column, packed big-endian into
// 6-bit groups offset by 63. Encoding preserves vertex labels bit-exactly.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

// one graph per line, blank lines skipped, optional ">>graph6<<" header
std::vector<Graph> graph6_read_file(const std::string& path);
void graph6_write_file(const std::string& path, const std::vector<Graph>& graphs);

// debugging dump: one line per vertex, "v: n1 n2 ..."
std::string adjacency_dump(const Graph& g);

}  // namespace rtf
