#pragma once

#include "swcol/graph.hpp"

#include <filesystem>
#include <iosfwd>

namespace swcol {

/// DIMACS "col" format:
///   c <comment>
///   p edge <N> <M>
///   e <u> <v>        (1-indexed endpoints)
/// The writer emits edges as (min,max) pairs in lexicographic order, one per
/// line, so output is bit-exact for a given graph.
void write_dimacs(const Graph& g, std::ostream& os);
std::string dimacs_string(const Graph& g);

/// Parses the format above. Accepts endpoints in either order and comment
/// lines anywhere; rejects self-loops, duplicate edges, out-of-range indices,
/// and an edge count that disagrees with the header.
Graph read_dimacs(std::istream& is);

Graph read_dimacs_file(const std::filesystem::path& path);

} // namespace swcol
