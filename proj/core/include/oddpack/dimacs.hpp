#pragma once

#include <filesystem>
#include <iosfwd>

#include "oddpack/graph.hpp"

namespace oddpack {

/// Reads `p edge <n> <m>` followed by m `e <u> <v>` lines (1-indexed).
/// Lines starting with `c` and blank lines are skipped. Loops, duplicate
/// edges, out-of-range ids and count mismatches raise ParseError.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::filesystem::path& path);

void write_dimacs(std::ostream& out, const Graph& g);

}  // namespace oddpack
