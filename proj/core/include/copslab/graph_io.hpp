#pragma once

#include <filesystem>
#include <iosfwd>

#include "copslab/graph.hpp"

namespace copslab {

// Text format: first data line "n m", then m lines "u v" (0-based ids).
// Lines starting with '#' are comments.

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

}  // namespace copslab
