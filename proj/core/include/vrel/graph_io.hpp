#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vrel/graph.hpp"

namespace vrel {

// Edge-list text: "n m" on the first line, then m lines "i j" with i < j,
// 0-based, sorted lexicographically, each line '\n'-terminated.
std::string to_edge_list(const SimpleGraph& g);
SimpleGraph parse_edge_list(std::string_view text);

// graph6 (n <= 64 here); the optional ">>graph6<<" header is accepted on read.
std::string to_graph6(const SimpleGraph& g);
SimpleGraph parse_graph6(std::string_view text);

// Format picked by extension: ".el" edge list, ".g6" graph6.
SimpleGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const SimpleGraph& g);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace vrel
