#pragma once

#include <filesystem>
#include <string>

#include "matchstick/graph.hpp"

namespace matchstick {

// Graph files are JSON text:
//   {"version":1,"disk":{"center":[cx,cy],"radius":r}|null,
//    "vertices":[[x,y],...],"edges":[[i,j],...]}
// Coordinates are written with 17 significant digits so a reload is
// bit-exact. Reading is strict: unknown fields, i >= j and unsorted or
// duplicated edges are FormatError.

std::string to_json_text(const MatchstickGraph& g);
MatchstickGraph graph_from_json_text(const std::string& text);

void save_graph(const MatchstickGraph& g, const std::filesystem::path& path);
MatchstickGraph load_graph(const std::filesystem::path& path);

/// Writes `text` to `path`, throwing FormatError on I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace matchstick
