#ifndef TURAN_GRAPH_IO_HPP
#define TURAN_GRAPH_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Malformed textual graph input; `offset` is the byte position of the first
// offending character within the line/stream handed in.
struct FormatError : std::runtime_error {
    FormatError(const std::string& what, std::size_t offset_)
        : std::runtime_error(what), offset(offset_) {}
    std::size_t offset;
};

// Standard graph6: 6-bit chunks of the upper-triangle adjacency in
// column-major order, each chunk offset by 63.
std::string graph6_encode(const Graph& g);
// Decodes one graph6 line; an optional ">>graph6<<" header is skipped.
Graph graph6_decode(std::string_view line);

// Plain text edge list: "n m" then m lines "u v".
std::string edge_list_encode(const Graph& g);
Graph edge_list_decode(std::string_view text);

// One graph per line of a file/stream in either format (auto-detected per
// line: a line with two decimal numbers starts an edge-list block).
std::vector<Graph> read_graph_file(const std::string& path);

// Named shortcuts: K5, K3,3,2, C7, P4, T10:3. Returns false if the name does
// not look like a shortcut at all.
bool parse_graph_shortcut(std::string_view name, Graph& out);

// Shortcut if it looks like one, otherwise the first graph of the file.
Graph load_graph_argument(const std::string& arg);

}  // namespace turan

#endif  // TURAN_GRAPH_IO_HPP
