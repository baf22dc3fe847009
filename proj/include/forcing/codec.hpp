// codec.hpp
// Interchange formats: graph6 (single-byte size, n <= 62), a plain
// edge-list text format, and the multigraph text format.
#pragma once

#include <string>
#include <string_view>

#include "forcing/graph.hpp"

namespace forcing {

// Standard graph6 line, no header. Throws BadParameter for n > 62.
std::string to_graph6(const SimpleGraph& g);

// Accepts an optional ">>graph6<<" header. Rejects sparse6 (':' / ';')
// and digraph6 ('&') input and any multi-byte size form.
SimpleGraph from_graph6(std::string_view line);

// Edge list: first line "n", then one "u v" line per edge.
std::string to_edgelist(const SimpleGraph& g);
SimpleGraph from_edgelist(std::string_view text);

// Multigraph text: first line "n", then one "u v mult" line per
// unordered pair with positive multiplicity.
std::string to_multigraph_text(const Multigraph& m);
Multigraph from_multigraph_text(std::string_view text);

} // namespace forcing
