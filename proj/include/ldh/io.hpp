#pragma once

#include <string>
#include <string_view>

#include "ldh/hypergraph.hpp"

namespace ldh {

// Text format:
//   vertices <n>
//   edge <id> <id> ...
// one edge per line, 0-based ids, '#' starts a comment, blank lines ignored.
// The vertices line must precede all edge lines. Throws syntax_error with a
// "line N:" prefix on malformed input; build() errors pass through.
hypergraph parse_hypergraph(std::string_view text, build_options opts = {});

hypergraph parse_hypergraph_file(const std::string& path, build_options opts = {});

// Inverse of parse_hypergraph up to comments/blank lines: edges in stored
// order, ids ascending within an edge. parse(serialize(h)) == h bit-exactly.
std::string serialize_hypergraph(const hypergraph& h);

} // namespace ldh
