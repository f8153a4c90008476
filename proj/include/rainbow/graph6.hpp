#pragma once

#include <string>
#include <string_view>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Largest order representable by the graph6 encodings we accept
/// (one-byte form up to 62, the 4-byte `~` form up to 258047).
inline constexpr int kGraph6MaxOrder = 258047;

/// Decodes one graph6 line (no `>>graph6<<` header, trailing newline/CR tolerated).
/// Throws ParseError on a malformed size field, out-of-range characters,
/// a wrong body length, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes `g` as graph6 without header or newline.
std::string emit_graph6(const Graph& g);

}  // namespace rainbow
