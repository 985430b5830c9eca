#pragma once

#include "dal/graph.hpp"

#include <string>
#include <string_view>

namespace dal {

/// graph6 encoding without header or trailing newline. Orders up to 62 use a
/// single size byte; larger orders use the 4- and 8-byte forms.
auto encode_graph6(const Graph & g) -> std::string;

/// Accepts an optional ">>graph6<<" prefix and trailing "\r\n". Rejects
/// characters outside 63..126, wrong lengths and non-zero padding bits with
/// Error(MalformedInput).
auto decode_graph6(std::string_view line) -> Graph;

} // namespace dal
