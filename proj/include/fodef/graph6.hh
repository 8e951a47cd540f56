#pragma once

#include <fodef/graph.hh>

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace fodef
{
    /// graph6 encoding (no trailing newline). Supports n < 2^18.
    auto graph6_encode(const Graph & g) -> std::string;

    /// Decodes one graph6 string. An optional ">>graph6<<" header and
    /// surrounding whitespace are accepted. Throws Graph6Error with the byte
    /// offset of the first malformed byte.
    auto graph6_decode(std::string_view text) -> Graph;

    /// One graph per non-empty line.
    auto graph6_read_all(std::istream & in) -> std::vector<Graph>;
}
