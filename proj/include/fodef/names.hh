#pragma once

#include <fodef/graph.hh>

#include <string>
#include <string_view>
#include <vector>

namespace fodef
{
    /// Builds a graph from a constructor name such as "rook:3" or
    /// "gnp:20,0.5,12345". Throws InvalidArgument for unknown names.
    auto graph_from_name(std::string_view text) -> Graph;

    /// Constructor names, then existing file paths (first graph6 line), then
    /// graph6 literals.
    auto resolve_graph(const std::string & text) -> Graph;

    /// One line per constructor, for help output.
    auto constructor_names() -> std::vector<std::string>;
}
