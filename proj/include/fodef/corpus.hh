#pragma once

#include <fodef/graph.hh>
#include <fodef/pebble.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

namespace fodef
{
    struct ScanResult
    {
        long long graphs = 0;
        long long failures = 0;
        /// Least (n, mask) on which the predicate failed.
        std::optional<std::pair<int, std::uint64_t>> first_failure;
    };

    /// Runs the predicate on every labeled graph graph_from_mask(n, mask)
    /// with min_n <= n <= max_n. Requires max_n <= 11 so masks fit 64 bits.
    auto scan_labeled(int min_n, int max_n, const std::function<bool(const Graph &)> & predicate,
        Execution execution = Execution::Parallel) -> ScanResult;
}
