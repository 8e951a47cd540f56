#include <fodef/constructors.hh>
#include <fodef/corpus.hh>
#include <fodef/errors.hh>

#include <algorithm>
#include <limits>

namespace fodef
{
    auto scan_labeled(int min_n, int max_n, const std::function<bool(const Graph &)> & predicate,
        Execution execution) -> ScanResult
    {
        if (min_n < 0 || max_n > 11)
            throw InvalidArgument("scan_labeled: requires 0 <= n <= 11");
        ScanResult result;
        for (int n = min_n; n <= max_n; ++n) {
            auto count = static_cast<long long>(std::uint64_t{1} << (n * (n - 1) / 2));
            long long failures = 0;
            auto first = std::numeric_limits<long long>::max();
            if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(static, 4096) reduction(+ : failures) reduction(min : first)
                for (long long mask = 0; mask < count; ++mask)
                    if (! predicate(graph_from_mask(n, static_cast<std::uint64_t>(mask)))) {
                        ++failures;
                        first = std::min(first, mask);
                    }
            }
            else
                for (long long mask = 0; mask < count; ++mask)
                    if (! predicate(graph_from_mask(n, static_cast<std::uint64_t>(mask)))) {
                        ++failures;
                        first = std::min(first, mask);
                    }
            result.graphs += count;
            result.failures += failures;
            if (failures > 0 && ! result.first_failure)
                result.first_failure = std::pair{n, static_cast<std::uint64_t>(first)};
        }
        return result;
    }
}
