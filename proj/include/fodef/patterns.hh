#pragma once

#include <fodef/graph.hh>

#include <array>
#include <optional>
#include <vector>

namespace fodef
{
    /// Backtracking search for an induced copy of F in G. On success,
    /// element i is the vertex of G playing vertex i of F.
    auto contains_induced(const Graph & g, const Graph & f) -> std::optional<std::vector<int>>;

    /// Sorted triangle, found by intersecting neighbourhood rows.
    auto find_triangle(const Graph & g) -> std::optional<std::array<int, 3>>;

    /// Every component is triangle-free or complete multipartite.
    auto is_paw_free(const Graph & g) -> bool;

    auto has_induced_paw(const Graph & g) -> bool;
    /// Some vertex has three pairwise non-adjacent neighbours.
    auto has_induced_claw(const Graph & g) -> bool;
    /// Some edge has two non-adjacent common neighbours.
    auto has_induced_diamond(const Graph & g) -> bool;
    auto has_induced_p4(const Graph & g) -> bool;

    /// Components of G[block] (complemented = false) or of its complement.
    /// Blocks are sorted and ordered by smallest member.
    auto split_block(const Graph & g, const std::vector<int> & block, bool complemented) -> std::vector<std::vector<int>>;

    using Partition = std::vector<std::vector<int>>;

    /// Pi_0 = components of G; Pi_(i+1) splits each block of Pi_i into
    /// the components of the complement of its level-i graph. The graph of
    /// a level-i block is G[B] for even i and the complement of G[B] for odd i.
    class Decomposition
    {
        std::vector<Partition> _levels;
        std::vector<std::vector<int>> _block_of;

        friend auto decomposition(const Graph &) -> Decomposition;

    public:
        /// Pi_0 .. Pi_s where s is the stabilization depth.
        auto levels() const -> const std::vector<Partition> & { return _levels; }
        /// Least i with Pi_(i+1) = Pi_i.
        auto stabilization_depth() const -> int { return static_cast<int>(_levels.size()) - 1; }
        /// Pi_i; levels past stabilization repeat the final partition.
        auto partition(int i) const -> const Partition &;
        /// Index into partition(i) of the block holding v.
        auto env(int i, int v) const -> int;
    };

    auto decomposition(const Graph & g) -> Decomposition;

    /// Blocks of the stabilized decomposition.
    auto cocomponents(const Graph & g) -> Partition;
    auto is_cograph(const Graph & g) -> bool;

    /// For H = power(K_1, t + 1): dbar(x, y) is the largest k <= t with x and
    /// y in the same block of Pi_k, and d = t - dbar.
    class MetricTable
    {
        int _n = 0, _t = 0;
        std::vector<int> _d;

        friend auto metric_table(const Graph &, int) -> MetricTable;

    public:
        auto size() const -> int { return _n; }
        auto t() const -> int { return _t; }
        auto d(int x, int y) const -> int { return _d[static_cast<std::size_t>(x) * _n + y]; }
        auto dbar(int x, int y) const -> int { return _t - d(x, y); }
    };

    /// Throws InvalidArgument unless |V(H)| = 2^t.
    auto metric_table(const Graph & h, int t) -> MetricTable;
}
