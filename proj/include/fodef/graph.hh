#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fodef
{
    using Word = std::uint64_t;

    constexpr auto words_for(int n) -> int
    {
        return (n + 63) / 64;
    }

    /// A dynamic set of vertices in [0, n), stored as 64-bit words. Used for
    /// temporaries such as neighbourhood intersections.
    class VertexSet
    {
        int _n = 0;
        std::vector<Word> _words;

    public:
        VertexSet() = default;
        explicit VertexSet(int n, bool full = false);

        static auto from_row(std::span<const Word> row, int n) -> VertexSet;

        auto capacity() const -> int { return _n; }
        auto words() const -> std::span<const Word> { return _words; }

        auto test(int v) const -> bool { return (_words[v / 64] >> (v % 64)) & 1; }
        auto set(int v) -> void { _words[v / 64] |= Word{1} << (v % 64); }
        auto reset(int v) -> void { _words[v / 64] &= ~(Word{1} << (v % 64)); }

        auto count() const -> int;
        auto empty() const -> bool;
        /// Lowest member, or -1 if empty.
        auto first() const -> int;

        auto intersect_with(std::span<const Word> other) -> void;
        auto subtract(std::span<const Word> other) -> void;
        auto unite_with(std::span<const Word> other) -> void;
        /// Complement within [0, n).
        auto flip() -> void;

        auto members() const -> std::vector<int>;

        template <typename F>
        auto for_each(F && f) const -> void
        {
            for (std::size_t w = 0; w < _words.size(); ++w) {
                Word bits = _words[w];
                while (bits) {
                    int b = std::countr_zero(bits);
                    f(static_cast<int>(w * 64 + b));
                    bits &= bits - 1;
                }
            }
        }

        auto operator==(const VertexSet &) const -> bool = default;
    };

    /// Finite simple undirected graph on vertices 0..n-1. Each vertex row is a
    /// bitset, so adjacency is a single word test and whole-row set operations
    /// are word-parallel.
    class Graph
    {
        int _n = 0;
        int _words = 0;
        std::vector<Word> _bits;

    public:
        Graph() = default;
        explicit Graph(int n);

        auto size() const -> int { return _n; }
        auto words_per_row() const -> int { return _words; }

        auto adjacent(int u, int v) const -> bool
        {
            return (_bits[static_cast<std::size_t>(u) * _words + v / 64] >> (v % 64)) & 1;
        }

        auto row(int u) const -> std::span<const Word>
        {
            return {_bits.data() + static_cast<std::size_t>(u) * _words, static_cast<std::size_t>(_words)};
        }

        auto neighbourhood(int u) const -> VertexSet { return VertexSet::from_row(row(u), _n); }
        /// Vertices other than u that are not adjacent to u.
        auto non_neighbourhood(int u) const -> VertexSet;

        auto add_edge(int u, int v) -> void;
        auto remove_edge(int u, int v) -> void;
        auto set_adjacent(int u, int v, bool adjacent) -> void;

        auto degree(int u) const -> int;
        auto neighbours(int u) const -> std::vector<int>;
        auto edge_count() const -> long long;

        /// Symmetric and irreflexive, with no stray bits beyond n.
        auto well_formed() const -> bool;

        auto operator==(const Graph &) const -> bool = default;
    };

    auto induced_subgraph(const Graph & g, std::span<const int> vertices) -> Graph;

    /// Connected components, each sorted, ordered by smallest member.
    auto components(const Graph & g) -> std::vector<std::vector<int>>;
    auto is_connected(const Graph & g) -> bool;

    /// All-pairs BFS distances; -1 marks unreachable pairs.
    auto distance_matrix(const Graph & g) -> std::vector<std::vector<int>>;

    /// Backtracking search for an isomorphism g -> h that agrees with the
    /// given fixed pairs, pruning on degree, distance profiles and distances
    /// to already-mapped vertices. Returns the image of every vertex of g.
    /// Refuses graphs with more than 64 vertices.
    auto find_isomorphism(const Graph & g, const Graph & h,
        std::span<const std::pair<int, int>> fixed = {}) -> std::optional<std::vector<int>>;

    auto isomorphic(const Graph & g, const Graph & h) -> bool;
}
