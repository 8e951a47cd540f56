#pragma once

#include <fodef/graph.hh>

#include <optional>
#include <utility>
#include <vector>

namespace fodef
{
    /// Counts f(i, j, d): the number of vertices w with dist(w, u) = i and
    /// dist(w, v) = j, for vertices u, v at distance d. Distances run over
    /// 0..dim()-1; in a disconnected graph the last slot stands for infinity.
    class DistanceProfile
    {
        int _dim = 0;
        bool _infinite_slot = false;
        bool _well_defined = true;
        std::optional<int> _diameter;
        std::vector<long long> _counts;
        std::vector<bool> _realized;

        friend auto distance_profile(const Graph &) -> DistanceProfile;

    public:
        auto dim() const -> int { return _dim; }
        /// Nullopt for empty or disconnected graphs.
        auto diameter() const -> std::optional<int> { return _diameter; }
        auto has_infinite_slot() const -> bool { return _infinite_slot; }
        /// True iff the count is the same for every pair at each distance.
        auto well_defined() const -> bool { return _well_defined; }
        /// Some pair is at distance d.
        auto realized(int d) const -> bool { return d >= 0 && d < _dim && _realized[d]; }
        /// Out-of-range indices read as 0. Meaningful when well_defined().
        auto f(int i, int j, int d) const -> long long;
    };

    auto distance_profile(const Graph & g) -> DistanceProfile;

    /// Connected and f(i, j, d) depends only on (i, j, d).
    auto is_distance_regular(const Graph & g) -> bool;

    /// Zero patterns of the two profiles coincide. Throws NotDistanceRegular
    /// unless both graphs are connected and distance-regular.
    auto similar(const Graph & g, const Graph & h) -> bool;

    struct SrgParams
    {
        int n = 0;
        int k = 0;
        /// Absent when no adjacent pair exists (edgeless graphs).
        std::optional<int> lambda;
        /// Absent when no non-adjacent pair exists (complete graphs).
        std::optional<int> mu;

        auto degenerate() const -> bool { return ! lambda || ! mu; }
        /// 0 < mu < k < n - 1.
        auto nontrivial() const -> bool;
        /// k(k - lambda - 1) = (n - k - 1) mu, missing values read as 0.
        auto feasible() const -> bool;

        auto operator==(const SrgParams &) const -> bool = default;
    };

    auto is_strongly_regular(const Graph & g) -> std::optional<SrgParams>;

    /// kappa(G); n - 1 for K_n, 0 for disconnected graphs and n <= 1.
    auto vertex_connectivity(const Graph & g) -> int;

    /// kappa(G) >= s, computed with flows capped at s.
    auto is_s_connected(const Graph & g, int s) -> bool;

    /// Exact chromatic number by branch and bound; refuses n > 16.
    auto chromatic_number(const Graph & g) -> int;

    struct TwinPair
    {
        int u = 0, v = 0;
        bool adjacent = false;

        auto operator==(const TwinPair &) const -> bool = default;
    };

    /// Unordered pairs u < v with N(u) \ {v} = N(v) \ {u}.
    auto twins(const Graph & g) -> std::vector<TwinPair>;

    /// Whether the partial vertex map extends to an automorphism. Refuses n > 64.
    auto automorphism_exists(const Graph & g, const std::vector<std::pair<int, int>> & partial_map) -> bool;
}
