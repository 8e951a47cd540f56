#pragma once

// Slow reference implementations used only by the tests. They share nothing
// with the library beyond the Graph container and adjacency queries.

#include <fodef/graph.hh>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle
{
    using fodef::Graph;

    /// Labeled graph on n vertices, edge bits in (0,1), (0,2), (1,2), (0,3), ... order.
    inline auto from_mask(int n, std::uint64_t mask) -> Graph
    {
        Graph g(n);
        int bit = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++bit)
                if ((mask >> bit) & 1)
                    g.add_edge(u, v);
        return g;
    }

    inline auto all_graphs(int n) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
            out.push_back(from_mask(n, mask));
        return out;
    }

    inline auto same_adjacency(const Graph & a, int u, int v, const Graph & b, int x, int y) -> bool
    {
        return a.adjacent(u, v) == b.adjacent(x, y);
    }

    /// Tries every injective map V(F) -> V(G).
    inline auto induced(const Graph & g, const Graph & f) -> bool
    {
        int k = f.size(), n = g.size();
        if (k > n)
            return false;
        std::vector<int> image(k, -1);
        std::vector<bool> used(n, false);
        auto extend = [&](auto & self, int i) -> bool {
            if (i == k)
                return true;
            for (int v = 0; v < n; ++v) {
                if (used[v])
                    continue;
                bool ok = true;
                for (int j = 0; j < i && ok; ++j)
                    ok = same_adjacency(f, i, j, g, v, image[j]);
                if (! ok)
                    continue;
                used[v] = true;
                image[i] = v;
                if (self(self, i + 1))
                    return true;
                used[v] = false;
            }
            return false;
        };
        return extend(extend, 0);
    }

    inline auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        return a.size() == b.size() && a.edge_count() == b.edge_count() && induced(a, b);
    }

    inline auto complement(const Graph & g) -> Graph
    {
        Graph c(g.size());
        for (int u = 0; u < g.size(); ++u)
            for (int v = u + 1; v < g.size(); ++v)
                if (! g.adjacent(u, v))
                    c.add_edge(u, v);
        return c;
    }

    /// For every assignment of vertices to X, Y or neither with |X| + |Y| < k,
    /// some vertex outside X and Y sees all of X and none of Y.
    inline auto ea(const Graph & g, int k) -> bool
    {
        int n = g.size();
        std::vector<int> label(n, 0);
        auto check = [&](auto & self, int v, int used) -> bool {
            if (v == n) {
                for (int z = 0; z < n; ++z) {
                    if (label[z] != 0)
                        continue;
                    bool ok = true;
                    for (int u = 0; u < n && ok; ++u)
                        if (label[u] == 1)
                            ok = g.adjacent(z, u);
                        else if (label[u] == 2)
                            ok = ! g.adjacent(z, u);
                    if (ok)
                        return true;
                }
                return false;
            }
            for (int l = 0; l <= 2; ++l) {
                if (l != 0 && used + 1 >= k)
                    continue;
                label[v] = l;
                if (! self(self, v + 1, used + (l != 0)))
                    return false;
            }
            label[v] = 0;
            return true;
        };
        return check(check, 0, 0);
    }

    inline auto components_of(const Graph & g, const std::vector<int> & vertices, bool complemented) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(g.size(), false);
        for (int s : vertices) {
            if (seen[s])
                continue;
            std::vector<int> comp{s}, stack{s};
            seen[s] = true;
            while (! stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : vertices)
                    if (! seen[v] && v != u && g.adjacent(u, v) != complemented) {
                        seen[v] = true;
                        comp.push_back(v);
                        stack.push_back(v);
                    }
            }
            out.push_back(comp);
        }
        return out;
    }

    /// The recursive definition: single vertices are cographs, and so is any
    /// graph whose components or cocomponents are all cographs and proper.
    inline auto cograph(const Graph & g, const std::vector<int> & vertices) -> bool
    {
        if (vertices.size() <= 1)
            return true;
        for (bool complemented : {false, true}) {
            auto parts = components_of(g, vertices, complemented);
            if (parts.size() > 1)
                return std::all_of(parts.begin(), parts.end(), [&](auto & p) { return cograph(g, p); });
        }
        return false;
    }

    inline auto cograph(const Graph & g) -> bool
    {
        std::vector<int> all(g.size());
        for (int v = 0; v < g.size(); ++v)
            all[v] = v;
        return cograph(g, all);
    }

    inline auto has_twins(const Graph & g) -> bool
    {
        for (int u = 0; u < g.size(); ++u)
            for (int v = u + 1; v < g.size(); ++v) {
                bool twin = true;
                for (int w = 0; w < g.size() && twin; ++w)
                    if (w != u && w != v)
                        twin = g.adjacent(u, w) == g.adjacent(v, w);
                if (twin)
                    return true;
            }
        return false;
    }

    /// The k-pebble game played directly from its definition. A position is
    /// the set of pebbled pairs; each round Spoiler either places an unused
    /// pebble pair or lifts a placed one, then picks a vertex on either side,
    /// and Duplicator answers on the other side.
    class NaiveGame
    {
        const Graph & _g;
        const Graph & _h;
        int _k;
        std::map<std::pair<std::vector<std::pair<int, int>>, int>, bool> _memo;

        auto partial_iso(const std::vector<std::pair<int, int>> & pos) const -> bool
        {
            for (auto & [a, b] : pos)
                for (auto & [c, d] : pos) {
                    if ((a == c) != (b == d))
                        return false;
                    if (a != c && _g.adjacent(a, c) != _h.adjacent(b, d))
                        return false;
                }
            return true;
        }

        static auto with(std::vector<std::pair<int, int>> pos, std::pair<int, int> p) -> std::vector<std::pair<int, int>>
        {
            pos.push_back(p);
            std::sort(pos.begin(), pos.end());
            pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
            return pos;
        }

        auto spoiler_wins_move(const std::vector<std::pair<int, int>> & base, int rounds) -> bool
        {
            for (int side = 0; side < 2; ++side) {
                int n = side == 0 ? _g.size() : _h.size(), m = side == 0 ? _h.size() : _g.size();
                for (int x = 0; x < n; ++x) {
                    bool all_replies_lose = true;
                    for (int y = 0; y < m && all_replies_lose; ++y) {
                        auto next = with(base, side == 0 ? std::pair{x, y} : std::pair{y, x});
                        all_replies_lose = wins(next, rounds - 1);
                    }
                    if (all_replies_lose)
                        return true;
                }
            }
            return false;
        }

    public:
        NaiveGame(const Graph & g, const Graph & h, int k) : _g(g), _h(h), _k(k) {}

        /// Spoiler wins from pos within `rounds` rounds.
        auto wins(const std::vector<std::pair<int, int>> & pos, int rounds) -> bool
        {
            if (! partial_iso(pos))
                return true;
            if (rounds == 0)
                return false;
            auto key = std::pair{pos, rounds};
            if (auto it = _memo.find(key); it != _memo.end())
                return it->second;
            bool result = false;
            if (static_cast<int>(pos.size()) < _k)
                result = spoiler_wins_move(pos, rounds);
            for (std::size_t i = 0; i < pos.size() && ! result; ++i) {
                auto lifted = pos;
                lifted.erase(lifted.begin() + static_cast<std::ptrdiff_t>(i));
                result = spoiler_wins_move(lifted, rounds);
            }
            _memo[key] = result;
            return result;
        }

        /// Least d <= max_rounds with a Spoiler win from the empty position.
        auto depth(int max_rounds) -> std::optional<int>
        {
            for (int d = 0; d <= max_rounds; ++d)
                if (wins({}, d))
                    return d;
            return std::nullopt;
        }
    };
}
