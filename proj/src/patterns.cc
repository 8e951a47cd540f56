#include <fodef/errors.hh>
#include <fodef/patterns.hh>

#include <algorithm>

using std::optional;
using std::vector;

namespace fodef
{
    namespace
    {
        struct InducedSearch
        {
            const Graph & g;
            const Graph & f;
            vector<int> order;
            vector<int> image;
            VertexSet used;

            auto search(std::size_t depth) -> bool
            {
                if (depth == order.size())
                    return true;
                int u = order[depth];
                int need_adjacent = f.degree(u), need_apart = f.size() - 1 - f.degree(u);

                VertexSet candidates(g.size(), true);
                candidates.subtract(used.words());
                for (std::size_t e = 0; e < depth; ++e) {
                    int w = order[e], gw = image[w];
                    if (f.adjacent(u, w))
                        candidates.intersect_with(g.row(gw));
                    else
                        candidates.intersect_with(g.non_neighbourhood(gw).words());
                }

                bool found = false;
                candidates.for_each([&](int v) {
                    if (found)
                        return;
                    int deg = g.degree(v);
                    if (deg < need_adjacent || g.size() - 1 - deg < need_apart)
                        return;
                    image[u] = v;
                    used.set(v);
                    found = search(depth + 1);
                    used.reset(v);
                });
                return found;
            }
        };

        /// F's vertices in BFS order from a vertex of maximum degree, so each
        /// new vertex is constrained by an earlier neighbour where possible.
        auto search_order(const Graph & f) -> vector<int>
        {
            int n = f.size();
            vector<int> order;
            vector<bool> seen(n, false);
            while (static_cast<int>(order.size()) < n) {
                int start = -1;
                for (int v = 0; v < n; ++v)
                    if (! seen[v] && (start < 0 || f.degree(v) > f.degree(start)))
                        start = v;
                seen[start] = true;
                std::size_t head = order.size();
                order.push_back(start);
                while (head < order.size()) {
                    int x = order[head++];
                    for (int y : f.neighbours(x))
                        if (! seen[y]) {
                            seen[y] = true;
                            order.push_back(y);
                        }
                }
            }
            return order;
        }
    }

    auto contains_induced(const Graph & g, const Graph & f) -> optional<vector<int>>
    {
        if (f.size() > g.size())
            return std::nullopt;
        InducedSearch s{g, f, search_order(f), vector<int>(f.size(), -1), VertexSet(g.size())};
        if (s.search(0))
            return s.image;
        return std::nullopt;
    }

    auto find_triangle(const Graph & g) -> optional<std::array<int, 3>>
    {
        for (int u = 0; u < g.size(); ++u)
            for (int v : g.neighbours(u)) {
                if (v < u)
                    continue;
                auto common = g.neighbourhood(u);
                common.intersect_with(g.row(v));
                int w = common.first();
                if (w >= 0) {
                    std::array<int, 3> t{u, v, w};
                    std::sort(t.begin(), t.end());
                    return t;
                }
            }
        return std::nullopt;
    }

    namespace
    {
        auto triangle_free_within(const Graph & g, const VertexSet & part) -> bool
        {
            bool free = true;
            part.for_each([&](int u) {
                if (! free)
                    return;
                auto nu = g.neighbourhood(u);
                nu.intersect_with(part.words());
                nu.for_each([&](int v) {
                    if (! free || v < u)
                        return;
                    auto common = nu;
                    common.intersect_with(g.row(v));
                    free = common.empty();
                });
            });
            return free;
        }

        /// Non-adjacency restricted to the part is an equivalence relation.
        auto complete_multipartite_within(const Graph & g, const VertexSet & part) -> bool
        {
            bool ok = true;
            part.for_each([&](int u) {
                if (! ok)
                    return;
                auto class_u = g.non_neighbourhood(u);
                class_u.set(u);
                class_u.intersect_with(part.words());
                class_u.for_each([&](int v) {
                    if (! ok || v <= u)
                        return;
                    auto class_v = g.non_neighbourhood(v);
                    class_v.set(v);
                    class_v.intersect_with(part.words());
                    ok = class_u == class_v;
                });
            });
            return ok;
        }
    }

    auto is_paw_free(const Graph & g) -> bool
    {
        for (auto & component : components(g)) {
            VertexSet part(g.size());
            for (int v : component)
                part.set(v);
            if (! triangle_free_within(g, part) && ! complete_multipartite_within(g, part))
                return false;
        }
        return true;
    }

    auto has_induced_paw(const Graph & g) -> bool
    {
        return ! is_paw_free(g);
    }

    auto has_induced_claw(const Graph & g) -> bool
    {
        for (int v = 0; v < g.size(); ++v) {
            auto nv = g.neighbourhood(v);
            bool found = false;
            nv.for_each([&](int a) {
                if (found)
                    return;
                auto apart = nv;
                apart.intersect_with(g.non_neighbourhood(a).words());
                apart.for_each([&](int b) {
                    if (found || b < a)
                        return;
                    auto third = apart;
                    third.intersect_with(g.non_neighbourhood(b).words());
                    found = ! third.empty();
                });
            });
            if (found)
                return true;
        }
        return false;
    }

    auto has_induced_diamond(const Graph & g) -> bool
    {
        for (int c = 0; c < g.size(); ++c)
            for (int d : g.neighbours(c)) {
                if (d < c)
                    continue;
                auto common = g.neighbourhood(c);
                common.intersect_with(g.row(d));
                bool found = false;
                common.for_each([&](int a) {
                    if (found)
                        return;
                    auto rest = common;
                    rest.intersect_with(g.non_neighbourhood(a).words());
                    found = ! rest.empty();
                });
                if (found)
                    return true;
            }
        return false;
    }

    auto has_induced_p4(const Graph & g) -> bool
    {
        return ! is_cograph(g);
    }

    auto split_block(const Graph & g, const vector<int> & block, bool complemented) -> vector<vector<int>>
    {
        VertexSet remaining(g.size());
        for (int v : block)
            remaining.set(v);

        vector<vector<int>> result;
        while (! remaining.empty()) {
            int start = remaining.first();
            remaining.reset(start);
            vector<int> part{start};
            for (std::size_t head = 0; head < part.size(); ++head) {
                auto next = complemented ? g.non_neighbourhood(part[head]) : g.neighbourhood(part[head]);
                next.intersect_with(remaining.words());
                next.for_each([&](int w) {
                    remaining.reset(w);
                    part.push_back(w);
                });
            }
            std::sort(part.begin(), part.end());
            result.push_back(std::move(part));
        }
        return result;
    }

    auto Decomposition::partition(int i) const -> const Partition &
    {
        if (i < 0)
            throw InvalidArgument("decomposition: level must be nonnegative");
        return _levels[std::min<std::size_t>(i, _levels.size() - 1)];
    }

    auto Decomposition::env(int i, int v) const -> int
    {
        if (i < 0)
            throw InvalidArgument("decomposition: level must be nonnegative");
        return _block_of[std::min<std::size_t>(i, _block_of.size() - 1)][v];
    }

    auto decomposition(const Graph & g) -> Decomposition
    {
        int n = g.size();
        auto index_blocks = [n](const Partition & p) {
            vector<int> of(n, -1);
            for (std::size_t b = 0; b < p.size(); ++b)
                for (int v : p[b])
                    of[v] = static_cast<int>(b);
            return of;
        };

        Decomposition result;
        result._levels.push_back(components(g));
        result._block_of.push_back(index_blocks(result._levels.back()));
        for (int i = 0;; ++i) {
            // The level-i graph is G[B] for even i, so it splits along the complement.
            bool complemented = i % 2 == 0;
            Partition next;
            for (auto & block : result._levels.back())
                for (auto & part : split_block(g, block, complemented))
                    next.push_back(std::move(part));
            if (next.size() == result._levels.back().size())
                break;
            result._levels.push_back(std::move(next));
            result._block_of.push_back(index_blocks(result._levels.back()));
        }
        return result;
    }

    auto cocomponents(const Graph & g) -> Partition
    {
        return decomposition(g).levels().back();
    }

    auto is_cograph(const Graph & g) -> bool
    {
        return static_cast<int>(cocomponents(g).size()) == g.size();
    }

    auto metric_table(const Graph & h, int t) -> MetricTable
    {
        if (t < 0 || t > 20 || h.size() != (1 << t))
            throw InvalidArgument("metric_table: expected 2^t vertices for t = " + std::to_string(t) + ", got " + std::to_string(h.size()));
        auto dec = decomposition(h);
        MetricTable table;
        table._n = h.size();
        table._t = t;
        table._d.assign(static_cast<std::size_t>(table._n) * table._n, 0);
        for (int x = 0; x < table._n; ++x)
            for (int y = 0; y < table._n; ++y) {
                int dbar = -1;
                for (int k = 0; k <= t && dec.env(k, x) == dec.env(k, y); ++k)
                    dbar = k;
                table._d[static_cast<std::size_t>(x) * table._n + y] = t - dbar;
            }
        return table;
    }
}
