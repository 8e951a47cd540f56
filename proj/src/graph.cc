#include <fodef/errors.hh>
#include <fodef/graph.hh>

#include <algorithm>
#include <queue>
#include <string>

using std::optional;
using std::pair;
using std::span;
using std::vector;

namespace fodef
{
    namespace
    {
        auto tail_mask(int n) -> Word
        {
            return n % 64 == 0 ? ~Word{0} : (Word{1} << (n % 64)) - 1;
        }
    }

    VertexSet::VertexSet(int n, bool full) :
        _n(n),
        _words(words_for(n), full ? ~Word{0} : Word{0})
    {
        if (full && ! _words.empty())
            _words.back() &= tail_mask(n);
    }

    auto VertexSet::from_row(span<const Word> row, int n) -> VertexSet
    {
        VertexSet result(n);
        std::copy(row.begin(), row.end(), result._words.begin());
        return result;
    }

    auto VertexSet::count() const -> int
    {
        int c = 0;
        for (auto w : _words)
            c += std::popcount(w);
        return c;
    }

    auto VertexSet::empty() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [](Word w) { return w == 0; });
    }

    auto VertexSet::first() const -> int
    {
        for (std::size_t w = 0; w < _words.size(); ++w)
            if (_words[w])
                return static_cast<int>(w * 64 + std::countr_zero(_words[w]));
        return -1;
    }

    auto VertexSet::intersect_with(span<const Word> other) -> void
    {
        for (std::size_t w = 0; w < _words.size(); ++w)
            _words[w] &= other[w];
    }

    auto VertexSet::subtract(span<const Word> other) -> void
    {
        for (std::size_t w = 0; w < _words.size(); ++w)
            _words[w] &= ~other[w];
    }

    auto VertexSet::unite_with(span<const Word> other) -> void
    {
        for (std::size_t w = 0; w < _words.size(); ++w)
            _words[w] |= other[w];
    }

    auto VertexSet::flip() -> void
    {
        for (auto & w : _words)
            w = ~w;
        if (! _words.empty())
            _words.back() &= tail_mask(_n);
    }

    auto VertexSet::members() const -> vector<int>
    {
        vector<int> result;
        for_each([&](int v) { result.push_back(v); });
        return result;
    }

    Graph::Graph(int n) :
        _n(n),
        _words(words_for(n)),
        _bits(static_cast<std::size_t>(n) * words_for(n), 0)
    {
        if (n < 0)
            throw InvalidArgument("graph vertex count must be nonnegative, got " + std::to_string(n));
    }

    auto Graph::non_neighbourhood(int u) const -> VertexSet
    {
        auto result = neighbourhood(u);
        result.flip();
        result.reset(u);
        return result;
    }

    auto Graph::add_edge(int u, int v) -> void
    {
        set_adjacent(u, v, true);
    }

    auto Graph::remove_edge(int u, int v) -> void
    {
        set_adjacent(u, v, false);
    }

    auto Graph::set_adjacent(int u, int v, bool adjacent) -> void
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            throw InvalidArgument("vertex out of range");
        if (u == v) {
            if (adjacent)
                throw InvalidArgument("loops are not allowed (vertex " + std::to_string(u) + ")");
            return;
        }
        auto put = [&](int a, int b) {
            auto & w = _bits[static_cast<std::size_t>(a) * _words + b / 64];
            if (adjacent)
                w |= Word{1} << (b % 64);
            else
                w &= ~(Word{1} << (b % 64));
        };
        put(u, v);
        put(v, u);
    }

    auto Graph::degree(int u) const -> int
    {
        int d = 0;
        for (auto w : row(u))
            d += std::popcount(w);
        return d;
    }

    auto Graph::neighbours(int u) const -> vector<int>
    {
        return neighbourhood(u).members();
    }

    auto Graph::edge_count() const -> long long
    {
        long long total = 0;
        for (auto w : _bits)
            total += std::popcount(w);
        return total / 2;
    }

    auto Graph::well_formed() const -> bool
    {
        for (int u = 0; u < _n; ++u) {
            if (adjacent(u, u))
                return false;
            if (_words > 0 && (row(u).back() & ~tail_mask(_n)))
                return false;
            for (int v = u + 1; v < _n; ++v)
                if (adjacent(u, v) != adjacent(v, u))
                    return false;
        }
        return true;
    }

    auto induced_subgraph(const Graph & g, span<const int> vertices) -> Graph
    {
        Graph result(static_cast<int>(vertices.size()));
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (g.adjacent(vertices[i], vertices[j]))
                    result.add_edge(static_cast<int>(i), static_cast<int>(j));
        return result;
    }

    auto components(const Graph & g) -> vector<vector<int>>
    {
        vector<vector<int>> result;
        VertexSet unvisited(g.size(), true);
        while (! unvisited.empty()) {
            int start = unvisited.first();
            vector<int> component{start};
            unvisited.reset(start);
            for (std::size_t i = 0; i < component.size(); ++i) {
                auto next = g.neighbourhood(component[i]);
                next.intersect_with(unvisited.words());
                next.for_each([&](int w) {
                    unvisited.reset(w);
                    component.push_back(w);
                });
            }
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return g.size() > 0 && components(g).size() == 1;
    }

    auto distance_matrix(const Graph & g) -> vector<vector<int>>
    {
        int n = g.size();
        vector<vector<int>> dist(n, vector<int>(n, -1));
        for (int s = 0; s < n; ++s) {
            auto & d = dist[s];
            d[s] = 0;
            VertexSet unvisited(n, true);
            unvisited.reset(s);
            vector<int> frontier{s};
            for (int level = 1; ! frontier.empty(); ++level) {
                vector<int> next;
                for (int u : frontier) {
                    auto fresh = g.neighbourhood(u);
                    fresh.intersect_with(unvisited.words());
                    fresh.for_each([&](int w) {
                        unvisited.reset(w);
                        d[w] = level;
                        next.push_back(w);
                    });
                }
                frontier = std::move(next);
            }
        }
        return dist;
    }

    namespace
    {
        auto vertex_signatures(const vector<vector<int>> & dist) -> vector<vector<int>>
        {
            int n = static_cast<int>(dist.size());
            vector<vector<int>> result(n);
            for (int v = 0; v < n; ++v) {
                vector<int> histogram(n + 1, 0);
                for (int w = 0; w < n; ++w)
                    ++histogram[dist[v][w] < 0 ? n : dist[v][w]];
                result[v] = std::move(histogram);
            }
            return result;
        }

        struct IsomorphismSearch
        {
            const Graph & g;
            const Graph & h;
            vector<vector<int>> gdist, hdist;
            vector<vector<int>> gsig, hsig;
            vector<int> order;
            vector<int> image;
            vector<bool> used;

            auto extend(std::size_t depth) -> bool
            {
                if (depth == order.size())
                    return true;
                int v = order[depth];
                if (image[v] >= 0)
                    return extend(depth + 1);
                for (int w = 0; w < h.size(); ++w) {
                    if (used[w] || gsig[v] != hsig[w])
                        continue;
                    bool ok = true;
                    for (int u = 0; u < g.size() && ok; ++u)
                        if (image[u] >= 0 && (g.adjacent(u, v) != h.adjacent(image[u], w) || gdist[u][v] != hdist[image[u]][w]))
                            ok = false;
                    if (! ok)
                        continue;
                    image[v] = w;
                    used[w] = true;
                    if (extend(depth + 1))
                        return true;
                    image[v] = -1;
                    used[w] = false;
                }
                return false;
            }
        };
    }

    auto find_isomorphism(const Graph & g, const Graph & h, span<const pair<int, int>> fixed) -> optional<vector<int>>
    {
        if (g.size() > 64 || h.size() > 64)
            throw GuardExceeded("isomorphism search is limited to 64 vertices");
        if (g.size() != h.size() || g.edge_count() != h.edge_count())
            return std::nullopt;

        int n = g.size();
        IsomorphismSearch search{g, h, distance_matrix(g), distance_matrix(h), {}, {}, {}, vector<int>(n, -1), vector<bool>(n, false)};
        search.gsig = vertex_signatures(search.gdist);
        search.hsig = vertex_signatures(search.hdist);

        auto gs = search.gsig, hs = search.hsig;
        std::sort(gs.begin(), gs.end());
        std::sort(hs.begin(), hs.end());
        if (gs != hs)
            return std::nullopt;

        for (auto [a, b] : fixed) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw InvalidArgument("partial map refers to a vertex out of range");
            if (search.image[a] >= 0 && search.image[a] != b)
                return std::nullopt;
            if (search.image[a] < 0 && search.used[b])
                return std::nullopt;
            search.image[a] = b;
            search.used[b] = true;
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (search.image[u] >= 0 && search.image[v] >= 0) {
                    if (search.gsig[u] != search.hsig[search.image[u]])
                        return std::nullopt;
                    if (g.adjacent(u, v) != h.adjacent(search.image[u], search.image[v]) ||
                        search.gdist[u][v] != search.hdist[search.image[u]][search.image[v]])
                        return std::nullopt;
                }

        // Breadth-first order from the mapped vertices keeps constraints tight.
        vector<bool> placed(n, false);
        std::queue<int> queue;
        for (int u = 0; u < n; ++u)
            if (search.image[u] >= 0) {
                placed[u] = true;
                queue.push(u);
            }
        for (int root = 0; root <= n; ++root) {
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop();
                search.order.push_back(u);
                for (int w : g.neighbours(u))
                    if (! placed[w]) {
                        placed[w] = true;
                        queue.push(w);
                    }
            }
            if (root < n && ! placed[root]) {
                placed[root] = true;
                queue.push(root);
            }
        }

        if (! search.extend(0))
            return std::nullopt;
        return search.image;
    }

    auto isomorphic(const Graph & g, const Graph & h) -> bool
    {
        return find_isomorphism(g, h).has_value();
    }
}
