#include <fodef/errors.hh>
#include <fodef/structure.hh>

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

using std::optional;
using std::pair;
using std::vector;

namespace fodef
{
    auto DistanceProfile::f(int i, int j, int d) const -> long long
    {
        if (i < 0 || j < 0 || d < 0 || i >= _dim || j >= _dim || d >= _dim)
            return 0;
        return _counts[(static_cast<std::size_t>(d) * _dim + i) * _dim + j];
    }

    auto distance_profile(const Graph & g) -> DistanceProfile
    {
        int n = g.size();
        auto dist = distance_matrix(g);

        int max_finite = 0;
        bool disconnected = false;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (dist[u][v] < 0)
                    disconnected = true;
                else
                    max_finite = std::max(max_finite, dist[u][v]);
            }

        DistanceProfile profile;
        profile._infinite_slot = disconnected;
        profile._dim = n == 0 ? 0 : max_finite + 1 + (disconnected ? 1 : 0);
        if (n > 0 && ! disconnected)
            profile._diameter = max_finite;
        int dim = profile._dim;
        auto slot = [&](int d) { return d < 0 ? dim - 1 : d; };

        profile._counts.assign(static_cast<std::size_t>(dim) * dim * dim, 0);
        profile._realized.assign(dim, false);

        vector<long long> local(static_cast<std::size_t>(dim) * dim);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                std::fill(local.begin(), local.end(), 0);
                for (int w = 0; w < n; ++w)
                    ++local[static_cast<std::size_t>(slot(dist[w][u])) * dim + slot(dist[w][v])];
                int d = slot(dist[u][v]);
                auto * stored = profile._counts.data() + static_cast<std::size_t>(d) * dim * dim;
                if (! profile._realized[d]) {
                    profile._realized[d] = true;
                    std::copy(local.begin(), local.end(), stored);
                }
                else if (! std::equal(local.begin(), local.end(), stored))
                    profile._well_defined = false;
            }
        return profile;
    }

    auto is_distance_regular(const Graph & g) -> bool
    {
        return is_connected(g) && distance_profile(g).well_defined();
    }

    auto similar(const Graph & g, const Graph & h) -> bool
    {
        auto check = [](const Graph & x, const char * which) {
            if (! is_connected(x))
                throw NotDistanceRegular(std::string("similar: ") + which + " graph is not connected");
            auto profile = distance_profile(x);
            if (! profile.well_defined())
                throw NotDistanceRegular(std::string("similar: ") + which + " graph is not distance-regular");
            return profile;
        };
        auto pg = check(g, "first"), ph = check(h, "second");
        int dim = std::max(pg.dim(), ph.dim());
        for (int d = 0; d < dim; ++d)
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    if ((pg.f(i, j, d) == 0) != (ph.f(i, j, d) == 0))
                        return false;
        return true;
    }

    auto SrgParams::nontrivial() const -> bool
    {
        return lambda && mu && 0 < *mu && *mu < k && k < n - 1;
    }

    auto SrgParams::feasible() const -> bool
    {
        long long l = lambda.value_or(0), m = mu.value_or(0);
        return static_cast<long long>(k) * (k - l - 1) == static_cast<long long>(n - k - 1) * m;
    }

    auto is_strongly_regular(const Graph & g) -> optional<SrgParams>
    {
        int n = g.size();
        SrgParams params;
        params.n = n;
        params.k = n > 0 ? g.degree(0) : 0;
        for (int u = 0; u < n; ++u)
            if (g.degree(u) != params.k)
                return std::nullopt;

        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                auto common = g.neighbourhood(u);
                common.intersect_with(g.row(v));
                int c = common.count();
                auto & slot = g.adjacent(u, v) ? params.lambda : params.mu;
                if (! slot)
                    slot = c;
                else if (*slot != c)
                    return std::nullopt;
            }
        return params;
    }

    namespace
    {
        /// Unit-capacity flow on the vertex-split graph: vertex v becomes
        /// v_in = 2v and v_out = 2v + 1 joined by an arc of capacity 1.
        class SplitFlow
        {
            struct Arc
            {
                int to, capacity, reverse;
            };

            vector<vector<Arc>> _arcs;

            auto add(int from, int to, int capacity) -> void
            {
                _arcs[from].push_back({to, capacity, static_cast<int>(_arcs[to].size())});
                _arcs[to].push_back({from, 0, static_cast<int>(_arcs[from].size()) - 1});
            }

        public:
            SplitFlow(const Graph & g, int s, int t) :
                _arcs(2 * g.size())
            {
                constexpr int unbounded = std::numeric_limits<int>::max() / 2;
                for (int v = 0; v < g.size(); ++v)
                    add(2 * v, 2 * v + 1, (v == s || v == t) ? unbounded : 1);
                for (int u = 0; u < g.size(); ++u)
                    for (int v : g.neighbours(u))
                        add(2 * u + 1, 2 * v, 1);
            }

            /// Augments from source to sink until no path remains or cap is hit.
            auto max_flow(int source, int sink, int cap) -> int
            {
                int flow = 0;
                vector<pair<int, int>> parent(_arcs.size());
                while (flow < cap) {
                    std::fill(parent.begin(), parent.end(), pair{-1, -1});
                    std::queue<int> queue;
                    queue.push(source);
                    parent[source] = {source, -1};
                    while (! queue.empty() && parent[sink].first < 0) {
                        int x = queue.front();
                        queue.pop();
                        for (int a = 0; a < static_cast<int>(_arcs[x].size()); ++a) {
                            auto & arc = _arcs[x][a];
                            if (arc.capacity > 0 && parent[arc.to].first < 0) {
                                parent[arc.to] = {x, a};
                                queue.push(arc.to);
                            }
                        }
                    }
                    if (parent[sink].first < 0)
                        break;
                    for (int y = sink; y != source;) {
                        auto [x, a] = parent[y];
                        auto & arc = _arcs[x][a];
                        arc.capacity -= 1;
                        _arcs[y][arc.reverse].capacity += 1;
                        y = x;
                    }
                    ++flow;
                }
                return flow;
            }
        };

        auto local_connectivity(const Graph & g, int s, int t, int cap) -> int
        {
            SplitFlow flow(g, s, t);
            return flow.max_flow(2 * s + 1, 2 * t, cap);
        }

        /// min(kappa(G), cap). A minimum separator S misses one of the first
        /// |S| + 1 vertices, which is then cut from some non-neighbour.
        auto connectivity_up_to(const Graph & g, int cap) -> int
        {
            int n = g.size();
            if (n <= 1 || ! is_connected(g))
                return 0;
            int best = std::min(cap, n - 1);
            for (int i = 0; i < n && i <= best; ++i)
                for (int j = 0; j < n && best > 0; ++j)
                    if (j != i && ! g.adjacent(i, j))
                        best = std::min(best, local_connectivity(g, i, j, best));
            return best;
        }
    }

    auto vertex_connectivity(const Graph & g) -> int
    {
        return connectivity_up_to(g, std::numeric_limits<int>::max());
    }

    auto is_s_connected(const Graph & g, int s) -> bool
    {
        if (s <= 0)
            return true;
        return connectivity_up_to(g, s) >= s;
    }

    namespace
    {
        struct Colouring
        {
            const Graph & g;
            vector<int> order;
            vector<int> colour;
            int best;

            auto search(std::size_t depth, int used) -> void
            {
                if (used >= best)
                    return;
                if (depth == order.size()) {
                    best = used;
                    return;
                }
                int v = order[depth];
                for (int c = 0; c <= used && std::max(used, c + 1) < best; ++c) {
                    bool clash = false;
                    for (std::size_t e = 0; e < depth && ! clash; ++e)
                        clash = colour[order[e]] == c && g.adjacent(v, order[e]);
                    if (clash)
                        continue;
                    colour[v] = c;
                    search(depth + 1, std::max(used, c + 1));
                    colour[v] = -1;
                }
            }
        };
    }

    auto chromatic_number(const Graph & g) -> int
    {
        if (g.size() > 16)
            throw GuardExceeded("chromatic_number: limited to 16 vertices, got " + std::to_string(g.size()));
        int n = g.size();
        Colouring colouring{g, {}, vector<int>(n, -1), n + 1};
        for (int v = 0; v < n; ++v)
            colouring.order.push_back(v);
        std::stable_sort(colouring.order.begin(), colouring.order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
        colouring.search(0, 0);
        return colouring.best;
    }

    auto twins(const Graph & g) -> vector<TwinPair>
    {
        vector<TwinPair> result;
        int n = g.size();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                auto a = g.neighbourhood(u), b = g.neighbourhood(v);
                a.reset(v);
                b.reset(u);
                if (a == b)
                    result.push_back({u, v, g.adjacent(u, v)});
            }
        return result;
    }

    auto automorphism_exists(const Graph & g, const vector<pair<int, int>> & partial_map) -> bool
    {
        if (g.size() > 64)
            throw GuardExceeded("automorphism_exists: limited to 64 vertices");
        return find_isomorphism(g, g, partial_map).has_value();
    }
}
