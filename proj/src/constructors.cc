#include <fodef/constructors.hh>
#include <fodef/errors.hh>
#include <fodef/random.hh>

#include <string>
#include <vector>

using std::to_string;

namespace fodef
{
    namespace
    {
        auto require(bool condition, const std::string & message) -> void
        {
            if (! condition)
                throw InvalidArgument(message);
        }

        auto is_prime(int q) -> bool
        {
            if (q < 2)
                return false;
            for (int d = 2; d * d <= q; ++d)
                if (q % d == 0)
                    return false;
            return true;
        }
    }

    auto empty_graph(int n) -> Graph
    {
        require(n >= 0, "empty: n must be nonnegative");
        return Graph(n);
    }

    auto complete(int n) -> Graph
    {
        require(n >= 0, "complete: n must be nonnegative");
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto path(int n) -> Graph
    {
        require(n >= 0, "path: n must be nonnegative");
        Graph g(n);
        for (int u = 0; u + 1 < n; ++u)
            g.add_edge(u, u + 1);
        return g;
    }

    auto cycle(int n) -> Graph
    {
        require(n >= 3, "cycle: n must be at least 3, got " + to_string(n));
        auto g = path(n);
        g.add_edge(n - 1, 0);
        return g;
    }

    auto star(int s) -> Graph
    {
        require(s >= 0, "star: leaf count must be nonnegative");
        Graph g(s + 1);
        for (int v = 1; v <= s; ++v)
            g.add_edge(0, v);
        return g;
    }

    auto claw() -> Graph
    {
        return star(3);
    }

    auto paw() -> Graph
    {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        return g;
    }

    auto diamond() -> Graph
    {
        auto g = complete(4);
        g.remove_edge(0, 1);
        return g;
    }

    auto rook(int m) -> Graph
    {
        require(m >= 1, "rook: m must be at least 1");
        Graph g(m * m);
        for (int u = 0; u < m * m; ++u)
            for (int v = u + 1; v < m * m; ++v)
                if (u / m == v / m || u % m == v % m)
                    g.add_edge(u, v);
        return g;
    }

    auto turan(int k, int n) -> Graph
    {
        require(k >= 1 && n >= 0, "turan: need k >= 1 parts and part size n >= 0");
        Graph g(k * n);
        for (int u = 0; u < k * n; ++u)
            for (int v = u + 1; v < k * n; ++v)
                if (u / n != v / n)
                    g.add_edge(u, v);
        return g;
    }

    auto paley(int q) -> Graph
    {
        require(is_prime(q) && q % 4 == 1, "paley: q must be a prime with q = 1 (mod 4), got " + to_string(q));
        std::vector<bool> square(q, false);
        for (long long x = 1; x < q; ++x)
            square[(x * x) % q] = true;
        Graph g(q);
        for (int u = 0; u < q; ++u)
            for (int v = u + 1; v < q; ++v)
                if (square[v - u])
                    g.add_edge(u, v);
        return g;
    }

    auto hypercube(int d) -> Graph
    {
        require(d >= 0 && d <= 16, "hypercube: dimension must be in [0, 16]");
        int n = 1 << d;
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int b = 0; b < d; ++b)
                if (int v = u ^ (1 << b); u < v)
                    g.add_edge(u, v);
        return g;
    }

    auto gnp(int n, double p, std::uint64_t seed) -> Graph
    {
        require(n >= 0, "gnp: n must be nonnegative");
        require(p >= 0.0 && p <= 1.0, "gnp: probability must be in [0, 1]");
        Rng rng(seed);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bernoulli(p))
                    g.add_edge(u, v);
        return g;
    }

    auto turan_random(int k, int n, std::uint64_t seed) -> Graph
    {
        require(k >= 1 && n >= 0, "turan_random: need k >= 1 parts and part size n >= 0");
        Rng rng(seed);
        Graph g(k * n);
        for (int u = 0; u < k * n; ++u)
            for (int v = u + 1; v < k * n; ++v)
                if (u / n != v / n && rng.coin())
                    g.add_edge(u, v);
        return g;
    }

    auto graph_from_mask(int n, std::uint64_t mask) -> Graph
    {
        require(n >= 0 && n * (n - 1) / 2 <= 64, "graph_from_mask: too many vertices for a 64-bit mask");
        Graph g(n);
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1)
                    g.add_edge(i, j);
        return g;
    }
}
