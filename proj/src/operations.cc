#include <fodef/errors.hh>
#include <fodef/operations.hh>

#include <string>

namespace fodef
{
    auto complement(const Graph & g) -> Graph
    {
        int n = g.size();
        Graph result(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (! g.adjacent(u, v))
                    result.add_edge(u, v);
        return result;
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        int offset = g.size();
        Graph result(g.size() + h.size());
        for (int u = 0; u < g.size(); ++u)
            for (int v : g.neighbours(u))
                if (u < v)
                    result.add_edge(u, v);
        for (int u = 0; u < h.size(); ++u)
            for (int v : h.neighbours(u))
                if (u < v)
                    result.add_edge(offset + u, offset + v);
        return result;
    }

    auto multiple(int s, const Graph & g) -> Graph
    {
        if (s < 0)
            throw InvalidArgument("multiple: copy count must be nonnegative");
        int n = g.size();
        Graph result(s * n);
        for (int c = 0; c < s; ++c)
            for (int u = 0; u < n; ++u)
                for (int v : g.neighbours(u))
                    if (u < v)
                        result.add_edge(c * n + u, c * n + v);
        return result;
    }

    auto join(const Graph & a, const Graph & b) -> Graph
    {
        auto result = disjoint_union(a, b);
        for (int u = 0; u < a.size(); ++u)
            for (int v = 0; v < b.size(); ++v)
                result.add_edge(u, a.size() + v);
        return result;
    }

    auto lex_product(const Graph & a, const Graph & b) -> Graph
    {
        int na = a.size(), nb = b.size();
        Graph result(na * nb);
        for (int u = 0; u < na; ++u)
            for (int v = 0; v < nb; ++v)
                for (int x = u; x < na; ++x)
                    for (int y = (x == u ? v + 1 : 0); y < nb; ++y)
                        if (a.adjacent(u, x) || (u == x && b.adjacent(v, y)))
                            result.add_edge(u * nb + v, x * nb + y);
        return result;
    }

    auto double_complement(const Graph & x, int j) -> Graph
    {
        Graph result = x;
        for (int step = 0; step < j; ++step)
            result = complement(multiple(2, result));
        return result;
    }

    auto power(const Graph & x, int i) -> Graph
    {
        if (i < 1)
            throw InvalidArgument("power: exponent must be at least 1, got " + std::to_string(i));
        return double_complement(x, i - 1);
    }
}
