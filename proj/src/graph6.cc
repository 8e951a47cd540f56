#include <fodef/errors.hh>
#include <fodef/graph6.hh>

using std::string;
using std::string_view;

namespace fodef
{
    namespace
    {
        constexpr int max_vertices = 1 << 18;
        constexpr string_view header = ">>graph6<<";
    }

    auto graph6_encode(const Graph & g) -> string
    {
        int n = g.size();
        if (n >= max_vertices)
            throw GuardExceeded("graph6: only n < 2^18 is supported");

        string out;
        if (n <= 62)
            out.push_back(static_cast<char>(63 + n));
        else {
            out.push_back(126);
            out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
            out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
            out.push_back(static_cast<char>(63 + (n & 63)));
        }

        int value = 0, filled = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(static_cast<char>(63 + value));
                    value = filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>(63 + (value << (6 - filled))));
        return out;
    }

    auto graph6_decode(string_view text) -> Graph
    {
        std::size_t pos = 0;
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
        if (text.substr(pos, header.size()) == header)
            pos += header.size();
        std::size_t end = text.size();
        while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r' || text[end - 1] == ' ' || text[end - 1] == '\t'))
            --end;

        auto sextet = [&](std::size_t at) -> int {
            if (at >= end)
                throw Graph6Error("graph6: unexpected end of input", at);
            auto c = static_cast<unsigned char>(text[at]);
            if (c < 63 || c > 126)
                throw Graph6Error("graph6: byte outside the range 63..126", at);
            return c - 63;
        };

        if (pos >= end)
            throw Graph6Error("graph6: empty input", pos);

        int n;
        if (static_cast<unsigned char>(text[pos]) == 126) {
            if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) == 126)
                throw Graph6Error("graph6: n >= 2^18 is not supported", pos + 1);
            n = (sextet(pos + 1) << 12) | (sextet(pos + 2) << 6) | sextet(pos + 3);
            if (n <= 62)
                throw Graph6Error("graph6: non-canonical size prefix", pos);
            pos += 4;
        }
        else {
            n = sextet(pos);
            pos += 1;
        }

        long long bits = static_cast<long long>(n) * (n - 1) / 2;
        std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
        if (end - pos < expected)
            throw Graph6Error("graph6: truncated adjacency data", end);
        if (end - pos > expected)
            throw Graph6Error("graph6: trailing bytes after adjacency data", pos + expected);

        Graph g(n);
        long long bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) {
                int s = sextet(pos + bit / 6);
                if ((s >> (5 - bit % 6)) & 1)
                    g.add_edge(i, j);
            }
        if (bits % 6 != 0) {
            std::size_t last = pos + expected - 1;
            int padding = static_cast<int>(6 - bits % 6);
            if (sextet(last) & ((1 << padding) - 1))
                throw Graph6Error("graph6: nonzero padding bits", last);
        }
        return g;
    }

    auto graph6_read_all(std::istream & in) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        string line;
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == string::npos)
                continue;
            result.push_back(graph6_decode(line));
        }
        return result;
    }
}
