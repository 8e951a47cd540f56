#include <fodef/constructors.hh>
#include <fodef/errors.hh>
#include <fodef/graph6.hh>
#include <fodef/names.hh>
#include <fodef/operations.hh>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>

using std::string;
using std::string_view;
using std::vector;

namespace fodef
{
    namespace
    {
        auto split_params(string_view text) -> vector<string>
        {
            vector<string> out;
            if (text.empty())
                return out;
            std::size_t start = 0;
            for (;;) {
                auto comma = text.find(',', start);
                out.emplace_back(text.substr(start, comma - start));
                if (comma == string_view::npos)
                    break;
                start = comma + 1;
            }
            return out;
        }

        auto to_int(const string & s, const string & name) -> long long
        {
            long long v = 0;
            auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || end != s.data() + s.size())
                throw InvalidArgument(name + ": expected an integer, got '" + s + "'");
            return v;
        }

        auto to_u64(const string & s, const string & name) -> std::uint64_t
        {
            std::uint64_t v = 0;
            auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || end != s.data() + s.size())
                throw InvalidArgument(name + ": expected an unsigned seed, got '" + s + "'");
            return v;
        }

        auto to_double(const string & s, const string & name) -> double
        {
            std::size_t used = 0;
            double v = 0;
            try {
                v = std::stod(s, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != s.size() || s.empty())
                throw InvalidArgument(name + ": expected a number, got '" + s + "'");
            return v;
        }

        auto small(long long v, const string & name) -> int
        {
            if (v < 0 || v > 1'000'000)
                throw InvalidArgument(name + ": parameter out of range");
            return static_cast<int>(v);
        }

        struct Constructor
        {
            std::size_t arity;
            string usage;
            Graph (*build)(const vector<string> &, const string &);
        };

        auto constructors() -> const std::map<string, Constructor> &
        {
            static const std::map<string, Constructor> table{
                {"complete", {1, "complete:n", [](auto & p, auto & nm) { return complete(small(to_int(p[0], nm), nm)); }}},
                {"empty", {1, "empty:n", [](auto & p, auto & nm) { return empty_graph(small(to_int(p[0], nm), nm)); }}},
                {"path", {1, "path:n", [](auto & p, auto & nm) { return path(small(to_int(p[0], nm), nm)); }}},
                {"cycle", {1, "cycle:n", [](auto & p, auto & nm) { return cycle(small(to_int(p[0], nm), nm)); }}},
                {"star", {1, "star:s", [](auto & p, auto & nm) { return star(small(to_int(p[0], nm), nm)); }}},
                {"claw", {0, "claw", [](auto &, auto &) { return claw(); }}},
                {"paw", {0, "paw", [](auto &, auto &) { return paw(); }}},
                {"diamond", {0, "diamond", [](auto &, auto &) { return diamond(); }}},
                {"rook", {1, "rook:m", [](auto & p, auto & nm) { return rook(small(to_int(p[0], nm), nm)); }}},
                {"turan", {2, "turan:k,n", [](auto & p, auto & nm) { return turan(small(to_int(p[0], nm), nm), small(to_int(p[1], nm), nm)); }}},
                {"paley", {1, "paley:q", [](auto & p, auto & nm) { return paley(small(to_int(p[0], nm), nm)); }}},
                {"hypercube", {1, "hypercube:d", [](auto & p, auto & nm) { return hypercube(small(to_int(p[0], nm), nm)); }}},
                {"cube", {1, "cube:d", [](auto & p, auto & nm) { return hypercube(small(to_int(p[0], nm), nm)); }}},
                {"gnp", {3, "gnp:n,p,seed", [](auto & p, auto & nm) { return gnp(small(to_int(p[0], nm), nm), to_double(p[1], nm), to_u64(p[2], nm)); }}},
                {"turan_random", {3, "turan_random:k,n,seed", [](auto & p, auto & nm) {
                     return turan_random(small(to_int(p[0], nm), nm), small(to_int(p[1], nm), nm), to_u64(p[2], nm));
                 }}},
                {"H", {1, "H:i (power of K_1, 2^(i-1) vertices)", [](auto & p, auto & nm) {
                     int i = small(to_int(p[0], nm), nm);
                     if (i > 16)
                         throw GuardExceeded("H: limited to i <= 16");
                     return power(complete(1), i);
                 }}},
            };
            return table;
        }
    }

    auto graph_from_name(string_view text) -> Graph
    {
        auto colon = text.find(':');
        string name(text.substr(0, colon));
        auto params = colon == string_view::npos ? vector<string>{} : split_params(text.substr(colon + 1));
        auto & table = constructors();
        auto it = table.find(name);
        if (it == table.end())
            throw InvalidArgument("unknown graph constructor '" + name + "'");
        if (params.size() != it->second.arity)
            throw InvalidArgument(name + ": expected " + it->second.usage);
        return it->second.build(params, name);
    }

    auto resolve_graph(const string & text) -> Graph
    {
        auto colon = text.find(':');
        auto & table = constructors();
        if (table.count(text.substr(0, colon)))
            return graph_from_name(text);
        std::error_code ec;
        if (std::filesystem::is_regular_file(text, ec)) {
            std::ifstream in(text);
            auto graphs = graph6_read_all(in);
            if (graphs.empty())
                throw InvalidArgument(text + ": no graph6 lines");
            return graphs.front();
        }
        return graph6_decode(text);
    }

    auto constructor_names() -> vector<string>
    {
        vector<string> out;
        for (auto & [name, c] : constructors())
            out.push_back(c.usage);
        return out;
    }
}
