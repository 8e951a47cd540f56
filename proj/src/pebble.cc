#include <fodef/operations.hh>
#include <fodef/pebble.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <sstream>

using std::optional;
using std::pair;
using std::vector;

namespace fodef
{
    Position::Position(vector<pair<int, int>> pairs) :
        _pairs(std::move(pairs))
    {
        std::sort(_pairs.begin(), _pairs.end());
        _pairs.erase(std::unique(_pairs.begin(), _pairs.end()), _pairs.end());
    }

    auto is_partial_iso(const Position & pos, const Graph & g, const Graph & h) -> bool
    {
        auto & p = pos.pairs();
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b) {
                auto [g1, h1] = p[a];
                auto [g2, h2] = p[b];
                if ((g1 == g2) != (h1 == h2))
                    return false;
                if (g1 != g2 && g.adjacent(g1, g2) != h.adjacent(h1, h2))
                    return false;
            }
        return true;
    }

    auto to_string(const GameOutcome & outcome) -> std::string
    {
        switch (outcome.kind()) {
        case GameOutcome::Kind::Rounds: return std::to_string(outcome.value());
        case GameOutcome::Kind::Infinity: return "infinity";
        case GameOutcome::Kind::Unknown: return "unknown(>" + std::to_string(outcome.value()) + ")";
        }
        return "?";
    }

    namespace
    {
        auto describe_budget(long double positions, long long budget) -> std::string
        {
            std::ostringstream s;
            s.precision(4);
            s << "pebble: " << positions << " canonical positions exceed the budget of " << budget;
            return s.str();
        }
    }

    BudgetExceeded::BudgetExceeded(long double positions, long long budget) :
        GuardExceeded(describe_budget(positions, budget)),
        _positions(positions)
    {
    }

    namespace
    {
        constexpr int max_pebbles = 8;
        constexpr std::uint8_t unresolved = 255;
        constexpr std::uint8_t no_move = 255;
        constexpr int max_rounds = 254;

        using Pairs = std::array<int, max_pebbles>;

        /// Backward induction over canonical positions. A position is a set
        /// of pair indices q = g * |H| + h, ranked by the combinatorial number
        /// system within its size and offset by the counts of smaller sizes.
        ///
        /// An intermediate position P' (size < k) is what remains after
        /// Spoiler lifts a pair or keeps all pairs; a move is (P', side, v).
        /// counters hold the number of Duplicator replies that are partial
        /// isomorphisms not yet known to be lost. A move wins in r + 1 rounds
        /// once its last reply is resolved at round r, and a position P
        /// resolves at the least round of any move from any intermediate of P.
        class Solver
        {
            const Graph & _g;
            const Graph & _h;
            Graph _co_g, _co_h;
            int _k, _ng, _nh, _n_pairs, _moves_per;
            int _wg, _wh;
            vector<vector<std::uint64_t>> _binom;
            vector<std::uint64_t> _offset;
            vector<std::uint8_t> _status;
            vector<std::uint16_t> _counters;
            vector<std::uint8_t> _best_move;
            long long _explored = 0;

            auto rank(const Pairs & p, int size) const -> std::uint64_t
            {
                std::uint64_t r = _offset[size];
                for (int i = 0; i < size; ++i)
                    r += _binom[p[i]][i + 1];
                return r;
            }

            auto unrank(std::uint64_t r, Pairs & p) const -> int
            {
                int size = 0;
                while (size < _k && r >= _offset[size + 1])
                    ++size;
                r -= _offset[size];
                for (int i = size; i >= 1; --i) {
                    int lo = i - 1, hi = _n_pairs - 1;
                    while (lo < hi) {
                        int mid = (lo + hi + 1) / 2;
                        if (_binom[mid][i] <= r)
                            lo = mid;
                        else
                            hi = mid - 1;
                    }
                    p[i - 1] = lo;
                    r -= _binom[lo][i];
                }
                return size;
            }

            /// Replies in `other` to a placement on `v` in `mine` that keep a
            /// partial isomorphism with the pairs of p. v must be unpebbled.
            auto replies(const Pairs & p, int size, bool in_g, int v, vector<Word> & out) const -> void
            {
                const Graph & mine = in_g ? _g : _h;
                const Graph & other = in_g ? _h : _g;
                const Graph & co_other = in_g ? _co_h : _co_g;
                int w = in_g ? _wh : _wg;
                int n_other = in_g ? _nh : _ng;
                out.assign(w, ~Word{0});
                if (w > 0 && n_other % 64 != 0)
                    out[w - 1] = (Word{1} << (n_other % 64)) - 1;
                for (int i = 0; i < size; ++i) {
                    int pg = p[i] / _nh, ph = p[i] % _nh;
                    int a = in_g ? pg : ph, b = in_g ? ph : pg;
                    auto row = mine.adjacent(v, a) ? other.row(b) : co_other.row(b);
                    for (int x = 0; x < w; ++x)
                        out[x] &= row[x];
                }
            }

            auto pebbled(const Pairs & p, int size, bool in_g, int v) const -> bool
            {
                for (int i = 0; i < size; ++i)
                    if ((in_g ? p[i] / _nh : p[i] % _nh) == v)
                        return true;
                return false;
            }

            auto partial_iso(const Pairs & p, int size) const -> bool
            {
                for (int a = 0; a < size; ++a)
                    for (int b = a + 1; b < size; ++b) {
                        int g1 = p[a] / _nh, h1 = p[a] % _nh, g2 = p[b] / _nh, h2 = p[b] % _nh;
                        if ((g1 == g2) != (h1 == h2))
                            return false;
                        if (g1 != g2 && _g.adjacent(g1, g2) != _h.adjacent(h1, h2))
                            return false;
                    }
                return true;
            }

            auto counter_index(std::uint64_t intermediate, bool in_g, int v) const -> std::size_t
            {
                return static_cast<std::size_t>(intermediate) * _moves_per + (in_g ? v : _ng + v);
            }

            /// Fills the counters of one intermediate; returns whether it is a
            /// partial isomorphism.
            auto initialise(std::uint64_t r, vector<Word> & scratch) -> bool
            {
                Pairs p{};
                int size = unrank(r, p);
                if (! partial_iso(p, size))
                    return false;
                bool winning = false;
                for (int side = 0; side < 2; ++side) {
                    bool in_g = side == 0;
                    int n_mine = in_g ? _ng : _nh;
                    for (int v = 0; v < n_mine; ++v) {
                        int count;
                        if (pebbled(p, size, in_g, v))
                            count = 1;
                        else {
                            replies(p, size, in_g, v, scratch);
                            count = 0;
                            for (auto word : scratch)
                                count += std::popcount(word);
                        }
                        _counters[counter_index(r, in_g, v)] = static_cast<std::uint16_t>(count);
                        winning = winning || count == 0;
                    }
                }
                if (winning)
                    _best_move[r] = 1;
                return true;
            }

            auto insert_sorted(const Pairs & p, int size, int q, Pairs & out) const -> void
            {
                int j = 0;
                for (int i = 0; i < size; ++i) {
                    if (q < p[i] && j == i)
                        out[j++] = q;
                    out[j++] = p[i];
                }
                if (j == size)
                    out[j++] = q;
            }

        public:
            Solver(const Graph & g, const Graph & h, int k) :
                _g(g),
                _h(h),
                _co_g(complement(g)),
                _co_h(complement(h)),
                _k(k),
                _ng(g.size()),
                _nh(h.size()),
                _n_pairs(g.size() * h.size()),
                _moves_per(g.size() + h.size()),
                _wg(words_for(g.size())),
                _wh(words_for(h.size()))
            {
            }

            static auto canonical_positions(long long n_pairs, int k) -> long double
            {
                long double total = 0, term = 1;
                for (int j = 0; j <= k && j <= n_pairs; ++j) {
                    total += term;
                    term = term * (n_pairs - j) / (j + 1);
                }
                return total;
            }

            auto run(const DkOptions & options) -> DkResult
            {
                int cap = std::min(options.round_cap.value_or(max_rounds), max_rounds);

                _binom.assign(_n_pairs + 1, vector<std::uint64_t>(_k + 1, 0));
                for (int n = 0; n <= _n_pairs; ++n) {
                    _binom[n][0] = 1;
                    for (int j = 1; j <= _k; ++j)
                        _binom[n][j] = n == 0 ? 0 : _binom[n - 1][j - 1] + _binom[n - 1][j];
                }
                _offset.assign(_k + 2, 0);
                for (int j = 0; j <= _k; ++j)
                    _offset[j + 1] = _offset[j] + (_n_pairs >= j ? _binom[_n_pairs][j] : 0);

                std::uint64_t total = _offset[_k + 1], intermediates = _offset[_k];
                _status.assign(total, unresolved);
                _counters.assign(static_cast<std::size_t>(intermediates) * _moves_per, 0);
                _best_move.assign(intermediates, no_move);

                long long explored = 0;
                auto n_intermediates = static_cast<long long>(intermediates);
                if (options.execution == Execution::Parallel) {
#pragma omp parallel
                    {
                        vector<Word> scratch;
#pragma omp for schedule(dynamic, 256) reduction(+ : explored)
                        for (long long r = 0; r < n_intermediates; ++r)
                            if (initialise(static_cast<std::uint64_t>(r), scratch))
                                ++explored;
                    }
                }
                else {
                    vector<Word> scratch;
                    for (long long r = 0; r < n_intermediates; ++r)
                        if (initialise(static_cast<std::uint64_t>(r), scratch))
                            ++explored;
                }

                vector<std::uint64_t> frontier;
                for (std::uint64_t r = 0; r < intermediates; ++r)
                    if (_best_move[r] == 1)
                        frontier.push_back(r);

                DkResult result;
                result.canonical_positions = static_cast<long long>(total);
                vector<Word> scratch;
                vector<pair<Pairs, int>> resolved;
                for (int round = 1;; ++round) {
                    resolved.clear();
                    for (auto r : frontier) {
                        Pairs p{};
                        int size = unrank(r, p);
                        if (_status[r] == unresolved) {
                            _status[r] = static_cast<std::uint8_t>(round);
                            resolved.emplace_back(p, size);
                        }
                        if (size >= _k)
                            continue;
                        // Positions obtained by adding one compatible pair to p.
                        for (int v = 0; v < _ng; ++v) {
                            if (pebbled(p, size, true, v))
                                continue;
                            replies(p, size, true, v, scratch);
                            for (int x = 0; x < _wh; ++x)
                                for (Word bits = scratch[x]; bits; bits &= bits - 1) {
                                    int w = x * 64 + std::countr_zero(bits);
                                    Pairs up{};
                                    insert_sorted(p, size, v * _nh + w, up);
                                    auto ur = rank(up, size + 1);
                                    if (_status[ur] == unresolved) {
                                        _status[ur] = static_cast<std::uint8_t>(round);
                                        resolved.emplace_back(up, size + 1);
                                    }
                                }
                        }
                    }
                    explored += static_cast<long long>(std::count_if(resolved.begin(), resolved.end(),
                        [&](auto & e) { return e.second == _k; }));

                    if (_status[0] != unresolved) {
                        result.outcome = GameOutcome::rounds(_status[0]);
                        break;
                    }
                    if (round >= cap) {
                        result.outcome = GameOutcome::unknown(cap);
                        break;
                    }

                    frontier.clear();
                    auto decrement = [&](std::uint64_t intermediate, bool in_g, int v) {
                        auto & c = _counters[counter_index(intermediate, in_g, v)];
                        if (--c == 0 && _best_move[intermediate] == no_move) {
                            _best_move[intermediate] = static_cast<std::uint8_t>(round + 1);
                            frontier.push_back(intermediate);
                        }
                    };
                    for (auto & [q, size] : resolved) {
                        auto qr = rank(q, size);
                        for (int i = 0; i < size; ++i) {
                            int g = q[i] / _nh, h = q[i] % _nh;
                            if (size < _k) {
                                decrement(qr, true, g);
                                decrement(qr, false, h);
                            }
                            Pairs sub{};
                            for (int j = 0, m = 0; j < size; ++j)
                                if (j != i)
                                    sub[m++] = q[j];
                            auto sr = rank(sub, size - 1);
                            decrement(sr, true, g);
                            decrement(sr, false, h);
                        }
                    }
                    if (frontier.empty()) {
                        result.outcome = GameOutcome::infinity();
                        break;
                    }
                    std::sort(frontier.begin(), frontier.end());
                }
                result.positions_explored = explored;
                return result;
            }
        };
    }

    auto dk_solve(const Graph & g, const Graph & h, int k, const DkOptions & options) -> DkResult
    {
        if (k < 1)
            throw InvalidArgument("pebble: k must be at least 1");
        if (k > max_pebbles)
            throw GuardExceeded("pebble: at most " + std::to_string(max_pebbles) + " pebbles are supported");
        if (options.round_cap && *options.round_cap < 1)
            throw InvalidArgument("pebble: round cap must be at least 1");
        auto positions = Solver::canonical_positions(static_cast<long long>(g.size()) * h.size(), k);
        if (positions > static_cast<long double>(options.budget))
            throw BudgetExceeded(positions, options.budget);
        Solver solver(g, h, k);
        return solver.run(options);
    }

    auto dk(const Graph & g, const Graph & h, int k, const DkOptions & options) -> GameOutcome
    {
        return dk_solve(g, h, k, options).outcome;
    }

    auto distinguishing_depth(const Graph & g, const Graph & h, int depth_cap, const DkOptions & options) -> GameOutcome
    {
        if (depth_cap < 1)
            throw InvalidArgument("distinguishing_depth: cap must be at least 1");
        if (g.size() <= 64 && h.size() <= 64 && isomorphic(g, h))
            return GameOutcome::infinity();
        for (int d = 1; d <= depth_cap; ++d) {
            auto opts = options;
            opts.round_cap = d;
            if (dk(g, h, d, opts).finite())
                return GameOutcome::rounds(d);
        }
        return GameOutcome::unknown(depth_cap);
    }

    auto width(const Graph & g, const Graph & h, int k_max, const DkOptions & options) -> optional<int>
    {
        for (int k = 1; k <= k_max; ++k)
            if (dk(g, h, k, options).finite())
                return k;
        return std::nullopt;
    }
}
