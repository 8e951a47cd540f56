#pragma once

#include <fodef/errors.hh>
#include <fodef/graph.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fodef
{
    /// A set of pebbled pairs (g in G, h in H), kept sorted and duplicate-free.
    class Position
    {
        std::vector<std::pair<int, int>> _pairs;

    public:
        Position() = default;
        explicit Position(std::vector<std::pair<int, int>> pairs);

        auto pairs() const -> const std::vector<std::pair<int, int>> & { return _pairs; }
        auto size() const -> int { return static_cast<int>(_pairs.size()); }

        auto operator==(const Position &) const -> bool = default;
        auto operator<=>(const Position &) const = default;
    };

    /// g = g' iff h = h', and g ~ g' iff h ~ h', over all pairs of pairs.
    auto is_partial_iso(const Position & pos, const Graph & g, const Graph & h) -> bool;

    class GameOutcome
    {
    public:
        enum class Kind
        {
            Rounds,
            Infinity,
            Unknown
        };

    private:
        Kind _kind = Kind::Infinity;
        int _rounds = 0;

        GameOutcome(Kind kind, int rounds) :
            _kind(kind),
            _rounds(rounds)
        {
        }

    public:
        static auto rounds(int d) -> GameOutcome { return {Kind::Rounds, d}; }
        static auto infinity() -> GameOutcome { return {Kind::Infinity, 0}; }
        /// Spoiler has no win within cap rounds; the true value is unknown.
        static auto unknown(int cap) -> GameOutcome { return {Kind::Unknown, cap}; }

        auto kind() const -> Kind { return _kind; }
        auto finite() const -> bool { return _kind == Kind::Rounds; }
        auto is_infinity() const -> bool { return _kind == Kind::Infinity; }
        auto is_unknown() const -> bool { return _kind == Kind::Unknown; }
        /// The exact round count, or for Unknown the cap that was exhausted.
        auto value() const -> int { return _rounds; }

        auto operator==(const GameOutcome &) const -> bool = default;
    };

    auto to_string(const GameOutcome & outcome) -> std::string;

    class BudgetExceeded : public GuardExceeded
    {
        long double _positions;

    public:
        BudgetExceeded(long double positions, long long budget);

        auto positions() const -> long double { return _positions; }
    };

    enum class Execution
    {
        Serial,
        Parallel
    };

    struct DkOptions
    {
        /// Stop after this many rounds and report Unknown. At most 254.
        std::optional<int> round_cap;
        /// Limit on the number of canonical positions, sum over j <= k of C(|G||H|, j).
        long long budget = 100'000'000;
        Execution execution = Execution::Parallel;
    };

    struct DkResult
    {
        GameOutcome outcome = GameOutcome::infinity();
        /// Partial-isomorphism positions initialised or resolved by the search.
        long long positions_explored = 0;
        long long canonical_positions = 0;
    };

    /// D^k(G, H): the least number of rounds in which Spoiler wins the
    /// k-pebble game, or Infinity. Throws BudgetExceeded before allocating.
    auto dk_solve(const Graph & g, const Graph & h, int k, const DkOptions & options = {}) -> DkResult;

    auto dk(const Graph & g, const Graph & h, int k, const DkOptions & options = {}) -> GameOutcome;

    /// D(G, H): least d <= depth_cap such that Spoiler wins the d-round
    /// d-pebble game. Isomorphic inputs give Infinity.
    auto distinguishing_depth(const Graph & g, const Graph & h, int depth_cap, const DkOptions & options = {}) -> GameOutcome;

    /// W(G, H): least k <= k_max with D^k finite. Nullopt when none is found,
    /// which includes isomorphic inputs where W is undefined.
    auto width(const Graph & g, const Graph & h, int k_max, const DkOptions & options = {}) -> std::optional<int>;
}
