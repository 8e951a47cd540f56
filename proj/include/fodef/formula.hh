#pragma once

#include <fodef/errors.hh>
#include <fodef/graph.hh>

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fodef
{
    enum class NodeKind
    {
        Adjacent,
        Equal,
        Not,
        And,
        Or,
        Implies,
        Exists,
        Forall
    };

    /// First-order formula over the vocabulary {~, =}. Atoms use `left` and
    /// `right` as variable names; quantifiers bind `left` in children[0].
    struct Formula
    {
        NodeKind kind = NodeKind::Equal;
        std::string left, right;
        std::vector<Formula> children;

        auto operator==(const Formula &) const -> bool = default;
    };

    class ParseError : public Error
    {
        std::size_t _position;

    public:
        ParseError(const std::string & what, std::size_t position) :
            Error(what + " at position " + std::to_string(position)),
            _position(position)
        {
        }

        auto position() const -> std::size_t { return _position; }
    };

    class UnboundVariable : public Error
    {
        std::string _name;

    public:
        explicit UnboundVariable(const std::string & name) :
            Error("unbound variable '" + name + "'"),
            _name(name)
        {
        }

        auto name() const -> const std::string & { return _name; }
    };

    namespace fo
    {
        auto adjacent(std::string x, std::string y) -> Formula;
        auto equal(std::string x, std::string y) -> Formula;
        auto negate(Formula f) -> Formula;
        /// A single operand is returned unchanged.
        auto all_of(std::vector<Formula> fs) -> Formula;
        auto any_of(std::vector<Formula> fs) -> Formula;
        auto implies(Formula premise, Formula conclusion) -> Formula;
        auto exists(std::string var, Formula body) -> Formula;
        auto forall(std::string var, Formula body) -> Formula;
    }

    /// Parses a closed sentence; see README for the grammar.
    auto parse(std::string_view text) -> Formula;
    /// Parses without the closedness check.
    auto parse_formula(std::string_view text) -> Formula;

    /// Fully parenthesised text that parses back to an equal tree.
    auto to_string(const Formula & f) -> std::string;

    auto free_variables(const Formula & f) -> std::set<std::string>;
    auto is_closed(const Formula & f) -> bool;
    auto quantifier_depth(const Formula & f) -> int;
    /// Number of distinct variable names occurring in f.
    auto variable_width(const Formula & f) -> int;

    /// Equal up to renaming of bound variables.
    auto alpha_equivalent(const Formula & a, const Formula & b) -> bool;

    /// A formula true on complement(G) exactly when f is true on G:
    /// x ~ y becomes !(x = y) & !(x ~ y).
    auto dual(const Formula & f) -> Formula;

    /// A sentence compiled to variable slots, for evaluating on many graphs.
    class CompiledSentence
    {
        struct Node
        {
            NodeKind kind;
            int a = -1, b = -1;
            std::vector<int> children;
        };

        std::vector<Node> _nodes;
        int _slots = 0;

        auto compile(const Formula & f, std::vector<std::string> & names) -> int;
        auto evaluate(const Graph & g, int node, std::vector<int> & env) const -> bool;

    public:
        /// Throws UnboundVariable if f is not closed.
        explicit CompiledSentence(const Formula & f);

        auto operator()(const Graph & g) const -> bool;
    };

    /// Standard satisfaction; throws UnboundVariable on open formulas.
    auto eval(const Graph & g, const Formula & f) -> bool;

    /// The three-variable, depth-three sentence true exactly on graphs with
    /// an induced paw: some vertex lies on a triangle and has a vertex at
    /// distance two, with a neighbour of the first not adjacent to the second.
    auto paw_sentence() -> Formula;

    /// The k-extension axiom as a depth-k sentence over variables x1..x(k-1), z.
    /// ea_formula(1) is E z (z = z). Refuses k > 5.
    auto ea_formula(int k) -> Formula;
}
