#include <fodef/formula.hh>

#include <algorithm>
#include <cctype>
#include <map>

using std::string;
using std::string_view;
using std::vector;

namespace fodef
{
    namespace fo
    {
        auto adjacent(string x, string y) -> Formula
        {
            return Formula{NodeKind::Adjacent, std::move(x), std::move(y), {}};
        }

        auto equal(string x, string y) -> Formula
        {
            return Formula{NodeKind::Equal, std::move(x), std::move(y), {}};
        }

        auto negate(Formula f) -> Formula
        {
            return Formula{NodeKind::Not, {}, {}, {std::move(f)}};
        }

        auto all_of(vector<Formula> fs) -> Formula
        {
            if (fs.empty())
                throw InvalidArgument("all_of: needs at least one operand");
            if (fs.size() == 1)
                return std::move(fs.front());
            return Formula{NodeKind::And, {}, {}, std::move(fs)};
        }

        auto any_of(vector<Formula> fs) -> Formula
        {
            if (fs.empty())
                throw InvalidArgument("any_of: needs at least one operand");
            if (fs.size() == 1)
                return std::move(fs.front());
            return Formula{NodeKind::Or, {}, {}, std::move(fs)};
        }

        auto implies(Formula premise, Formula conclusion) -> Formula
        {
            return Formula{NodeKind::Implies, {}, {}, {std::move(premise), std::move(conclusion)}};
        }

        auto exists(string var, Formula body) -> Formula
        {
            return Formula{NodeKind::Exists, std::move(var), {}, {std::move(body)}};
        }

        auto forall(string var, Formula body) -> Formula
        {
            return Formula{NodeKind::Forall, std::move(var), {}, {std::move(body)}};
        }
    }

    namespace
    {
        enum class Token
        {
            End,
            LParen,
            RParen,
            AndOp,
            OrOp,
            Arrow,
            Bang,
            Tilde,
            Equals,
            NotTilde,
            NotEquals,
            ExistsKw,
            ForallKw,
            Name
        };

        class Parser
        {
            string_view _text;
            std::size_t _pos = 0;
            Token _token = Token::End;
            std::size_t _token_start = 0;
            string _name;

            auto advance() -> void
            {
                while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
                    ++_pos;
                _token_start = _pos;
                if (_pos >= _text.size()) {
                    _token = Token::End;
                    return;
                }
                char c = _text[_pos];
                auto next_is = [&](char d) { return _pos + 1 < _text.size() && _text[_pos + 1] == d; };
                switch (c) {
                case '(': _token = Token::LParen; ++_pos; return;
                case ')': _token = Token::RParen; ++_pos; return;
                case '&': _token = Token::AndOp; ++_pos; return;
                case '|': _token = Token::OrOp; ++_pos; return;
                case '~': _token = Token::Tilde; ++_pos; return;
                case '=': _token = Token::Equals; ++_pos; return;
                case '-':
                    if (next_is('>')) {
                        _token = Token::Arrow;
                        _pos += 2;
                        return;
                    }
                    break;
                case '!':
                    if (next_is('~')) {
                        _token = Token::NotTilde;
                        _pos += 2;
                    }
                    else if (next_is('=')) {
                        _token = Token::NotEquals;
                        _pos += 2;
                    }
                    else {
                        _token = Token::Bang;
                        ++_pos;
                    }
                    return;
                default:
                    break;
                }
                if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                    std::size_t start = _pos;
                    while (_pos < _text.size() && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_' || _text[_pos] == '\''))
                        ++_pos;
                    _name = string(_text.substr(start, _pos - start));
                    _token = _name == "E" ? Token::ExistsKw : _name == "A" ? Token::ForallKw : Token::Name;
                    return;
                }
                throw ParseError(string("unexpected character '") + c + "'", _pos);
            }

            auto expect(Token t, const char * what) -> void
            {
                if (_token != t)
                    throw ParseError(string("expected ") + what, _token_start);
                advance();
            }

            auto variable() -> string
            {
                if (_token != Token::Name)
                    throw ParseError("expected a variable name", _token_start);
                string v = _name;
                advance();
                return v;
            }

            auto implication() -> Formula
            {
                auto left = disjunction();
                if (_token == Token::Arrow) {
                    advance();
                    return fo::implies(std::move(left), implication());
                }
                return left;
            }

            auto disjunction() -> Formula
            {
                vector<Formula> parts{conjunction()};
                while (_token == Token::OrOp) {
                    advance();
                    parts.push_back(conjunction());
                }
                return fo::any_of(std::move(parts));
            }

            auto conjunction() -> Formula
            {
                vector<Formula> parts{unary()};
                while (_token == Token::AndOp) {
                    advance();
                    parts.push_back(unary());
                }
                return fo::all_of(std::move(parts));
            }

            auto unary() -> Formula
            {
                switch (_token) {
                case Token::Bang:
                    advance();
                    return fo::negate(unary());
                case Token::ExistsKw:
                case Token::ForallKw: {
                    bool is_exists = _token == Token::ExistsKw;
                    advance();
                    auto v = variable();
                    auto body = unary();
                    return is_exists ? fo::exists(v, std::move(body)) : fo::forall(v, std::move(body));
                }
                default:
                    return primary();
                }
            }

            auto primary() -> Formula
            {
                if (_token == Token::LParen) {
                    advance();
                    auto f = implication();
                    expect(Token::RParen, "')'");
                    return f;
                }
                if (_token != Token::Name)
                    throw ParseError("expected a formula", _token_start);
                auto x = variable();
                auto op = _token;
                if (op != Token::Tilde && op != Token::Equals && op != Token::NotTilde && op != Token::NotEquals)
                    throw ParseError("expected '~', '=', '!~' or '!='", _token_start);
                advance();
                auto y = variable();
                switch (op) {
                case Token::Tilde: return fo::adjacent(x, y);
                case Token::Equals: return fo::equal(x, y);
                case Token::NotTilde: return fo::negate(fo::adjacent(x, y));
                default: return fo::negate(fo::equal(x, y));
                }
            }

        public:
            explicit Parser(string_view text) :
                _text(text)
            {
                advance();
            }

            auto run() -> Formula
            {
                auto f = implication();
                if (_token != Token::End)
                    throw ParseError("unexpected trailing input", _token_start);
                return f;
            }
        };

        auto collect_free(const Formula & f, vector<string> & bound, std::set<string> & out) -> void
        {
            auto note = [&](const string & v) {
                if (std::find(bound.begin(), bound.end(), v) == bound.end())
                    out.insert(v);
            };
            switch (f.kind) {
            case NodeKind::Adjacent:
            case NodeKind::Equal:
                note(f.left);
                note(f.right);
                return;
            case NodeKind::Exists:
            case NodeKind::Forall:
                bound.push_back(f.left);
                collect_free(f.children[0], bound, out);
                bound.pop_back();
                return;
            default:
                for (auto & c : f.children)
                    collect_free(c, bound, out);
            }
        }

        auto collect_names(const Formula & f, std::set<string> & out) -> void
        {
            switch (f.kind) {
            case NodeKind::Adjacent:
            case NodeKind::Equal:
                out.insert(f.left);
                out.insert(f.right);
                return;
            case NodeKind::Exists:
            case NodeKind::Forall:
                out.insert(f.left);
                break;
            default:
                break;
            }
            for (auto & c : f.children)
                collect_names(c, out);
        }

        auto print(const Formula & f, string & out) -> void
        {
            auto joined = [&](const char * op) {
                out += '(';
                for (std::size_t i = 0; i < f.children.size(); ++i) {
                    if (i > 0)
                        out += op;
                    print(f.children[i], out);
                }
                out += ')';
            };
            switch (f.kind) {
            case NodeKind::Adjacent:
                out += f.left + " ~ " + f.right;
                return;
            case NodeKind::Equal:
                out += f.left + " = " + f.right;
                return;
            case NodeKind::Not: {
                auto & c = f.children[0];
                out += '!';
                if (c.kind == NodeKind::Adjacent || c.kind == NodeKind::Equal) {
                    out += '(';
                    print(c, out);
                    out += ')';
                }
                else
                    print(c, out);
                return;
            }
            case NodeKind::And: joined(" & "); return;
            case NodeKind::Or: joined(" | "); return;
            case NodeKind::Implies: joined(" -> "); return;
            case NodeKind::Exists:
            case NodeKind::Forall: {
                out += f.kind == NodeKind::Exists ? "E " : "A ";
                out += f.left;
                out += ' ';
                auto & c = f.children[0];
                // A bare atom after the variable would read as part of a binder chain.
                if (c.kind == NodeKind::Adjacent || c.kind == NodeKind::Equal) {
                    out += '(';
                    print(c, out);
                    out += ')';
                }
                else
                    print(c, out);
                return;
            }
            }
        }

        auto alpha(const Formula & a, const Formula & b, vector<string> & bound_a, vector<string> & bound_b) -> bool
        {
            if (a.kind != b.kind || a.children.size() != b.children.size())
                return false;
            // Index of the innermost binder for a name, or -1 when free.
            auto binder = [](const vector<string> & bound, const string & v) -> long {
                for (auto i = static_cast<long>(bound.size()) - 1; i >= 0; --i)
                    if (bound[i] == v)
                        return i;
                return -1;
            };
            auto same = [&](const string & x, const string & y) {
                auto i = binder(bound_a, x), j = binder(bound_b, y);
                return i == j && (i >= 0 || x == y);
            };
            switch (a.kind) {
            case NodeKind::Adjacent:
            case NodeKind::Equal:
                return same(a.left, b.left) && same(a.right, b.right);
            case NodeKind::Exists:
            case NodeKind::Forall: {
                bound_a.push_back(a.left);
                bound_b.push_back(b.left);
                bool r = alpha(a.children[0], b.children[0], bound_a, bound_b);
                bound_a.pop_back();
                bound_b.pop_back();
                return r;
            }
            default:
                for (std::size_t i = 0; i < a.children.size(); ++i)
                    if (! alpha(a.children[i], b.children[i], bound_a, bound_b))
                        return false;
                return true;
            }
        }
    }

    auto parse_formula(string_view text) -> Formula
    {
        return Parser(text).run();
    }

    auto parse(string_view text) -> Formula
    {
        auto f = parse_formula(text);
        auto free = free_variables(f);
        if (! free.empty())
            throw UnboundVariable(*free.begin());
        return f;
    }

    auto to_string(const Formula & f) -> string
    {
        string out;
        print(f, out);
        return out;
    }

    auto free_variables(const Formula & f) -> std::set<string>
    {
        std::set<string> out;
        vector<string> bound;
        collect_free(f, bound, out);
        return out;
    }

    auto is_closed(const Formula & f) -> bool
    {
        return free_variables(f).empty();
    }

    auto quantifier_depth(const Formula & f) -> int
    {
        int inner = 0;
        for (auto & c : f.children)
            inner = std::max(inner, quantifier_depth(c));
        return inner + (f.kind == NodeKind::Exists || f.kind == NodeKind::Forall ? 1 : 0);
    }

    auto variable_width(const Formula & f) -> int
    {
        std::set<string> names;
        collect_names(f, names);
        return static_cast<int>(names.size());
    }

    auto alpha_equivalent(const Formula & a, const Formula & b) -> bool
    {
        vector<string> bound_a, bound_b;
        return alpha(a, b, bound_a, bound_b);
    }

    auto dual(const Formula & f) -> Formula
    {
        if (f.kind == NodeKind::Adjacent)
            return fo::all_of({fo::negate(fo::equal(f.left, f.right)), fo::negate(fo::adjacent(f.left, f.right))});
        Formula out{f.kind, f.left, f.right, {}};
        out.children.reserve(f.children.size());
        for (auto & c : f.children)
            out.children.push_back(dual(c));
        return out;
    }

    CompiledSentence::CompiledSentence(const Formula & f)
    {
        auto free = free_variables(f);
        if (! free.empty())
            throw UnboundVariable(*free.begin());
        vector<string> names;
        compile(f, names);
    }

    auto CompiledSentence::compile(const Formula & f, vector<string> & names) -> int
    {
        auto slot_of = [&](const string & v) {
            for (auto i = static_cast<int>(names.size()) - 1; i >= 0; --i)
                if (names[i] == v)
                    return i;
            throw UnboundVariable(v);
        };

        int index = static_cast<int>(_nodes.size());
        _nodes.push_back(Node{f.kind, -1, -1, {}});
        switch (f.kind) {
        case NodeKind::Adjacent:
        case NodeKind::Equal:
            _nodes[index].a = slot_of(f.left);
            _nodes[index].b = slot_of(f.right);
            break;
        case NodeKind::Exists:
        case NodeKind::Forall: {
            names.push_back(f.left);
            _slots = std::max(_slots, static_cast<int>(names.size()));
            _nodes[index].a = static_cast<int>(names.size()) - 1;
            int child = compile(f.children[0], names);
            _nodes[index].children.push_back(child);
            names.pop_back();
            break;
        }
        default:
            for (auto & c : f.children) {
                int child = compile(c, names);
                _nodes[index].children.push_back(child);
            }
        }
        return index;
    }

    auto CompiledSentence::evaluate(const Graph & g, int node, vector<int> & env) const -> bool
    {
        auto & n = _nodes[node];
        switch (n.kind) {
        case NodeKind::Adjacent:
            return g.adjacent(env[n.a], env[n.b]);
        case NodeKind::Equal:
            return env[n.a] == env[n.b];
        case NodeKind::Not:
            return ! evaluate(g, n.children[0], env);
        case NodeKind::And:
            for (int c : n.children)
                if (! evaluate(g, c, env))
                    return false;
            return true;
        case NodeKind::Or:
            for (int c : n.children)
                if (evaluate(g, c, env))
                    return true;
            return false;
        case NodeKind::Implies:
            return ! evaluate(g, n.children[0], env) || evaluate(g, n.children[1], env);
        case NodeKind::Exists:
        case NodeKind::Forall: {
            bool want = n.kind == NodeKind::Exists;
            int saved = env[n.a];
            bool result = ! want;
            for (int v = 0; v < g.size(); ++v) {
                env[n.a] = v;
                if (evaluate(g, n.children[0], env) == want) {
                    result = want;
                    break;
                }
            }
            env[n.a] = saved;
            return result;
        }
        }
        return false;
    }

    auto CompiledSentence::operator()(const Graph & g) const -> bool
    {
        vector<int> env(_slots, -1);
        return evaluate(g, 0, env);
    }

    auto eval(const Graph & g, const Formula & f) -> bool
    {
        return CompiledSentence(f)(g);
    }

    auto paw_sentence() -> Formula
    {
        static const Formula sentence = parse(
            "E x1 ((E x2 E x3 (x1 ~ x2 & x1 ~ x3 & x2 ~ x3))"
            " & E x2 (!(x1 ~ x2) & E x3 (x1 ~ x3 & x3 ~ x2) & E x3 (x3 ~ x1 & !(x3 ~ x2))))");
        return sentence;
    }

    auto ea_formula(int k) -> Formula
    {
        if (k < 1)
            throw InvalidArgument("ea_formula: k must be at least 1");
        if (k > 5)
            throw GuardExceeded("ea_formula: limited to k <= 5, got " + std::to_string(k));

        auto nonempty = fo::exists("z", fo::equal("z", "z"));
        if (k == 1)
            return nonempty;

        int m = k - 1;
        auto x = [](int i) { return "x" + std::to_string(i + 1); };

        // Each labelling splits x1..xm into X (mask bit set) and Y; distinct
        // values across the split make (X, Y) a disjoint pair of sets.
        vector<Formula> cases;
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            vector<Formula> premise, body;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (((mask >> i) & 1) && ! ((mask >> j) & 1))
                        premise.push_back(fo::negate(fo::equal(x(i), x(j))));
            for (int i = 0; i < m; ++i) {
                if ((mask >> i) & 1)
                    body.push_back(fo::adjacent("z", x(i)));
                else {
                    body.push_back(fo::negate(fo::equal("z", x(i))));
                    body.push_back(fo::negate(fo::adjacent("z", x(i))));
                }
            }
            auto witness = fo::exists("z", fo::all_of(std::move(body)));
            if (premise.empty())
                cases.push_back(std::move(witness));
            else
                cases.push_back(fo::implies(fo::all_of(std::move(premise)), std::move(witness)));
        }

        auto universal = fo::all_of(std::move(cases));
        for (int i = m - 1; i >= 0; --i)
            universal = fo::forall(x(i), std::move(universal));
        return fo::all_of({std::move(nonempty), std::move(universal)});
    }
}
