#include "autobasis/text_format.hpp"

#include "autobasis/error.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace autobasis {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#')
            break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#')
            ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

class LineParser {
public:
    LineParser(std::size_t line_no, std::vector<Token> tokens)
        : line_(line_no), tokens_(std::move(tokens)) {}

    [[noreturn]] void fail(const Token& t, const std::string& message) const {
        throw ParseError(line_, t.column, message);
    }

    std::uint64_t number(std::size_t i, const char* what) const {
        const Token& t = tokens_.at(i);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size())
            fail(t, std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
        return value;
    }

    const std::vector<Token>& tokens() const { return tokens_; }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
    std::vector<Token> tokens_;
};

struct Edge {
    State from;
    Digit digit;
    State to;
};

}  // namespace

ParsedAutomaton parse_automaton_text(std::string_view text) {
    std::optional<unsigned> base;
    std::optional<std::size_t> states;
    std::optional<State> initial;
    std::vector<State> finals;
    bool finals_seen = false;
    Direction direction = Direction::Msd;
    std::vector<Edge> edges;
    std::size_t last_line = 1;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        LineParser p(line_no, tokenize(text.substr(pos, end - pos)));
        pos = end + 1;
        const auto& tok = p.tokens();
        if (tok.empty()) {
            if (end == text.size())
                break;
            continue;
        }
        last_line = line_no;

        auto need_header = [&](const Token& t) {
            if (!base || !states)
                p.fail(t, "'base' and 'states' must precede transitions and state lists");
        };
        auto state_at = [&](std::size_t i) {
            need_header(tok[i]);
            std::uint64_t q = p.number(i, "a state number");
            if (q >= *states)
                p.fail(tok[i], "state " + std::to_string(q) + " out of range (states " +
                                   std::to_string(*states) + ")");
            return static_cast<State>(q);
        };

        const std::string_view head = tok[0].text;
        if (head == "base" || head == "states" || head == "initial") {
            if (tok.size() != 2)
                p.fail(tok[0], "'" + std::string(head) + "' takes exactly one number");
            if (!edges.empty())
                p.fail(tok[0], "header lines must precede transitions");
            if (head == "base") {
                std::uint64_t k = p.number(1, "a base");
                if (k < 2 || k > 1'000'000)
                    p.fail(tok[1], "base must be between 2 and 1000000");
                base = static_cast<unsigned>(k);
            } else if (head == "states") {
                std::uint64_t n = p.number(1, "a state count");
                if (n == 0 || n > 100'000'000)
                    p.fail(tok[1], "state count must be positive");
                states = static_cast<std::size_t>(n);
            } else {
                initial = state_at(1);
            }
        } else if (head == "finals") {
            finals_seen = true;
            for (std::size_t i = 1; i < tok.size(); ++i)
                finals.push_back(state_at(i));
        } else if (head == "direction") {
            if (tok.size() != 2)
                p.fail(tok[0], "'direction' takes msd or lsd");
            if (tok[1].text == "msd")
                direction = Direction::Msd;
            else if (tok[1].text == "lsd")
                direction = Direction::Lsd;
            else
                p.fail(tok[1], "direction must be msd or lsd");
        } else {
            if (tok.size() != 4 || tok[2].text != "->")
                p.fail(tok[0], "expected a header keyword or a transition 'q d -> r'");
            State from = state_at(0);
            std::uint64_t d = p.number(1, "a digit");
            if (d >= *base)
                p.fail(tok[1], "digit " + std::to_string(d) + " out of range for base " +
                                   std::to_string(*base));
            State to = state_at(3);
            edges.push_back({from, static_cast<Digit>(d), to});
        }
        if (end == text.size())
            break;
    }

    if (!base)
        throw ParseError(last_line, 1, "missing 'base' line");
    if (!states)
        throw ParseError(last_line, 1, "missing 'states' line");
    if (!initial)
        throw ParseError(last_line, 1, "missing 'initial' line");
    if (!finals_seen)
        throw ParseError(last_line, 1, "missing 'finals' line");

    const unsigned k = *base;
    const std::size_t n = *states;
    ParsedAutomaton result{Dfa::empty_language(k), direction, {}};

    Nfa nfa(k, n);
    nfa.set_initial(*initial);
    for (State q : finals)
        nfa.set_final(q);
    bool deterministic = true;
    std::vector<bool> defined(n * k, false);
    for (const Edge& e : edges) {
        std::size_t slot = std::size_t(e.from) * k + e.digit;
        if (defined[slot] && nfa.successors(e.from, e.digit).front() != e.to)
            deterministic = false;
        defined[slot] = true;
        nfa.add_transition(e.from, e.digit, e.to);
    }

    // Unreachable states are legal but usually a mistake.
    {
        std::vector<bool> seen(n, false);
        std::vector<State> stack{*initial};
        seen[*initial] = true;
        while (!stack.empty()) {
            State q = stack.back();
            stack.pop_back();
            for (Digit d = 0; d < k; ++d)
                for (State r : nfa.successors(q, d))
                    if (!seen[r]) {
                        seen[r] = true;
                        stack.push_back(r);
                    }
        }
        for (State q = 0; q < n; ++q)
            if (!seen[q])
                result.warnings.push_back("state " + std::to_string(q) +
                                          " is unreachable from the initial state");
    }

    if (direction == Direction::Msd) {
        result.machine = minimize(determinize(nfa.reversed()));
    } else if (!deterministic) {
        result.machine = determinize(nfa);
    } else {
        const bool complete = std::find(defined.begin(), defined.end(), false) == defined.end();
        const std::size_t total = complete ? n : n + 1;
        const auto sink = static_cast<State>(n);
        std::vector<State> delta(total * k, sink);
        std::vector<bool> fin(total, false);
        for (State q = 0; q < n; ++q) {
            fin[q] = nfa.is_final(q);
            for (Digit d = 0; d < k; ++d)
                if (!nfa.successors(q, d).empty())
                    delta[std::size_t(q) * k + d] = nfa.successors(q, d).front();
        }
        result.machine = Dfa(k, std::move(delta), *initial, std::move(fin));
    }
    return result;
}

Dfa parse_automaton(std::string_view text) { return parse_automaton_text(text).machine; }

std::string render_automaton(const Dfa& a, Direction direction) {
    const Dfa m =
        direction == Direction::Lsd ? a : minimize(determinize(Nfa::from_dfa(a).reversed()));
    std::ostringstream out;
    out << "base " << m.base() << '\n';
    out << "states " << m.size() << '\n';
    out << "initial " << m.initial() << '\n';
    out << "finals";
    for (State q = 0; q < m.size(); ++q)
        if (m.is_final(q))
            out << ' ' << q;
    out << '\n';
    out << "direction " << (direction == Direction::Lsd ? "lsd" : "msd") << '\n';
    for (State q = 0; q < m.size(); ++q)
        for (Digit d = 0; d < m.base(); ++d)
            out << q << ' ' << d << " -> " << m.next(q, d) << '\n';
    return out.str();
}

}  // namespace autobasis
