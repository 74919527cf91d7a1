#include "uta/filter.hpp"

#include <algorithm>
#include <cctype>

namespace uta {

Filter Filter::pattern(Regex r, std::size_t guard) {
    Filter f;
    f.kind_ = Kind::Pattern;
    f.acceptor_ = std::make_shared<PatternAcceptor>(compile_pattern(r, guard));
    f.regex_ = std::make_shared<Regex>(std::move(r));
    return f;
}

Filter Filter::state(StateId q) {
    Filter f;
    f.kind_ = Kind::State;
    f.state_ = std::move(q);
    return f;
}

Filter Filter::f_and(Filter a, Filter b) {
    Filter f;
    f.kind_ = Kind::And;
    f.left_ = std::make_shared<Filter>(std::move(a));
    f.right_ = std::make_shared<Filter>(std::move(b));
    return f;
}

Filter Filter::f_or(Filter a, Filter b) {
    Filter f;
    f.kind_ = Kind::Or;
    f.left_ = std::make_shared<Filter>(std::move(a));
    f.right_ = std::make_shared<Filter>(std::move(b));
    return f;
}

Filter Filter::f_not(Filter a) {
    Filter f;
    f.kind_ = Kind::Not;
    f.left_ = std::make_shared<Filter>(std::move(a));
    return f;
}

bool filter_eval(const Filter& f, const DataValue& d, const StateSet& Q) {
    switch (f.kind()) {
        case Filter::Kind::Pattern: return f.acceptor().accepts(d);
        case Filter::Kind::State: return Q.count(f.state()) > 0;
        case Filter::Kind::And:
            return filter_eval(f.left(), d, Q) && filter_eval(f.right(), d, Q);
        case Filter::Kind::Or:
            return filter_eval(f.left(), d, Q) || filter_eval(f.right(), d, Q);
        case Filter::Kind::Not: return !filter_eval(f.left(), d, Q);
    }
    throw Error("unreachable");
}

static void collect_support(const Filter& f, StateSet& out) {
    switch (f.kind()) {
        case Filter::Kind::Pattern: return;
        case Filter::Kind::State: out.insert(f.state()); return;
        case Filter::Kind::And:
        case Filter::Kind::Or:
            collect_support(f.left(), out);
            collect_support(f.right(), out);
            return;
        case Filter::Kind::Not: collect_support(f.left(), out); return;
    }
}

StateSet filter_support(const Filter& f) {
    StateSet out;
    collect_support(f, out);
    return out;
}

PatternAcceptor filter_reduce(const Filter& f, const StateSet& Q, std::size_t guard) {
    switch (f.kind()) {
        case Filter::Kind::Pattern: return f.acceptor();
        case Filter::Kind::State:
            return Q.count(f.state()) ? pattern_all() : pattern_none();
        case Filter::Kind::And:
            return pattern_and(filter_reduce(f.left(), Q, guard),
                               filter_reduce(f.right(), Q, guard), guard);
        case Filter::Kind::Or:
            return pattern_or(filter_reduce(f.left(), Q, guard),
                              filter_reduce(f.right(), Q, guard), guard);
        case Filter::Kind::Not:
            return pattern_not(filter_reduce(f.left(), Q, guard), guard);
    }
    throw Error("unreachable");
}

std::optional<Witness> filter_singleton_sat(const Filter& f, const StateSet& states,
                                            std::size_t guard) {
    std::vector<StateSet> choices;
    choices.push_back({});
    for (const StateId& q : states) choices.push_back({q});
    for (const StateSet& Q : choices) {
        PatternAcceptor reduced = filter_reduce(f, Q, guard);
        if (auto word = pattern_shortest(reduced))
            return Witness{*word, Q};
    }
    return std::nullopt;
}

std::vector<Atom> atomize(const std::vector<Filter>& fs, const StateSet& states,
                          std::size_t guard) {
    std::size_t n = fs.size();
    if (n > 20) throw ResourceError("too many filters to atomize");
    std::vector<StateSet> choices;
    choices.push_back({});
    for (const StateId& q : states) choices.push_back({q});

    std::vector<Atom> atoms;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        // sign vectors in lexicographic order, positive before negative
        std::vector<char> signs(n);
        for (std::size_t i = 0; i < n; ++i)
            signs[i] = !((mask >> (n - 1 - i)) & 1);
        std::optional<Witness> w;
        for (const StateSet& Q : choices) {
            PatternAcceptor acc = pattern_all();
            for (std::size_t i = 0; i < n; ++i) {
                PatternAcceptor r = filter_reduce(fs[i], Q, guard);
                if (!signs[i]) r = pattern_not(r, guard);
                acc = pattern_and(acc, r, guard);
                if (pattern_empty(acc)) break;
            }
            if (auto word = pattern_shortest(acc)) {
                w = Witness{*word, Q};
                break;
            }
        }
        if (w) atoms.push_back(Atom{std::move(signs), std::move(*w)});
    }
    return atoms;
}

bool atom_matches(const std::vector<Filter>& fs, const Atom& a, const DataValue& d,
                  const StateSet& Q) {
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (filter_eval(fs[i], d, Q) != (a.signs[i] != 0)) return false;
    return true;
}

// ---------------------------------------------------------------- syntax

namespace {

struct FilterParser {
    std::string_view text;
    std::size_t pos = 0;
    const std::vector<std::pair<std::string, Regex>>& named;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Filter parse() {
        Filter f = disjunction();
        if (peek() != '\0') throw ParseError("trailing characters in filter");
        return f;
    }

    Filter disjunction() {
        Filter f = conjunction();
        while (eat('|')) f = Filter::f_or(std::move(f), conjunction());
        return f;
    }

    Filter conjunction() {
        Filter f = unary();
        while (eat('&')) f = Filter::f_and(std::move(f), unary());
        return f;
    }

    Filter unary() {
        if (eat('!')) return Filter::f_not(unary());
        if (eat('(')) {
            Filter f = disjunction();
            if (!eat(')')) throw ParseError("expected ')' in filter");
            return f;
        }
        std::string id = ident();
        if (id == "pattern") {
            if (!eat('(')) throw ParseError("expected '(' after pattern");
            std::size_t start = pos;
            int depth = 1;
            bool in_quote = false;
            while (pos < text.size() && depth > 0) {
                char c = text[pos];
                if (in_quote) {
                    if (c == '\\') ++pos;
                    else if (c == '"') in_quote = false;
                } else if (c == '"') {
                    in_quote = true;
                } else if (c == '(') {
                    ++depth;
                } else if (c == ')') {
                    --depth;
                    if (depth == 0) break;
                }
                ++pos;
            }
            if (depth != 0) throw ParseError("unterminated pattern(...)");
            std::string body(text.substr(start, pos - start));
            ++pos; // ')'
            return Filter::pattern(resolve(body));
        }
        if (id.empty()) throw ParseError("expected filter");
        return Filter::state(std::move(id));
    }

    Regex resolve(const std::string& body) {
        // bare identifier -> named pattern lookup
        std::string trimmed = body;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        std::size_t i = 0;
        while (i < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[i])))
            ++i;
        trimmed = trimmed.substr(i);
        bool is_ident = !trimmed.empty() &&
                        (std::isalpha(static_cast<unsigned char>(trimmed[0])) ||
                         trimmed[0] == '_');
        for (char c : trimmed)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                is_ident = false;
        if (is_ident) {
            for (const auto& [name, r] : named)
                if (name == trimmed) return r;
            throw ParseError("unknown named pattern: " + trimmed);
        }
        return parse_regex(trimmed);
    }

    std::string ident() {
        skip_ws();
        std::string out;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                text[pos] == '_')) {
            out.push_back(text[pos++]);
        }
        return out;
    }
};

void print_filter(const Filter& f, std::string& out, int parent_prec) {
    // precedence: Or=0, And=1, Not/atoms=2
    switch (f.kind()) {
        case Filter::Kind::Pattern:
            out += "pattern(" + regex_to_string(f.regex()) + ")";
            break;
        case Filter::Kind::State:
            out += f.state();
            break;
        case Filter::Kind::Not:
            out += "!";
            print_filter(f.left(), out, 2);
            break;
        case Filter::Kind::And: {
            bool paren = parent_prec > 1;
            if (paren) out.push_back('(');
            print_filter(f.left(), out, 1);
            out += " & ";
            print_filter(f.right(), out, 1);
            if (paren) out.push_back(')');
            break;
        }
        case Filter::Kind::Or: {
            bool paren = parent_prec > 0;
            if (paren) out.push_back('(');
            print_filter(f.left(), out, 0);
            out += " | ";
            print_filter(f.right(), out, 0);
            if (paren) out.push_back(')');
            break;
        }
    }
}

} // namespace

Filter parse_filter(std::string_view text,
                    const std::vector<std::pair<std::string, Regex>>& named_patterns) {
    FilterParser p{text, 0, named_patterns};
    return p.parse();
}

std::string filter_to_string(const Filter& f) {
    std::string out;
    print_filter(f, out, 0);
    return out;
}

bool filter_equal(const Filter& a, const Filter& b) {
    if (a.kind() != b.kind()) {
        return false;
    }
    switch (a.kind()) {
        case Filter::Kind::Pattern:
            return regex_to_string(a.regex()) == regex_to_string(b.regex());
        case Filter::Kind::State: return a.state() == b.state();
        case Filter::Kind::Not: return filter_equal(a.left(), b.left());
        case Filter::Kind::And:
        case Filter::Kind::Or:
            return filter_equal(a.left(), b.left()) &&
                   filter_equal(a.right(), b.right());
    }
    return false;
}

} // namespace uta
