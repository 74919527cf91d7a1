#include "uta/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace uta {

namespace {
constexpr char32_t kMaxScalar = 0x110000; // exclusive upper bound
}

Regex Regex::lit(std::u32string_view s) {
    Regex r;
    r.kind = Kind::Literal;
    r.literal.assign(s.begin(), s.end());
    return r;
}

Regex Regex::lit_utf8(std::string_view s) { return lit(decode_utf8(s)); }

Regex Regex::concat(Regex a, Regex b) {
    Regex r;
    r.kind = Kind::Concat;
    r.left = std::make_shared<Regex>(std::move(a));
    r.right = std::make_shared<Regex>(std::move(b));
    return r;
}

Regex Regex::alt(Regex a, Regex b) {
    Regex r;
    r.kind = Kind::Alt;
    r.left = std::make_shared<Regex>(std::move(a));
    r.right = std::make_shared<Regex>(std::move(b));
    return r;
}

Regex Regex::star(Regex a) {
    Regex r;
    r.kind = Kind::Star;
    r.left = std::make_shared<Regex>(std::move(a));
    return r;
}

Regex Regex::any_star() {
    Regex r;
    r.kind = Kind::AnyStar;
    return r;
}

std::u32string decode_utf8(std::string_view s) {
    std::u32string out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        char32_t cp;
        int extra;
        if (c < 0x80) {
            cp = c;
            extra = 0;
        } else if ((c & 0xE0) == 0xC0) {
            cp = c & 0x1F;
            extra = 1;
        } else if ((c & 0xF0) == 0xE0) {
            cp = c & 0x0F;
            extra = 2;
        } else if ((c & 0xF8) == 0xF0) {
            cp = c & 0x07;
            extra = 3;
        } else {
            throw ParseError("invalid UTF-8 byte");
        }
        if (i + extra >= s.size()) throw ParseError("truncated UTF-8 sequence");
        for (int k = 1; k <= extra; ++k) {
            unsigned char cc = s[i + k];
            if ((cc & 0xC0) != 0x80) throw ParseError("invalid UTF-8 continuation");
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (cp >= kMaxScalar) throw ParseError("codepoint out of range");
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string encode_utf8(std::u32string_view s) {
    std::string out;
    for (char32_t cp : s) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

// ---------------------------------------------------------------- parser

namespace {

struct RegexParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Regex parse() {
        Regex r = alternation();
        if (!at_end()) throw ParseError("trailing characters in pattern");
        return r;
    }

    Regex alternation() {
        Regex r = concatenation();
        while (peek() == '+') {
            ++pos;
            r = Regex::alt(std::move(r), concatenation());
        }
        return r;
    }

    bool starts_primary() {
        char c = peek();
        return c == '"' || c == '(' || c == '*';
    }

    Regex concatenation() {
        Regex r = postfix();
        while (starts_primary()) r = Regex::concat(std::move(r), postfix());
        return r;
    }

    Regex postfix() {
        Regex r = primary();
        while (peek() == '*') {
            ++pos;
            r = Regex::star(std::move(r));
        }
        return r;
    }

    Regex primary() {
        char c = peek();
        if (c == '"') return Regex::lit_utf8(quoted());
        if (c == '(') {
            ++pos;
            Regex r = alternation();
            if (peek() != ')') throw ParseError("expected ')' in pattern");
            ++pos;
            return r;
        }
        if (c == '*') {
            ++pos;
            return Regex::any_star();
        }
        throw ParseError("expected literal, '(' or '*' in pattern");
    }

    std::string quoted() {
        skip_ws();
        ++pos; // opening quote
        std::string out;
        while (pos < text.size() && text[pos] != '"') {
            char c = text[pos++];
            if (c == '\\') {
                if (pos >= text.size()) throw ParseError("dangling escape in pattern");
                char e = text[pos++];
                switch (e) {
                    case '"': out.push_back('"'); break;
                    case '\\': out.push_back('\\'); break;
                    case 'n': out.push_back('\n'); break;
                    case 't': out.push_back('\t'); break;
                    default: throw ParseError("unknown escape in pattern literal");
                }
            } else {
                out.push_back(c);
            }
        }
        if (pos >= text.size()) throw ParseError("unterminated pattern literal");
        ++pos; // closing quote
        return out;
    }
};

std::string quote_literal(const std::vector<char32_t>& lit) {
    std::string inner = encode_utf8(std::u32string(lit.begin(), lit.end()));
    std::string out = "\"";
    for (char c : inner) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

void print_regex(const Regex& r, std::string& out, int parent_prec) {
    // precedence: Alt=0, Concat=1, Star/atoms=2
    switch (r.kind) {
        case Regex::Kind::Literal:
            out += quote_literal(r.literal);
            break;
        case Regex::Kind::AnyStar:
            out += "*";
            break;
        case Regex::Kind::Star: {
            bool paren = r.left->kind == Regex::Kind::Alt ||
                         r.left->kind == Regex::Kind::Concat ||
                         r.left->kind == Regex::Kind::Star ||
                         r.left->kind == Regex::Kind::AnyStar;
            if (paren) out.push_back('(');
            print_regex(*r.left, out, 2);
            if (paren) out.push_back(')');
            out.push_back('*');
            break;
        }
        case Regex::Kind::Concat: {
            bool paren = parent_prec > 1;
            if (paren) out.push_back('(');
            print_regex(*r.left, out, 1);
            print_regex(*r.right, out, 1);
            if (paren) out.push_back(')');
            break;
        }
        case Regex::Kind::Alt: {
            bool paren = parent_prec > 0;
            if (paren) out.push_back('(');
            print_regex(*r.left, out, 0);
            out.push_back('+');
            print_regex(*r.right, out, 0);
            if (paren) out.push_back(')');
            break;
        }
    }
}

} // namespace

Regex parse_regex(std::string_view text) {
    RegexParser p{text};
    return p.parse();
}

std::string regex_to_string(const Regex& r) {
    std::string out;
    print_regex(r, out, 0);
    return out;
}

// ------------------------------------------------------------ compilation

namespace {

void collect_chars(const Regex& r, std::set<char32_t>& chars) {
    switch (r.kind) {
        case Regex::Kind::Literal:
            for (char32_t c : r.literal) chars.insert(c);
            break;
        case Regex::Kind::Star:
            collect_chars(*r.left, chars);
            break;
        case Regex::Kind::Concat:
        case Regex::Kind::Alt:
            collect_chars(*r.left, chars);
            collect_chars(*r.right, chars);
            break;
        case Regex::Kind::AnyStar:
            break;
    }
}

struct NfaBuilder {
    Nfa nfa;

    int add_state() {
        nfa.next.emplace_back(nfa.alphabet);
        nfa.epsilon.emplace_back();
        nfa.accepting.push_back(0);
        return static_cast<int>(nfa.next.size()) - 1;
    }
    void edge(int from, int letter, int to) { nfa.next[from][letter].push_back(to); }
    void eps(int from, int to) { nfa.epsilon[from].push_back(to); }
};

struct Frag {
    int in, out;
};

Frag build(NfaBuilder& b, const Regex& r, const std::vector<char32_t>& starts) {
    auto class_of = [&](char32_t c) {
        return static_cast<int>(std::upper_bound(starts.begin(), starts.end(), c) -
                                starts.begin()) - 1;
    };
    switch (r.kind) {
        case Regex::Kind::Literal: {
            int in = b.add_state();
            int cur = in;
            for (char32_t c : r.literal) {
                int nxt = b.add_state();
                b.edge(cur, class_of(c), nxt);
                cur = nxt;
            }
            return {in, cur};
        }
        case Regex::Kind::AnyStar: {
            int s = b.add_state();
            for (int x = 0; x < b.nfa.alphabet; ++x) b.edge(s, x, s);
            return {s, s};
        }
        case Regex::Kind::Star: {
            Frag f = build(b, *r.left, starts);
            int s = b.add_state();
            b.eps(s, f.in);
            b.eps(f.out, s);
            return {s, s};
        }
        case Regex::Kind::Concat: {
            Frag f1 = build(b, *r.left, starts);
            Frag f2 = build(b, *r.right, starts);
            b.eps(f1.out, f2.in);
            return {f1.in, f2.out};
        }
        case Regex::Kind::Alt: {
            Frag f1 = build(b, *r.left, starts);
            Frag f2 = build(b, *r.right, starts);
            int in = b.add_state(), out = b.add_state();
            b.eps(in, f1.in);
            b.eps(in, f2.in);
            b.eps(f1.out, out);
            b.eps(f2.out, out);
            return {in, out};
        }
    }
    throw Error("unreachable");
}

/// Merges adjacent classes with identical transition columns, producing a
/// canonical partition for the acceptor's language.
PatternAcceptor compress(PatternAcceptor a) {
    std::vector<char32_t> starts;
    std::vector<int> keep; // class indices kept
    for (std::size_t i = 0; i < a.class_starts.size(); ++i) {
        bool same = false;
        if (!starts.empty()) {
            int prev = keep.back();
            same = true;
            for (const auto& row : a.dfa.next)
                if (row[i] != row[prev]) {
                    same = false;
                    break;
                }
        }
        if (!same) {
            starts.push_back(a.class_starts[i]);
            keep.push_back(static_cast<int>(i));
        }
    }
    if (keep.size() == a.class_starts.size()) return a;
    Dfa d;
    d.alphabet = static_cast<int>(keep.size());
    d.initial = a.dfa.initial;
    d.accepting = a.dfa.accepting;
    d.next.reserve(a.dfa.next.size());
    for (const auto& row : a.dfa.next) {
        std::vector<int> nrow;
        nrow.reserve(keep.size());
        for (int k : keep) nrow.push_back(row[k]);
        d.next.push_back(std::move(nrow));
    }
    a.class_starts = std::move(starts);
    a.dfa = std::move(d);
    return a;
}

/// Refines two partitions to a common one; returns (starts, map letters of
/// a -> merged, map letters of b -> merged) by sharing merged class list.
std::vector<char32_t> merge_starts(const std::vector<char32_t>& a,
                                   const std::vector<char32_t>& b) {
    std::vector<char32_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Dfa remap(const Dfa& d, const std::vector<char32_t>& old_starts,
          const std::vector<char32_t>& new_starts) {
    Dfa out = d;
    out.alphabet = static_cast<int>(new_starts.size());
    for (std::size_t s = 0; s < d.next.size(); ++s) {
        std::vector<int> row;
        row.reserve(new_starts.size());
        for (char32_t c : new_starts) {
            int old_cls = static_cast<int>(std::upper_bound(old_starts.begin(),
                                                            old_starts.end(), c) -
                                           old_starts.begin()) - 1;
            row.push_back(d.next[s][old_cls]);
        }
        out.next[s] = std::move(row);
    }
    return out;
}

PatternAcceptor binary(const PatternAcceptor& x, const PatternAcceptor& y,
                       Dfa (*op)(const Dfa&, const Dfa&), std::size_t guard) {
    std::vector<char32_t> starts = merge_starts(x.class_starts, y.class_starts);
    Dfa dx = remap(x.dfa, x.class_starts, starts);
    Dfa dy = remap(y.dfa, y.class_starts, starts);
    if (dx.next.size() * dy.next.size() > guard)
        throw ResourceError("state-count guard exceeded in pattern product");
    PatternAcceptor out;
    out.class_starts = std::move(starts);
    out.dfa = dfa_minimize(op(dx, dy));
    if (out.dfa.next.size() > guard)
        throw ResourceError("state-count guard exceeded in pattern product");
    return compress(out);
}

} // namespace

int PatternAcceptor::class_of(char32_t c) const {
    return static_cast<int>(std::upper_bound(class_starts.begin(), class_starts.end(),
                                             c) -
                            class_starts.begin()) - 1;
}

bool PatternAcceptor::accepts(std::string_view utf8) const {
    std::u32string w = decode_utf8(utf8);
    int s = dfa.initial;
    for (char32_t c : w) s = dfa.next[s][class_of(c)];
    return dfa.accepting[s] != 0;
}

PatternAcceptor compile_pattern(const Regex& r, std::size_t guard) {
    std::set<char32_t> chars;
    collect_chars(r, chars);
    std::vector<char32_t> starts{0};
    for (char32_t c : chars) {
        if (c != 0 && (starts.empty() || starts.back() != c)) starts.push_back(c);
        if (c + 1 < kMaxScalar) starts.push_back(c + 1);
    }
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

    NfaBuilder b;
    b.nfa.alphabet = static_cast<int>(starts.size());
    Frag f = build(b, r, starts);
    b.nfa.initials = {f.in};
    b.nfa.accepting[f.out] = 1;
    Dfa d = nfa_determinize(b.nfa, guard);
    PatternAcceptor a;
    a.class_starts = std::move(starts);
    a.dfa = dfa_minimize(d);
    return compress(a);
}

PatternAcceptor pattern_and(const PatternAcceptor& x, const PatternAcceptor& y,
                            std::size_t guard) {
    return binary(x, y, [](const Dfa& a, const Dfa& b) { return dfa_intersect(a, b); },
                  guard);
}

PatternAcceptor pattern_or(const PatternAcceptor& x, const PatternAcceptor& y,
                           std::size_t guard) {
    return binary(x, y, [](const Dfa& a, const Dfa& b) { return dfa_union(a, b); },
                  guard);
}

PatternAcceptor pattern_not(const PatternAcceptor& x, std::size_t guard) {
    (void)guard;
    PatternAcceptor out = x;
    out.dfa = dfa_minimize(dfa_complement(out.dfa));
    return compress(out);
}

bool pattern_empty(const PatternAcceptor& x) { return dfa_empty(x.dfa); }

bool pattern_universal(const PatternAcceptor& x) { return dfa_universal(x.dfa); }

std::optional<std::string> pattern_shortest(const PatternAcceptor& x) {
    auto word = dfa_shortest_word(x.dfa);
    if (!word) return std::nullopt;
    std::u32string w;
    for (int cls : word.value()) w.push_back(x.class_starts[cls]);
    return encode_utf8(w);
}

PatternAcceptor pattern_none() {
    PatternAcceptor a;
    a.class_starts = {0};
    a.dfa = Dfa::constant(1, false);
    return a;
}

PatternAcceptor pattern_all() {
    PatternAcceptor a;
    a.class_starts = {0};
    a.dfa = Dfa::constant(1, true);
    return a;
}

} // namespace uta
