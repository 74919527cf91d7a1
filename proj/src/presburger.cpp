#include "uta/presburger.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace uta {

CountingExpr CountingExpr::constant(std::uint64_t n) {
    CountingExpr e;
    e.kind_ = Kind::Const;
    e.value_ = n;
    return e;
}

CountingExpr CountingExpr::counter(Filter f) {
    CountingExpr e;
    e.kind_ = Kind::Counter;
    e.filter_ = std::make_shared<Filter>(std::move(f));
    return e;
}

CountingExpr CountingExpr::sum(CountingExpr a, CountingExpr b) {
    CountingExpr e;
    e.kind_ = Kind::Sum;
    e.left_ = std::make_shared<CountingExpr>(std::move(a));
    e.right_ = std::make_shared<CountingExpr>(std::move(b));
    return e;
}

PresburgerFormula PresburgerFormula::le(CountingExpr a, CountingExpr b) {
    PresburgerFormula f;
    f.kind_ = Kind::Le;
    f.lhs_ = std::make_shared<CountingExpr>(std::move(a));
    f.rhs_ = std::make_shared<CountingExpr>(std::move(b));
    return f;
}

PresburgerFormula PresburgerFormula::mod_eq(CountingExpr a, CountingExpr b,
                                            std::uint64_t m) {
    if (m == 0) throw Error("congruence modulus must be positive");
    PresburgerFormula f;
    f.kind_ = Kind::ModEq;
    f.lhs_ = std::make_shared<CountingExpr>(std::move(a));
    f.rhs_ = std::make_shared<CountingExpr>(std::move(b));
    f.modulus_ = m;
    return f;
}

PresburgerFormula PresburgerFormula::p_and(PresburgerFormula a, PresburgerFormula b) {
    PresburgerFormula f;
    f.kind_ = Kind::And;
    f.left_ = std::make_shared<PresburgerFormula>(std::move(a));
    f.right_ = std::make_shared<PresburgerFormula>(std::move(b));
    return f;
}

PresburgerFormula PresburgerFormula::p_or(PresburgerFormula a, PresburgerFormula b) {
    PresburgerFormula f;
    f.kind_ = Kind::Or;
    f.left_ = std::make_shared<PresburgerFormula>(std::move(a));
    f.right_ = std::make_shared<PresburgerFormula>(std::move(b));
    return f;
}

PresburgerFormula PresburgerFormula::p_not(PresburgerFormula a) {
    PresburgerFormula f;
    f.kind_ = Kind::Not;
    f.left_ = std::make_shared<PresburgerFormula>(std::move(a));
    return f;
}

PresburgerFormula PresburgerFormula::eq(CountingExpr a, CountingExpr b) {
    return p_and(le(a, b), le(b, a));
}

PresburgerFormula PresburgerFormula::ge(CountingExpr a, CountingExpr b) {
    return le(std::move(b), std::move(a));
}

std::uint64_t eval_counting(const CountingExpr& e, const AnnotatedMultiset& M) {
    switch (e.kind()) {
        case CountingExpr::Kind::Const: return e.value();
        case CountingExpr::Kind::Counter: {
            std::uint64_t n = 0;
            for (const auto& [d, Q] : M)
                if (filter_eval(e.filter(), d, Q)) ++n;
            return n;
        }
        case CountingExpr::Kind::Sum:
            return eval_counting(e.left(), M) + eval_counting(e.right(), M);
    }
    throw Error("unreachable");
}

bool presburger_holds(const PresburgerFormula& f, const AnnotatedMultiset& M) {
    switch (f.kind()) {
        case PresburgerFormula::Kind::Le:
            return eval_counting(f.lhs(), M) <= eval_counting(f.rhs(), M);
        case PresburgerFormula::Kind::ModEq:
            return eval_counting(f.lhs(), M) % f.modulus() ==
                   eval_counting(f.rhs(), M) % f.modulus();
        case PresburgerFormula::Kind::And:
            return presburger_holds(f.left(), M) && presburger_holds(f.right(), M);
        case PresburgerFormula::Kind::Or:
            return presburger_holds(f.left(), M) || presburger_holds(f.right(), M);
        case PresburgerFormula::Kind::Not: return !presburger_holds(f.left(), M);
    }
    throw Error("unreachable");
}

// ------------------------------------------------------------ collection

static void collect_expr_filters(const CountingExpr& e, std::vector<Filter>& out) {
    switch (e.kind()) {
        case CountingExpr::Kind::Const: return;
        case CountingExpr::Kind::Counter: {
            for (const Filter& f : out)
                if (filter_equal(f, e.filter())) return;
            out.push_back(e.filter());
            return;
        }
        case CountingExpr::Kind::Sum:
            collect_expr_filters(e.left(), out);
            collect_expr_filters(e.right(), out);
            return;
    }
}

static void collect_formula_filters(const PresburgerFormula& f, std::vector<Filter>& out) {
    switch (f.kind()) {
        case PresburgerFormula::Kind::Le:
        case PresburgerFormula::Kind::ModEq:
            collect_expr_filters(f.lhs(), out);
            collect_expr_filters(f.rhs(), out);
            return;
        case PresburgerFormula::Kind::And:
        case PresburgerFormula::Kind::Or:
            collect_formula_filters(f.left(), out);
            collect_formula_filters(f.right(), out);
            return;
        case PresburgerFormula::Kind::Not:
            collect_formula_filters(f.left(), out);
            return;
    }
}

std::vector<Filter> presburger_filters(const PresburgerFormula& f) {
    std::vector<Filter> out;
    collect_formula_filters(f, out);
    return out;
}

StateSet presburger_support(const PresburgerFormula& f) {
    StateSet out;
    for (const Filter& g : presburger_filters(f)) {
        StateSet s = filter_support(g);
        out.insert(s.begin(), s.end());
    }
    return out;
}

// --------------------------------------------------------- satisfiability

namespace {

// Evaluates an expression over per-filter counts instead of a multiset.
// Returns nullopt when a counter filter is absent from the filter list.
std::optional<std::uint64_t> eval_expr_counts(const CountingExpr& e,
                                              const std::vector<Filter>& filters,
                                              const std::vector<std::uint64_t>& counts) {
    switch (e.kind()) {
        case CountingExpr::Kind::Const: return e.value();
        case CountingExpr::Kind::Counter:
            for (std::size_t i = 0; i < filters.size(); ++i)
                if (filter_equal(filters[i], e.filter())) return counts[i];
            return std::nullopt;
        case CountingExpr::Kind::Sum: {
            auto a = eval_expr_counts(e.left(), filters, counts);
            auto b = eval_expr_counts(e.right(), filters, counts);
            if (!a || !b) return std::nullopt;
            return *a + *b;
        }
    }
    throw Error("unreachable");
}

bool eval_formula_counts(const PresburgerFormula& f, const std::vector<Filter>& filters,
                         const std::vector<std::uint64_t>& counts) {
    switch (f.kind()) {
        case PresburgerFormula::Kind::Le: {
            auto a = eval_expr_counts(f.lhs(), filters, counts);
            auto b = eval_expr_counts(f.rhs(), filters, counts);
            if (!a || !b) throw Error("counter filter not in filter list");
            return *a <= *b;
        }
        case PresburgerFormula::Kind::ModEq: {
            auto a = eval_expr_counts(f.lhs(), filters, counts);
            auto b = eval_expr_counts(f.rhs(), filters, counts);
            if (!a || !b) throw Error("counter filter not in filter list");
            return *a % f.modulus() == *b % f.modulus();
        }
        case PresburgerFormula::Kind::And:
            return eval_formula_counts(f.left(), filters, counts) &&
                   eval_formula_counts(f.right(), filters, counts);
        case PresburgerFormula::Kind::Or:
            return eval_formula_counts(f.left(), filters, counts) ||
                   eval_formula_counts(f.right(), filters, counts);
        case PresburgerFormula::Kind::Not:
            return !eval_formula_counts(f.left(), filters, counts);
    }
    throw Error("unreachable");
}

bool expr_const_only(const CountingExpr& e, std::uint64_t& sum) {
    switch (e.kind()) {
        case CountingExpr::Kind::Const: sum += e.value(); return true;
        case CountingExpr::Kind::Counter: return false;
        case CountingExpr::Kind::Sum: {
            return expr_const_only(e.left(), sum) && expr_const_only(e.right(), sum);
        }
    }
    throw Error("unreachable");
}

// Checks the completeness fragment (every comparison pits counters against a
// constant) while gathering the largest comparison constant and the lcm of
// congruence moduli.
bool analyze(const PresburgerFormula& f, std::uint64_t& max_const, std::uint64_t& lcm) {
    switch (f.kind()) {
        case PresburgerFormula::Kind::Le: {
            std::uint64_t l = 0, r = 0;
            bool lc = expr_const_only(f.lhs(), l);
            bool rc = expr_const_only(f.rhs(), r);
            if (lc) max_const = std::max(max_const, l);
            if (rc) max_const = std::max(max_const, r);
            return lc || rc;
        }
        case PresburgerFormula::Kind::ModEq: {
            if (lcm <= 1000000) lcm = std::lcm(lcm, f.modulus());
            return lcm <= 1000000;
        }
        case PresburgerFormula::Kind::And:
        case PresburgerFormula::Kind::Or: {
            bool a = analyze(f.left(), max_const, lcm);
            bool b = analyze(f.right(), max_const, lcm);
            return a && b;
        }
        case PresburgerFormula::Kind::Not: return analyze(f.left(), max_const, lcm);
    }
    throw Error("unreachable");
}

constexpr std::uint64_t kSatStepBudget = 4000000;

} // namespace

bool presburger_eval_counts(const PresburgerFormula& f,
                            const std::vector<Filter>& filters,
                            const std::vector<std::uint64_t>& counts) {
    return eval_formula_counts(f, filters, counts);
}

FormulaProfile profile_formula(const PresburgerFormula& f) {
    FormulaProfile p;
    p.comparison_fragment = analyze(f, p.max_const, p.lcm);
    return p;
}

SatResult presburger_sat_letters(const PresburgerFormula& f,
                                 const std::vector<Filter>& filters,
                                 const std::vector<SatLetter>& letters,
                                 std::uint64_t bound) {
    std::uint64_t max_const = 0, lcm = 1;
    bool in_fragment = analyze(f, max_const, lcm);

    // Beyond max_const + lcm every comparison has stabilized and every
    // congruence repeats, so larger counts can be shrunk by multiples of
    // the lcm without changing any atom's truth value.
    std::uint64_t complete_cap = max_const + lcm;
    if (bound == 0) bound = letters.size() * (max_const + lcm + 1);
    std::uint64_t cap = std::min(bound, complete_cap);
    bool complete = in_fragment && cap >= complete_cap;

    std::size_t n = letters.size();
    if (n == 0) {
        std::vector<std::uint64_t> zero;
        if (eval_formula_counts(f, filters, std::vector<std::uint64_t>(filters.size(), 0)))
            return {SatVerdict::Sat, zero};
        return {complete ? SatVerdict::Unsat : SatVerdict::Unknown, {}};
    }

    std::vector<std::uint64_t> counts(n, 0);
    std::vector<std::uint64_t> per_filter(filters.size(), 0);
    std::uint64_t steps = 0;
    for (;;) {
        if (++steps > kSatStepBudget) return {SatVerdict::Unknown, {}};
        std::fill(per_filter.begin(), per_filter.end(), 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < filters.size(); ++j)
                if (letters[i].truth[j]) per_filter[j] += counts[i];
        if (eval_formula_counts(f, filters, per_filter))
            return {SatVerdict::Sat, counts};
        // odometer: last letter varies fastest, so the first hit is the
        // lexicographically least count vector
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (counts[i] < cap) {
                ++counts[i];
                std::fill(counts.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                          counts.end(), 0);
                break;
            }
            if (i == 0) return {complete ? SatVerdict::Unsat : SatVerdict::Unknown, {}};
        }
    }
}

SatResult presburger_sat(const PresburgerFormula& f, const std::vector<Filter>& filters,
                         const std::vector<Atom>& atoms, std::uint64_t bound) {
    std::vector<SatLetter> letters;
    letters.reserve(atoms.size());
    for (const Atom& a : atoms) letters.push_back(SatLetter{a.signs, a.witness});
    return presburger_sat_letters(f, filters, letters, bound);
}

AnnotatedMultiset expand_counts(const std::vector<SatLetter>& letters,
                                const std::vector<std::uint64_t>& counts) {
    AnnotatedMultiset M;
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (std::uint64_t k = 0; k < counts[i]; ++k)
            M.emplace_back(letters[i].witness.value, letters[i].witness.states);
    return M;
}

// ---------------------------------------------------------------- syntax

namespace {

struct PresburgerParser {
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
    bool eat_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) != w) return false;
        std::size_t end = pos + w.size();
        if (end < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
            return false;
        pos = end;
        return true;
    }

    PresburgerFormula parse() {
        PresburgerFormula f = disjunction();
        if (peek() != '\0') throw ParseError("trailing characters in formula");
        return f;
    }

    PresburgerFormula disjunction() {
        PresburgerFormula f = conjunction();
        while (eat('|')) f = PresburgerFormula::p_or(std::move(f), conjunction());
        return f;
    }

    PresburgerFormula conjunction() {
        PresburgerFormula f = unary();
        while (eat('&')) f = PresburgerFormula::p_and(std::move(f), unary());
        return f;
    }

    PresburgerFormula unary() {
        if (eat('!')) return PresburgerFormula::p_not(unary());
        // '(' is ambiguous between a parenthesized formula and a
        // parenthesized expression starting an atom; try the atom first
        std::size_t save = pos;
        try {
            return atom();
        } catch (const ParseError&) {
            pos = save;
        }
        if (eat('(')) {
            PresburgerFormula f = disjunction();
            if (!eat(')')) throw ParseError("expected ')' in formula");
            return f;
        }
        throw ParseError("expected formula");
    }

    PresburgerFormula atom() {
        CountingExpr a = expr();
        skip_ws();
        if (text.substr(pos, 2) == "<=") {
            pos += 2;
            return PresburgerFormula::le(std::move(a), expr());
        }
        if (text.substr(pos, 2) == ">=") {
            pos += 2;
            return PresburgerFormula::ge(std::move(a), expr());
        }
        if (text.substr(pos, 2) == "==") {
            pos += 2;
            CountingExpr b = expr();
            if (eat_word("mod")) {
                std::uint64_t m = number();
                return PresburgerFormula::mod_eq(std::move(a), std::move(b), m);
            }
            return PresburgerFormula::eq(std::move(a), std::move(b));
        }
        throw ParseError("expected comparison operator");
    }

    CountingExpr expr() {
        CountingExpr e = term();
        while (eat('+')) e = CountingExpr::sum(std::move(e), term());
        return e;
    }

    CountingExpr term() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)))
            return CountingExpr::constant(number());
        if (c == '(') {
            ++pos;
            CountingExpr e = expr();
            if (!eat(')')) throw ParseError("expected ')' in expression");
            return e;
        }
        if (eat_word("count")) {
            if (!eat('(')) throw ParseError("expected '(' after count");
            std::size_t start = pos;
            int depth = 1;
            bool in_quote = false;
            while (pos < text.size() && depth > 0) {
                char ch = text[pos];
                if (in_quote) {
                    if (ch == '\\') ++pos;
                    else if (ch == '"') in_quote = false;
                } else if (ch == '"') {
                    in_quote = true;
                } else if (ch == '(') {
                    ++depth;
                } else if (ch == ')') {
                    --depth;
                    if (depth == 0) break;
                }
                ++pos;
            }
            if (depth != 0) throw ParseError("unterminated count(...)");
            std::string body(text.substr(start, pos - start));
            ++pos; // ')'
            return CountingExpr::counter(parse_filter(body, named));
        }
        throw ParseError("expected counting expression");
    }

    std::uint64_t number() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected number");
        std::uint64_t n = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            n = n * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
        return n;
    }
};

void print_expr(const CountingExpr& e, std::string& out) {
    switch (e.kind()) {
        case CountingExpr::Kind::Const:
            out += std::to_string(e.value());
            break;
        case CountingExpr::Kind::Counter:
            out += "count(" + filter_to_string(e.filter()) + ")";
            break;
        case CountingExpr::Kind::Sum:
            print_expr(e.left(), out);
            out += " + ";
            print_expr(e.right(), out);
            break;
    }
}

void print_formula(const PresburgerFormula& f, std::string& out, int parent_prec) {
    switch (f.kind()) {
        case PresburgerFormula::Kind::Le:
            print_expr(f.lhs(), out);
            out += " <= ";
            print_expr(f.rhs(), out);
            break;
        case PresburgerFormula::Kind::ModEq:
            print_expr(f.lhs(), out);
            out += " == ";
            print_expr(f.rhs(), out);
            out += " mod " + std::to_string(f.modulus());
            break;
        case PresburgerFormula::Kind::Not:
            out += "!";
            if (f.left().kind() == PresburgerFormula::Kind::Le ||
                f.left().kind() == PresburgerFormula::Kind::ModEq) {
                out.push_back('(');
                print_formula(f.left(), out, 2);
                out.push_back(')');
            } else {
                print_formula(f.left(), out, 2);
            }
            break;
        case PresburgerFormula::Kind::And: {
            bool paren = parent_prec > 1;
            if (paren) out.push_back('(');
            print_formula(f.left(), out, 1);
            out += " & ";
            print_formula(f.right(), out, 1);
            if (paren) out.push_back(')');
            break;
        }
        case PresburgerFormula::Kind::Or: {
            bool paren = parent_prec > 0;
            if (paren) out.push_back('(');
            print_formula(f.left(), out, 0);
            out += " | ";
            print_formula(f.right(), out, 0);
            if (paren) out.push_back(')');
            break;
        }
    }
}

} // namespace

PresburgerFormula parse_presburger(
    std::string_view text,
    const std::vector<std::pair<std::string, Regex>>& named_patterns) {
    PresburgerParser p{text, 0, named_patterns};
    return p.parse();
}

std::string presburger_to_string(const PresburgerFormula& f) {
    std::string out;
    print_formula(f, out, 0);
    return out;
}

} // namespace uta
