#ifndef UTA_PATTERN_HPP
#define UTA_PATTERN_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uta/common.hpp"
#include "uta/dfa.hpp"

namespace uta {

/// Abstract syntax of data-value patterns:
///   literal "d" | concatenation | alternation (+) | Kleene star | bare `*`
/// where `*` abbreviates the set of all data values.
struct Regex {
    enum class Kind { Literal, Concat, Alt, Star, AnyStar };
    Kind kind = Kind::Literal;
    std::vector<char32_t> literal;          // Literal
    std::shared_ptr<Regex> left, right;     // Concat/Alt; Star uses left

    static Regex lit(std::u32string_view s);
    static Regex lit_utf8(std::string_view s);
    static Regex concat(Regex a, Regex b);
    static Regex alt(Regex a, Regex b);
    static Regex star(Regex a);
    static Regex any_star();
};

/// Surface syntax: double-quoted literals, juxtaposition, `+`, postfix `*`,
/// bare `*`, parentheses. Returns the parsed regex and its normalized
/// source text (stored with compiled filters for round-tripping).
Regex parse_regex(std::string_view text);
std::string regex_to_string(const Regex& r);

/// Default guard on acceptor state counts. Boolean combinations of general
/// regular patterns can explode; exceeding the guard raises ResourceError.
inline constexpr std::size_t kPatternStateGuard = 10000;

/// A compiled pattern: a minimized, complete DFA over a partition of the
/// Unicode scalar values into contiguous classes.
struct PatternAcceptor {
    std::vector<char32_t> class_starts; // ascending, class_starts[0] == 0
    Dfa dfa;                            // over class indices

    int class_of(char32_t c) const;
    bool accepts(std::string_view utf8) const;
    std::size_t state_count() const { return dfa.next.size(); }
};

PatternAcceptor compile_pattern(const Regex& r, std::size_t guard = kPatternStateGuard);

PatternAcceptor pattern_and(const PatternAcceptor& x, const PatternAcceptor& y,
                            std::size_t guard = kPatternStateGuard);
PatternAcceptor pattern_or(const PatternAcceptor& x, const PatternAcceptor& y,
                           std::size_t guard = kPatternStateGuard);
PatternAcceptor pattern_not(const PatternAcceptor& x,
                            std::size_t guard = kPatternStateGuard);

bool pattern_empty(const PatternAcceptor& x);
bool pattern_universal(const PatternAcceptor& x);

/// Shortest accepted data value, ties broken by smallest scalar values.
std::optional<std::string> pattern_shortest(const PatternAcceptor& x);

PatternAcceptor pattern_none();       // empty language
PatternAcceptor pattern_all();        // all data values

std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

} // namespace uta

#endif
