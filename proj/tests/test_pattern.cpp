#include <doctest.h>

#include <set>
#include <string>

#include "uta/pattern.hpp"

using namespace uta;

namespace {

// reference semantics: the language of a regex restricted to words over
// `alphabet` of length <= maxlen
std::set<std::string> lang(const Regex& r, const std::string& alphabet, int maxlen) {
    switch (r.kind) {
        case Regex::Kind::Literal: {
            std::string s = encode_utf8(
                std::u32string(r.literal.begin(), r.literal.end()));
            if (static_cast<int>(s.size()) <= maxlen) return {s};
            return {};
        }
        case Regex::Kind::Concat: {
            std::set<std::string> out;
            for (const auto& a : lang(*r.left, alphabet, maxlen))
                for (const auto& b : lang(*r.right, alphabet, maxlen))
                    if (static_cast<int>(a.size() + b.size()) <= maxlen)
                        out.insert(a + b);
            return out;
        }
        case Regex::Kind::Alt: {
            std::set<std::string> out = lang(*r.left, alphabet, maxlen);
            for (const auto& b : lang(*r.right, alphabet, maxlen)) out.insert(b);
            return out;
        }
        case Regex::Kind::Star: {
            std::set<std::string> out{""};
            std::set<std::string> base = lang(*r.left, alphabet, maxlen);
            bool grew = true;
            while (grew) {
                grew = false;
                for (const auto& a : out)
                    for (const auto& b : base)
                        if (static_cast<int>(a.size() + b.size()) <= maxlen &&
                            out.insert(a + b).second)
                            grew = true;
            }
            return out;
        }
        case Regex::Kind::AnyStar: {
            std::set<std::string> out{""};
            std::set<std::string> prev{""};
            for (int len = 1; len <= maxlen; ++len) {
                std::set<std::string> next;
                for (const auto& w : prev)
                    for (char c : alphabet) next.insert(w + c);
                out.insert(next.begin(), next.end());
                prev = std::move(next);
            }
            return out;
        }
    }
    return {};
}

std::set<std::string> words_up_to(const std::string& alphabet, int maxlen) {
    Regex any = Regex::any_star();
    return lang(any, alphabet, maxlen);
}

} // namespace

TEST_CASE("surface syntax and basic acceptance") {
    PatternAcceptor tex = compile_pattern(parse_regex("*\".tex\""));
    CHECK(tex.accepts("main.tex"));
    CHECK(tex.accepts(".tex"));
    CHECK_FALSE(tex.accepts("main.txt"));
    CHECK_FALSE(tex.accepts("tex"));

    PatternAcceptor empty_lit = compile_pattern(parse_regex("\"\""));
    CHECK(empty_lit.accepts(""));
    CHECK_FALSE(empty_lit.accepts("a"));

    PatternAcceptor ab = compile_pattern(parse_regex("\"a\"+\"b\""));
    CHECK(ab.accepts("a"));
    CHECK(ab.accepts("b"));
    CHECK_FALSE(ab.accepts("ab"));

    CHECK_THROWS_AS(parse_regex("\"unterminated"), ParseError);
}

TEST_CASE("compiled acceptors match the reference matcher") {
    const std::string alphabet = "abt";
    const char* sources[] = {
        "\"a\"", "\"a\"*", "\"a\"+\"b\"", "(\"a\"\"b\")*", "*\"t\"",
        "\"a\"(*)", "(\"a\"+\"b\")*\"t\"",
    };
    auto words = words_up_to(alphabet, 6);
    for (const char* src : sources) {
        Regex r = parse_regex(src);
        PatternAcceptor acc = compile_pattern(r);
        std::set<std::string> ref = lang(r, alphabet, 6);
        for (const auto& w : words)
            CHECK_MESSAGE(acc.accepts(w) == (ref.count(w) > 0),
                          "pattern " << src << " on word '" << w << "'");
    }
}

TEST_CASE("boolean algebra and emptiness") {
    PatternAcceptor tex = compile_pattern(parse_regex("*\".tex\""));
    PatternAcceptor doc = compile_pattern(parse_regex("\"\\\\documentclass\"(*)"));
    CHECK_FALSE(pattern_and(tex, doc).accepts("main.tex"));
    CHECK(pattern_and(tex, doc).accepts("\\documentclass.tex"));

    CHECK(pattern_empty(pattern_not(compile_pattern(Regex::any_star()))));
    CHECK(pattern_empty(pattern_and(compile_pattern(parse_regex("*\".dvi\"")),
                                    compile_pattern(parse_regex("*\".pdf\"")))));
    PatternAcceptor cmp =
        compile_pattern(parse_regex("(*)\".dvi\" + (*)\".pdf\" + (*)\".aux\""));
    CHECK_FALSE(pattern_empty(cmp));
    CHECK(cmp.accepts("paper.aux"));

    PatternAcceptor a = compile_pattern(parse_regex("\"a\""));
    CHECK(pattern_universal(pattern_or(a, pattern_not(a))));
    // double negation, De Morgan on sampled words
    PatternAcceptor b = compile_pattern(parse_regex("\"b\"*"));
    PatternAcceptor lhs = pattern_not(pattern_and(a, b));
    PatternAcceptor rhs = pattern_or(pattern_not(a), pattern_not(b));
    for (const auto& w : words_up_to("ab", 4)) {
        CHECK(lhs.accepts(w) == rhs.accepts(w));
        CHECK(pattern_not(pattern_not(a)).accepts(w) == a.accepts(w));
    }
}

TEST_CASE("shortest word and round trip") {
    CHECK(pattern_shortest(compile_pattern(parse_regex("*\".tex\""))) == ".tex");
    CHECK(pattern_shortest(compile_pattern(parse_regex("\"ba\"+\"b\""))) == "b");
    CHECK_FALSE(pattern_shortest(pattern_none()).has_value());
    CHECK(pattern_shortest(pattern_all()) == "");

    Regex r = parse_regex("(\"a\"+\"b\")*\".tex\"");
    CHECK(regex_to_string(parse_regex(regex_to_string(r))) == regex_to_string(r));
}
