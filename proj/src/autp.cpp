#include "uta/autp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace uta {

bool autp_membership(const Aut& A, const DataTree& t, Stats* stats) {
    if (A.cls != AutClass::Autp)
        throw InvalidAutomaton("autp_membership requires the Presburger class");
    return accepts(A, t, stats);
}

// ---------------------------------------------------------- determinize

namespace {

std::string subset_name(const std::vector<StateId>& qs, std::uint32_t mask) {
    std::string name = "{";
    bool first = true;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (!(mask & (std::uint32_t{1} << i))) continue;
        if (!first) name += ",";
        name += qs[i];
        first = false;
    }
    name += "}";
    return name;
}

Filter rewrite_filter(const Filter& f, const std::map<StateId, Filter>& repl) {
    switch (f.kind()) {
        case Filter::Kind::Pattern: return f;
        case Filter::Kind::State: return repl.at(f.state());
        case Filter::Kind::And:
            return Filter::f_and(rewrite_filter(f.left(), repl),
                                 rewrite_filter(f.right(), repl));
        case Filter::Kind::Or:
            return Filter::f_or(rewrite_filter(f.left(), repl),
                                rewrite_filter(f.right(), repl));
        case Filter::Kind::Not:
            return Filter::f_not(rewrite_filter(f.left(), repl));
    }
    throw Error("unreachable");
}

CountingExpr rewrite_expr(const CountingExpr& e, const std::map<StateId, Filter>& repl) {
    switch (e.kind()) {
        case CountingExpr::Kind::Const: return e;
        case CountingExpr::Kind::Counter:
            return CountingExpr::counter(rewrite_filter(e.filter(), repl));
        case CountingExpr::Kind::Sum:
            return CountingExpr::sum(rewrite_expr(e.left(), repl),
                                     rewrite_expr(e.right(), repl));
    }
    throw Error("unreachable");
}

PresburgerFormula rewrite_formula(const PresburgerFormula& f,
                                  const std::map<StateId, Filter>& repl) {
    switch (f.kind()) {
        case PresburgerFormula::Kind::Le:
            return PresburgerFormula::le(rewrite_expr(f.lhs(), repl),
                                         rewrite_expr(f.rhs(), repl));
        case PresburgerFormula::Kind::ModEq:
            return PresburgerFormula::mod_eq(rewrite_expr(f.lhs(), repl),
                                             rewrite_expr(f.rhs(), repl), f.modulus());
        case PresburgerFormula::Kind::And:
            return PresburgerFormula::p_and(rewrite_formula(f.left(), repl),
                                            rewrite_formula(f.right(), repl));
        case PresburgerFormula::Kind::Or:
            return PresburgerFormula::p_or(rewrite_formula(f.left(), repl),
                                           rewrite_formula(f.right(), repl));
        case PresburgerFormula::Kind::Not:
            return PresburgerFormula::p_not(rewrite_formula(f.left(), repl));
    }
    throw Error("unreachable");
}

PresburgerFormula trivially_true() {
    return PresburgerFormula::le(CountingExpr::constant(0), CountingExpr::constant(0));
}

} // namespace

Aut autp_determinize(const Aut& A, std::size_t guard) {
    if (A.cls != AutClass::Autp)
        throw InvalidAutomaton("autp_determinize requires the Presburger class");
    std::vector<StateId> qs(A.states.begin(), A.states.end());
    if (qs.size() >= 31 || (std::size_t{1} << qs.size()) > guard)
        throw ResourceError("determinization state guard exceeded");
    if (A.rules.size() >= 31)
        throw ResourceError("determinization rule guard exceeded");

    std::uint32_t n_subsets = std::uint32_t{1} << qs.size();

    // state test q  ->  disjunction over the subset states containing q
    std::map<StateId, Filter> repl;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        std::optional<Filter> acc;
        for (std::uint32_t m = 0; m < n_subsets; ++m) {
            if (!(m & (std::uint32_t{1} << i))) continue;
            Filter s = Filter::state(subset_name(qs, m));
            acc = acc ? Filter::f_or(std::move(*acc), std::move(s)) : std::move(s);
        }
        repl.emplace(qs[i], std::move(*acc));
    }

    Aut D;
    D.cls = AutClass::Autp;
    D.patterns = A.patterns;
    for (std::uint32_t m = 0; m < n_subsets; ++m) {
        std::string name = subset_name(qs, m);
        D.states.insert(name);
        for (std::size_t i = 0; i < qs.size(); ++i)
            if ((m & (std::uint32_t{1} << i)) && A.finals.count(qs[i])) {
                D.finals.insert(name);
                break;
            }
    }

    std::uint32_t n_rule_sets = std::uint32_t{1} << A.rules.size();
    for (std::uint32_t x = 0; x < n_rule_sets; ++x) {
        std::optional<PresburgerFormula> conj;
        std::uint32_t target_mask = 0;
        for (std::size_t i = 0; i < A.rules.size(); ++i) {
            PresburgerFormula g = rewrite_formula(*A.rules[i].formula, repl);
            if (x & (std::uint32_t{1} << i)) {
                auto it = std::find(qs.begin(), qs.end(), A.rules[i].target);
                target_mask |= std::uint32_t{1} << (it - qs.begin());
            } else {
                g = PresburgerFormula::p_not(std::move(g));
            }
            conj = conj ? PresburgerFormula::p_and(std::move(*conj), std::move(g))
                        : std::move(g);
        }
        Rule r;
        r.formula = std::make_shared<PresburgerFormula>(
            conj ? std::move(*conj) : trivially_true());
        r.target = subset_name(qs, target_mask);
        D.rules.push_back(std::move(r));
    }
    return D;
}

// -------------------------------------------------------------- emptiness

namespace {

struct EmptyLetter {
    std::vector<char> truth; // over the collected filter list
    DataValue value;
    StateSet annotation;
};

// One letter per (annotation set in S, nonempty sign class of the reduced
// filters); letters with equal truth vectors are merged since only the
// induced filter counts matter to the formulas.
std::vector<EmptyLetter> build_letters(const std::vector<Filter>& F,
                                       const std::map<StateSet, DataTree>& S) {
    if (F.size() > 20) throw ResourceError("too many filters in emptiness search");
    std::vector<EmptyLetter> letters;
    for (const auto& [annotation, tree] : S) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << F.size()); ++mask) {
            std::vector<char> signs(F.size());
            for (std::size_t i = 0; i < F.size(); ++i)
                signs[i] = !((mask >> (F.size() - 1 - i)) & 1);
            bool dup = false;
            for (const EmptyLetter& l : letters)
                if (l.truth == signs) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            PatternAcceptor acc = pattern_all();
            bool empty = false;
            for (std::size_t i = 0; i < F.size(); ++i) {
                PatternAcceptor r = filter_reduce(F[i], annotation);
                if (!signs[i]) r = pattern_not(r);
                acc = pattern_and(acc, r);
                if (pattern_empty(acc)) {
                    empty = true;
                    break;
                }
            }
            if (empty) continue;
            auto word = pattern_shortest(acc);
            letters.push_back(EmptyLetter{std::move(signs), *word, annotation});
        }
    }
    return letters;
}

constexpr std::uint64_t kEmptinessVectorBudget = 4000000;

// Enumerates count vectors over the letters in graded-lex order (smaller
// totals first) and reports each induced annotation set. Returns false when
// the vector budget ran out before exhausting the space.
template <typename Fn>
bool enumerate_annotations(const Aut& A, const std::vector<Filter>& F,
                           const std::vector<EmptyLetter>& letters, std::uint64_t cap,
                           Stats* stats, Fn&& report) {
    std::size_t L = letters.size();
    std::vector<std::uint64_t> counts(L, 0);
    std::vector<std::uint64_t> per_filter(F.size(), 0);
    std::uint64_t budget = kEmptinessVectorBudget;

    // rec(i, s): distribute exactly s among letters i.. with counts <= cap,
    // larger leading counts first (graded-lex within one total)
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t s) -> int {
        // 0 = continue, 1 = stop (done/abort), 2 = budget exhausted
        if (i == L) {
            if (s != 0) return 0;
            if (budget == 0) return 2;
            --budget;
            if (stats) ++stats->sat_checks;
            StateSet annotation;
            for (const Rule& r : A.rules)
                if (!annotation.count(r.target) &&
                    presburger_eval_counts(*r.formula, F, per_filter))
                    annotation.insert(r.target);
            return report(annotation, counts) ? 0 : 1;
        }
        std::uint64_t rest_cap = cap * (L - 1 - i);
        std::uint64_t hi = std::min(cap, s);
        std::uint64_t lo = s > rest_cap ? s - rest_cap : 0;
        for (std::uint64_t n = hi + 1; n-- > lo;) {
            counts[i] = n;
            for (std::size_t j = 0; j < F.size(); ++j)
                if (letters[i].truth[j]) per_filter[j] += n;
            int r = self(self, i + 1, s - n);
            for (std::size_t j = 0; j < F.size(); ++j)
                if (letters[i].truth[j]) per_filter[j] -= n;
            counts[i] = 0;
            if (r) return r;
        }
        return 0;
    };

    std::uint64_t max_total = cap * L;
    for (std::uint64_t s = 0; s <= max_total; ++s) {
        int r = L == 0 && s > 0 ? 0 : rec(rec, 0, s);
        if (r == 1) return true;
        if (r == 2) return false;
        if (L == 0) break;
    }
    return true;
}

} // namespace

EmptinessResult autp_empty(const Aut& A, std::uint64_t bound, Stats* stats) {
    if (A.cls != AutClass::Autp)
        throw InvalidAutomaton("autp_empty requires the Presburger class");

    std::vector<Filter> F;
    bool fragment = true;
    std::uint64_t max_const = 0, lcm = 1;
    for (const Rule& r : A.rules) {
        for (const Filter& f : presburger_filters(*r.formula)) {
            bool seen = false;
            for (const Filter& g : F)
                if (filter_equal(g, f)) {
                    seen = true;
                    break;
                }
            if (!seen) F.push_back(f);
        }
        FormulaProfile p = profile_formula(*r.formula);
        fragment = fragment && p.comparison_fragment;
        max_const = std::max(max_const, p.max_const);
        lcm = std::lcm(lcm, p.lcm);
    }
    std::uint64_t complete_cap = max_const + lcm;
    std::uint64_t cap = bound ? bound : complete_cap;
    bool complete = fragment && cap >= complete_cap;

    std::map<StateSet, DataTree> S;
    std::optional<DataTree> found;

    bool exhausted = true;
    bool changed = true;
    std::uint64_t iterations = 0;
    while (changed && !found) {
        changed = false;
        if (++iterations > (std::uint64_t{1} << std::min<std::size_t>(A.states.size(), 24)) + 1)
            throw Error("emptiness fixpoint failed to terminate");
        std::vector<EmptyLetter> letters = build_letters(F, S);
        bool done = enumerate_annotations(
            A, F, letters, cap, stats,
            [&](const StateSet& annotation, const std::vector<std::uint64_t>& counts) {
                if (S.count(annotation)) return true; // keep going
                std::vector<std::pair<DataValue, DataTree>> edges;
                for (std::size_t i = 0; i < letters.size(); ++i)
                    for (std::uint64_t k = 0; k < counts[i]; ++k)
                        edges.emplace_back(letters[i].value,
                                           S.at(letters[i].annotation));
                DataTree witness = DataTree::make(std::move(edges));
                S.emplace(annotation, witness);
                changed = true;
                for (const StateId& q : annotation)
                    if (A.finals.count(q)) {
                        found = std::move(witness);
                        return false; // stop: non-empty
                    }
                return true;
            });
        if (!done) exhausted = false;
    }

    if (found) return {EmptinessVerdict::NonEmpty, std::move(found)};
    if (complete && exhausted) return {EmptinessVerdict::Empty, std::nullopt};
    return {EmptinessVerdict::Unknown, std::nullopt};
}

} // namespace uta
