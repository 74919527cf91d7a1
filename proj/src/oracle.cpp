#include "uta/oracle.hpp"

#include <algorithm>
#include <set>

namespace uta {

namespace {

std::vector<std::string> enum_words(const std::string& symbols, std::size_t max_len) {
    std::vector<std::string> words{""};
    std::size_t start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = words.size();
        for (std::size_t i = start; i < end; ++i)
            for (char c : symbols) words.push_back(words[i] + c);
        start = end;
    }
    return words;
}

} // namespace

std::vector<DataTree> enum_trees(const EnumConfig& cfg) {
    std::vector<std::string> words = enum_words(cfg.symbols, cfg.max_word_len);

    std::vector<std::vector<DataTree>> by_size(cfg.max_nodes + 1);
    std::size_t total = 0;
    if (cfg.max_nodes >= 1) {
        by_size[1] = {DataTree::leaf()};
        total = 1;
    }
    for (std::size_t k = 2; k <= cfg.max_nodes; ++k) {
        // candidate edges: any label with any smaller tree
        struct Item {
            const std::string* label;
            const DataTree* tree;
            std::size_t size;
        };
        std::vector<Item> items;
        for (const std::string& w : words)
            for (std::size_t s = 1; s < k; ++s)
                for (const DataTree& t : by_size[s]) items.push_back({&w, &t, s});

        std::set<DataTree> out;
        std::vector<std::pair<DataValue, DataTree>> edges;
        auto rec = [&](auto&& self, std::size_t from, std::size_t remaining) -> void {
            if (remaining == 0) {
                if (out.size() + total >= cfg.budget)
                    throw ResourceError("tree enumeration budget exceeded");
                out.insert(DataTree::make(edges));
                return;
            }
            if (edges.size() >= cfg.max_branching) return;
            for (std::size_t i = from; i < items.size(); ++i) {
                if (items[i].size > remaining) continue;
                edges.emplace_back(*items[i].label, *items[i].tree);
                self(self, i, remaining - items[i].size);
                edges.pop_back();
            }
        };
        rec(rec, 0, k - 1);
        by_size[k].assign(out.begin(), out.end());
        total += by_size[k].size();
    }

    std::vector<DataTree> result;
    result.reserve(total);
    for (std::size_t k = 1; k <= cfg.max_nodes; ++k)
        for (DataTree& t : by_size[k]) result.push_back(std::move(t));
    return result;
}

std::vector<DataTree> enum_trees_over(const std::vector<DataValue>& labels,
                                      std::size_t max_nodes, std::size_t max_trees) {
    std::vector<std::vector<DataTree>> by_size(max_nodes + 1);
    std::size_t total = 0;
    if (max_nodes >= 1 && max_trees >= 1) {
        by_size[1] = {DataTree::leaf()};
        total = 1;
    }
    for (std::size_t k = 2; k <= max_nodes && total < max_trees; ++k) {
        struct Item {
            const DataValue* label;
            const DataTree* tree;
            std::size_t size;
        };
        std::vector<Item> items;
        for (const DataValue& w : labels)
            for (std::size_t s = 1; s < k; ++s)
                for (const DataTree& t : by_size[s]) items.push_back({&w, &t, s});

        std::set<DataTree> out;
        std::vector<std::pair<DataValue, DataTree>> edges;
        bool full = false;
        auto rec = [&](auto&& self, std::size_t from, std::size_t remaining) -> void {
            if (full) return;
            if (remaining == 0) {
                out.insert(DataTree::make(edges));
                if (out.size() + total >= max_trees) full = true;
                return;
            }
            for (std::size_t i = from; i < items.size(); ++i) {
                if (items[i].size > remaining) continue;
                edges.emplace_back(*items[i].label, *items[i].tree);
                self(self, i, remaining - items[i].size);
                edges.pop_back();
                if (full) return;
            }
        };
        rec(rec, 0, k - 1);
        by_size[k].assign(out.begin(), out.end());
        total += by_size[k].size();
    }

    std::vector<DataTree> result;
    result.reserve(total);
    for (std::size_t k = 1; k <= max_nodes; ++k)
        for (DataTree& t : by_size[k]) {
            if (result.size() >= max_trees) return result;
            result.push_back(std::move(t));
        }
    return result;
}

std::vector<std::vector<std::uint64_t>> enum_multisets(std::size_t atoms,
                                                       std::uint64_t max_size) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> cur(atoms, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t s) -> void {
        if (i == atoms) {
            if (s == 0) out.push_back(cur);
            return;
        }
        for (std::uint64_t n = s + 1; n-- > 0;) {
            cur[i] = n;
            self(self, i + 1, s - n);
            cur[i] = 0;
        }
    };
    if (atoms == 0) {
        out.push_back({});
        return out;
    }
    for (std::uint64_t s = 0; s <= max_size; ++s) rec(rec, 0, s);
    return out;
}

// -------------------------------------------------------------- semantics

namespace {

bool naive_descriptor(const Aut& A, const Rule& r, const AnnotatedMultiset& M,
                      std::uint64_t budget) {
    switch (A.cls) {
        case AutClass::Autp: return presburger_holds(*r.formula, M);
        case AutClass::Arity: return arity_descriptor_sat(*r.arity, M);
        case AutClass::Auta:
        case AutClass::Autc: {
            // exhaust every consumption order and transition choice
            for (const RewriteEnd& end : h_all_runs(*A.horizontal, r.h_from, M, budget))
                if (end.consumed_all && end.state == r.h_to) return true;
            return false;
        }
        case AutClass::AutoOrdered: {
            std::vector<int> word;
            for (const auto& [d, Q] : M) {
                int a = classify_ordered(A, d, Q);
                if (a < 0) return false;
                word.push_back(a);
            }
            std::sort(word.begin(), word.end());
            return r.dfa->accepts(word);
        }
    }
    throw Error("unreachable");
}

} // namespace

StateSet brute_evaluate(const Aut& A, const DataTree& t, std::uint64_t budget) {
    AnnotatedMultiset M;
    for (const auto& [d, child] : t.edges)
        M.emplace_back(d, brute_evaluate(A, child, budget));
    StateSet out;
    for (const Rule& r : A.rules)
        if (!out.count(r.target) && naive_descriptor(A, r, M, budget))
            out.insert(r.target);
    return out;
}

bool brute_membership(const Aut& A, const DataTree& t, std::uint64_t budget) {
    for (const StateId& q : brute_evaluate(A, t, budget))
        if (A.finals.count(q)) return true;
    return false;
}

bool vertically_deterministic(const Aut& A, const std::vector<DataTree>& corpus) {
    for (const DataTree& t : corpus)
        if (evaluate(A, t).size() > 1) return false;
    return true;
}

} // namespace uta
