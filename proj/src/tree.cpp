#include "uta/tree.hpp"

#include <algorithm>

#include <json.hpp>

namespace uta {

DataTree DataTree::make(std::vector<std::pair<DataValue, DataTree>> edges) {
    DataTree t;
    t.edges = std::move(edges);
    std::sort(t.edges.begin(), t.edges.end(),
              [](const auto& x, const auto& y) {
                  if (int c = x.first.compare(y.first)) return c < 0;
                  return tree_compare(x.second, y.second) < 0;
              });
    return t;
}

std::size_t DataTree::node_count() const {
    std::size_t n = 1;
    for (const auto& [label, child] : edges) n += child.node_count();
    return n;
}

int tree_compare(const DataTree& a, const DataTree& b) {
    if (a.edges.size() != b.edges.size())
        return a.edges.size() < b.edges.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.edges.size(); ++i) {
        if (int c = a.edges[i].first.compare(b.edges[i].first)) return c < 0 ? -1 : 1;
        if (int c = tree_compare(a.edges[i].second, b.edges[i].second)) return c;
    }
    return 0;
}

bool tree_equal(const DataTree& a, const DataTree& b) { return tree_compare(a, b) == 0; }

Arity arity_of(const DataTree& t) {
    Arity labels;
    labels.reserve(t.edges.size());
    for (const auto& [label, child] : t.edges) labels.push_back(label);
    // edges are sorted by label first, so the arity is already sorted
    return labels;
}

namespace {

using json = nlohmann::json;

const char* kind_name(const json& v) {
    switch (v.type()) {
        case json::value_t::number_integer:
        case json::value_t::number_unsigned:
        case json::value_t::number_float: return "number";
        case json::value_t::boolean: return "boolean";
        case json::value_t::null: return "null";
        default: return "value";
    }
}

DataTree tree_from_value(const json& v) {
    if (v.is_object()) {
        std::vector<std::pair<DataValue, DataTree>> edges;
        for (auto it = v.begin(); it != v.end(); ++it)
            edges.emplace_back(it.key(), tree_from_value(it.value()));
        return DataTree::make(std::move(edges));
    }
    if (v.is_array()) {
        std::vector<std::pair<DataValue, DataTree>> edges;
        for (const auto& member : v) {
            if (!member.is_object() || member.size() != 1)
                throw ParseError("array members must be single-key objects");
            auto it = member.begin();
            edges.emplace_back(it.key(), tree_from_value(it.value()));
        }
        return DataTree::make(std::move(edges));
    }
    if (v.is_string()) {
        // shorthand: "s" stands for {s:{}}
        std::vector<std::pair<DataValue, DataTree>> edges;
        edges.emplace_back(v.get<std::string>(), DataTree::leaf());
        return DataTree::make(std::move(edges));
    }
    throw ParseError(std::string("unsupported JSON value kind: ") + kind_name(v));
}

bool has_duplicate_label(const DataTree& t) {
    for (std::size_t i = 1; i < t.edges.size(); ++i)
        if (t.edges[i].first == t.edges[i - 1].first) return true;
    return false;
}

json tree_to_value(const DataTree& t) {
    if (has_duplicate_label(t)) {
        json arr = json::array();
        for (const auto& [label, child] : t.edges) {
            json member = json::object();
            member[label] = tree_to_value(child);
            arr.push_back(std::move(member));
        }
        return arr;
    }
    json obj = json::object();
    for (const auto& [label, child] : t.edges) obj[label] = tree_to_value(child);
    return obj;
}

} // namespace

DataTree tree_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return tree_from_value(doc);
}

std::string tree_to_json(const DataTree& t) {
    // nlohmann keeps object keys sorted, matching the canonical edge order
    return tree_to_value(t).dump();
}

} // namespace uta
