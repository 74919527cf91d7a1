#ifndef UTA_TREE_HPP
#define UTA_TREE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uta/common.hpp"

namespace uta {

/// A data value: a finite UTF-8 string used as an edge label.
using DataValue = std::string;

/// An unordered, edge-labelled data tree: a finite multiset of
/// (label, subtree) pairs. Edges are kept sorted in canonical order
/// (label first, then recursive comparison of the subtree), so structural
/// equality is multiset equality.
struct DataTree {
    std::vector<std::pair<DataValue, DataTree>> edges;

    DataTree() = default;

    /// Builds a tree from an arbitrary edge list; sorts into canonical order.
    static DataTree make(std::vector<std::pair<DataValue, DataTree>> edges);

    static DataTree leaf() { return DataTree{}; }

    bool is_leaf() const { return edges.empty(); }
    std::size_t node_count() const;
};

int tree_compare(const DataTree& a, const DataTree& b);
bool tree_equal(const DataTree& a, const DataTree& b);

inline bool operator==(const DataTree& a, const DataTree& b) { return tree_equal(a, b); }
inline bool operator<(const DataTree& a, const DataTree& b) { return tree_compare(a, b) < 0; }

/// The arity of a tree: the multiset of its root edge labels, sorted.
using Arity = std::vector<DataValue>;

Arity arity_of(const DataTree& t);

/// Parses a JSON document into a tree.
/// Objects become multisets of edges, a string s stands for the tree
/// {s:{}}, and an array of single-key objects is the multiset union of its
/// members (the encoding for duplicate keys). Numbers, booleans and null
/// are rejected.
DataTree tree_from_json(std::string_view text);

/// Canonical serialization: UTF-8 JSON with edges in canonical order;
/// nodes with duplicate labels use the array-of-single-key-objects encoding.
std::string tree_to_json(const DataTree& t);

} // namespace uta

#endif
