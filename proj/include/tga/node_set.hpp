#pragma once

#include <algorithm>
#include <vector>

namespace tga {

/// Sorted list of node indices. Callers keep these sorted; the helpers below
/// assume it.
using NodeSet = std::vector<int>;

inline NodeSet make_node_set(std::vector<int> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

inline bool node_set_contains(const NodeSet& set, int node) {
    return std::binary_search(set.begin(), set.end(), node);
}

inline NodeSet node_set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline NodeSet node_set_intersection(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline NodeSet node_set_difference(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace tga
