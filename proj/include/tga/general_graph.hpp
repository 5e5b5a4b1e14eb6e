#pragma once

#include <vector>

namespace tga {

/// Plain undirected graph on nodes 0..node_count()-1. Parallel edges and
/// self-loops are representable (adjacency is a multiset); most constructions
/// here produce simple graphs.
class GeneralGraph {
  public:
    GeneralGraph() = default;
    explicit GeneralGraph(int node_count) : adjacency_(node_count) {}

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    const std::vector<int>& neighbors(int node) const { return adjacency_[node]; }
    int degree(int node) const { return static_cast<int>(adjacency_[node].size()); }

    /// Sorted (u, v) pairs with u <= v, one entry per edge instance.
    std::vector<std::pair<int, int>> edges() const;

    bool is_regular(int degree) const;

  private:
    std::vector<std::vector<int>> adjacency_;
    int edge_count_ = 0;
};

}  // namespace tga
