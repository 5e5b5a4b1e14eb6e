#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tga/general_graph.hpp"

namespace tga {

/// Bipartite Tanner graph: variable nodes 0..var_count()-1 on the left,
/// check nodes 0..check_count()-1 on the right.
///
/// Neighbor lists keep insertion order. The order of variables inside a
/// check's list is meaningful: it fixes the coordinate layout of the local
/// word a generalized check decodes.
class TannerGraph {
  public:
    TannerGraph() = default;
    TannerGraph(int var_count, int check_count)
        : var_adj_(var_count), check_adj_(check_count) {}

    /// Builds from explicit adjacency on both sides, preserving each side's
    /// neighbor order. The two sides must describe the same edge set.
    static TannerGraph from_adjacency(std::vector<std::vector<int>> var_adj,
                                      std::vector<std::vector<int>> check_adj);

    int var_count() const { return static_cast<int>(var_adj_.size()); }
    int check_count() const { return static_cast<int>(check_adj_.size()); }
    int edge_count() const { return edge_count_; }

    /// Rejects duplicate edges; parallel edges never arise in the graphs
    /// built here and the alist format cannot express them anyway.
    void add_edge(int var, int check);
    bool has_edge(int var, int check) const;

    const std::vector<int>& var_neighbors(int var) const { return var_adj_[var]; }
    const std::vector<int>& check_neighbors(int check) const { return check_adj_[check]; }
    int var_degree(int var) const { return static_cast<int>(var_adj_[var].size()); }
    int check_degree(int check) const { return static_cast<int>(check_adj_[check].size()); }

    /// Position of `var` inside check's ordered neighbor list, or -1.
    int edge_index_in_check(int check, int var) const;

    /// Common degree of all variables (checks), if they agree.
    std::optional<int> var_regularity() const;
    std::optional<int> check_regularity() const;

    int max_var_degree() const;
    int max_check_degree() const;

    /// One node per variable and per check; check c becomes node
    /// var_count() + c. Girth and distance routines run on this view.
    GeneralGraph to_general() const;

  private:
    std::vector<std::vector<int>> var_adj_;
    std::vector<std::vector<int>> check_adj_;
    int edge_count_ = 0;
};

}  // namespace tga
