#pragma once

#include <utility>
#include <vector>

#include "tga/general_graph.hpp"
#include "tga/node_set.hpp"
#include "tga/tanner_graph.hpp"

namespace tga {

/// Subgraph induced by a set of variables: those variables, every check with
/// at least one neighbor among them, and exactly the edges between the two.
/// Index maps relate the new graph back to the host.
struct InducedSubgraph {
    TannerGraph graph;
    std::vector<int> var_to_host;    // new var index -> host var index
    std::vector<int> check_to_host;  // new check index -> host check index
};

InducedSubgraph induced_subgraph(const TannerGraph& host, const NodeSet& vars);

/// Host graph with every degree-1 (pendant) check removed. Variables keep
/// their indices.
struct ReducedGraph {
    TannerGraph graph;
    std::vector<int> check_to_host;
    int pendant_checks_removed = 0;
};

ReducedGraph reduced_graph(const TannerGraph& h);

/// Appends gamma - d(v) fresh pendant checks to each variable v, making the
/// graph gamma-left-regular. Original checks keep their indices; new checks
/// are appended in variable order. Throws std::invalid_argument if some
/// variable already exceeds degree gamma.
TannerGraph gamma_augment(const TannerGraph& h, int gamma);

/// Tanner graph whose variables are the nodes of g and whose checks are the
/// edges of g; every check has degree 2 and girth doubles.
struct EdgeVertexIncidence {
    TannerGraph graph;
    std::vector<std::pair<int, int>> check_to_edge;  // check index -> endpoints in g
};

EdgeVertexIncidence edge_vertex_incidence(const GeneralGraph& g);

/// How inverse_edge_vertex_incidence picks the root node of each check.
enum class RootRule {
    lowest_index,   // smallest variable index (default; deterministic)
    highest_index,  // largest variable index
    first_listed,   // first entry of the check's ordered neighbor list
};

/// Inverse of the edge-vertex incidence map: pendant checks are dropped, and
/// every remaining check contributes an edge from its root to each other
/// neighbor. Distinct checks can yield the same variable pair; such
/// duplicates are collapsed to one edge and counted.
struct InverseEdgeVertexIncidence {
    GeneralGraph graph;
    int pendant_checks_ignored = 0;
    int collapsed_parallel_edges = 0;
};

InverseEdgeVertexIncidence inverse_edge_vertex_incidence(const TannerGraph& h,
                                                         RootRule rule = RootRule::lowest_index);

}  // namespace tga
