#pragma once

#include <climits>
#include <vector>

#include "tga/general_graph.hpp"
#include "tga/tanner_graph.hpp"

namespace tga {

/// Reported girth of an acyclic graph.
inline constexpr int kInfiniteGirth = INT_MAX;

/// Exact girth via breadth-first search from every node: each non-tree edge
/// (x, y) seen from root s closes a walk of length dist[x] + dist[y] + 1
/// containing a cycle, and for a shortest cycle through s the met-in-the-
/// middle edge reports its exact length. Handles self-loops (length 1) and
/// parallel edges (length 2).
int girth(const GeneralGraph& graph);

/// Girth of the bipartite graph; always even or infinite.
int girth(const TannerGraph& graph);

/// Distances from `start`, -1 for unreachable. If max_depth >= 0, nodes
/// farther than that stay unreached.
std::vector<int> bfs_distances(const GeneralGraph& graph, int start, int max_depth = -1);

}  // namespace tga
