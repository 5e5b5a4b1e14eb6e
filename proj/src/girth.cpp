#include "tga/girth.hpp"

#include <algorithm>
#include <deque>

namespace tga {

int girth(const GeneralGraph& graph) {
    const int n = graph.node_count();
    for (int u = 0; u < n; ++u) {
        for (int v : graph.neighbors(u)) {
            if (v == u) {
                return 1;
            }
        }
    }
    // Parallel edges settle the answer before any search: girth 2.
    for (int u = 0; u < n; ++u) {
        auto nbrs = graph.neighbors(u);
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
            return 2;
        }
    }

    int best = kInfiniteGirth;
    std::vector<int> dist(n);
    std::vector<int> parent(n);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (best != kInfiniteGirth && 2 * dist[x] >= best) {
                continue;
            }
            bool tree_edge_to_parent_skipped = false;
            for (int y : graph.neighbors(x)) {
                if (y == parent[x] && !tree_edge_to_parent_skipped) {
                    tree_edge_to_parent_skipped = true;
                    continue;
                }
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        if (best == 3) {
            break;  // girth cannot go lower in a simple graph
        }
    }
    return best;
}

int girth(const TannerGraph& graph) {
    return girth(graph.to_general());
}

std::vector<int> bfs_distances(const GeneralGraph& graph, int start, int max_depth) {
    std::vector<int> dist(graph.node_count(), -1);
    dist[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (max_depth >= 0 && dist[x] >= max_depth) {
            continue;
        }
        for (int y : graph.neighbors(x)) {
            if (dist[y] == -1) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

}  // namespace tga
