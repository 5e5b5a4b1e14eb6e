#include "tga/tanner_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tga {

TannerGraph TannerGraph::from_adjacency(std::vector<std::vector<int>> var_adj,
                                        std::vector<std::vector<int>> check_adj) {
    auto edge_set = [](const std::vector<std::vector<int>>& adj, bool swap, int other_side) {
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < static_cast<int>(adj.size()); ++a) {
            for (int b : adj[a]) {
                if (b < 0 || b >= other_side) {
                    throw std::out_of_range("from_adjacency: neighbor index out of range");
                }
                edges.emplace_back(swap ? b : a, swap ? a : b);
            }
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
            throw std::invalid_argument("from_adjacency: duplicate edge");
        }
        return edges;
    };
    if (edge_set(var_adj, false, static_cast<int>(check_adj.size())) !=
        edge_set(check_adj, true, static_cast<int>(var_adj.size()))) {
        throw std::invalid_argument("from_adjacency: sides disagree on the edge set");
    }
    TannerGraph g;
    g.edge_count_ = 0;
    for (const auto& adj : var_adj) {
        g.edge_count_ += static_cast<int>(adj.size());
    }
    g.var_adj_ = std::move(var_adj);
    g.check_adj_ = std::move(check_adj);
    return g;
}

void TannerGraph::add_edge(int var, int check) {
    if (var < 0 || var >= var_count() || check < 0 || check >= check_count()) {
        throw std::out_of_range("tanner edge endpoint out of range");
    }
    if (has_edge(var, check)) {
        throw std::invalid_argument("duplicate tanner edge");
    }
    var_adj_[var].push_back(check);
    check_adj_[check].push_back(var);
    ++edge_count_;
}

bool TannerGraph::has_edge(int var, int check) const {
    const auto& adj = var_adj_[var];
    return std::find(adj.begin(), adj.end(), check) != adj.end();
}

int TannerGraph::edge_index_in_check(int check, int var) const {
    const auto& adj = check_adj_[check];
    auto it = std::find(adj.begin(), adj.end(), var);
    if (it == adj.end()) {
        return -1;
    }
    return static_cast<int>(it - adj.begin());
}

std::optional<int> TannerGraph::var_regularity() const {
    if (var_count() == 0) {
        return std::nullopt;
    }
    int d = var_degree(0);
    for (int v = 1; v < var_count(); ++v) {
        if (var_degree(v) != d) {
            return std::nullopt;
        }
    }
    return d;
}

std::optional<int> TannerGraph::check_regularity() const {
    if (check_count() == 0) {
        return std::nullopt;
    }
    int d = check_degree(0);
    for (int c = 1; c < check_count(); ++c) {
        if (check_degree(c) != d) {
            return std::nullopt;
        }
    }
    return d;
}

int TannerGraph::max_var_degree() const {
    int best = 0;
    for (int v = 0; v < var_count(); ++v) {
        best = std::max(best, var_degree(v));
    }
    return best;
}

int TannerGraph::max_check_degree() const {
    int best = 0;
    for (int c = 0; c < check_count(); ++c) {
        best = std::max(best, check_degree(c));
    }
    return best;
}

GeneralGraph TannerGraph::to_general() const {
    GeneralGraph g(var_count() + check_count());
    for (int v = 0; v < var_count(); ++v) {
        for (int c : var_adj_[v]) {
            g.add_edge(v, var_count() + c);
        }
    }
    return g;
}

}  // namespace tga
