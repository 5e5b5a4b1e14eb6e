#include "tga/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tga {

InducedSubgraph induced_subgraph(const TannerGraph& host, const NodeSet& vars) {
    InducedSubgraph out;
    std::vector<int> var_new(host.var_count(), -1);
    for (int v : vars) {
        if (v < 0 || v >= host.var_count()) {
            throw std::out_of_range("induced_subgraph: variable index out of range");
        }
        if (var_new[v] != -1) {
            continue;
        }
        var_new[v] = static_cast<int>(out.var_to_host.size());
        out.var_to_host.push_back(v);
    }

    // Checks adjacent to at least one selected variable, in host order.
    std::vector<int> check_new(host.check_count(), -1);
    for (int c = 0; c < host.check_count(); ++c) {
        for (int v : host.check_neighbors(c)) {
            if (var_new[v] != -1) {
                check_new[c] = static_cast<int>(out.check_to_host.size());
                out.check_to_host.push_back(c);
                break;
            }
        }
    }

    out.graph = TannerGraph(static_cast<int>(out.var_to_host.size()),
                            static_cast<int>(out.check_to_host.size()));
    // Iterate checks in host neighbor order so local words keep their layout.
    for (int c = 0; c < host.check_count(); ++c) {
        if (check_new[c] == -1) {
            continue;
        }
        for (int v : host.check_neighbors(c)) {
            if (var_new[v] != -1) {
                out.graph.add_edge(var_new[v], check_new[c]);
            }
        }
    }
    return out;
}

ReducedGraph reduced_graph(const TannerGraph& h) {
    ReducedGraph out;
    std::vector<int> check_new(h.check_count(), -1);
    for (int c = 0; c < h.check_count(); ++c) {
        if (h.check_degree(c) == 1) {
            ++out.pendant_checks_removed;
            continue;
        }
        check_new[c] = static_cast<int>(out.check_to_host.size());
        out.check_to_host.push_back(c);
    }
    out.graph = TannerGraph(h.var_count(), static_cast<int>(out.check_to_host.size()));
    for (int c = 0; c < h.check_count(); ++c) {
        if (check_new[c] == -1) {
            continue;
        }
        for (int v : h.check_neighbors(c)) {
            out.graph.add_edge(v, check_new[c]);
        }
    }
    return out;
}

TannerGraph gamma_augment(const TannerGraph& h, int gamma) {
    if (gamma <= 0) {
        throw std::invalid_argument("gamma_augment: gamma must be positive");
    }
    int extra = 0;
    for (int v = 0; v < h.var_count(); ++v) {
        if (h.var_degree(v) > gamma) {
            throw std::invalid_argument("gamma_augment: variable degree exceeds gamma");
        }
        extra += gamma - h.var_degree(v);
    }
    TannerGraph out(h.var_count(), h.check_count() + extra);
    for (int c = 0; c < h.check_count(); ++c) {
        for (int v : h.check_neighbors(c)) {
            out.add_edge(v, c);
        }
    }
    int next = h.check_count();
    for (int v = 0; v < h.var_count(); ++v) {
        for (int k = h.var_degree(v); k < gamma; ++k) {
            out.add_edge(v, next++);
        }
    }
    return out;
}

EdgeVertexIncidence edge_vertex_incidence(const GeneralGraph& g) {
    EdgeVertexIncidence out;
    out.check_to_edge = g.edges();
    out.graph = TannerGraph(g.node_count(), static_cast<int>(out.check_to_edge.size()));
    for (int c = 0; c < static_cast<int>(out.check_to_edge.size()); ++c) {
        auto [u, v] = out.check_to_edge[c];
        if (u == v) {
            throw std::invalid_argument("edge_vertex_incidence: self-loop has no incidence pair");
        }
        out.graph.add_edge(u, c);
        out.graph.add_edge(v, c);
    }
    return out;
}

InverseEdgeVertexIncidence inverse_edge_vertex_incidence(const TannerGraph& h, RootRule rule) {
    InverseEdgeVertexIncidence out;
    out.graph = GeneralGraph(h.var_count());
    std::set<std::pair<int, int>> seen;
    for (int c = 0; c < h.check_count(); ++c) {
        const auto& nbrs = h.check_neighbors(c);
        if (nbrs.size() <= 1) {
            if (nbrs.size() == 1) {
                ++out.pendant_checks_ignored;
            }
            continue;
        }
        int root;
        switch (rule) {
            case RootRule::lowest_index:
                root = *std::min_element(nbrs.begin(), nbrs.end());
                break;
            case RootRule::highest_index:
                root = *std::max_element(nbrs.begin(), nbrs.end());
                break;
            case RootRule::first_listed:
            default:
                root = nbrs.front();
                break;
        }
        for (int v : nbrs) {
            if (v == root) {
                continue;
            }
            auto key = std::minmax(root, v);
            if (!seen.insert({key.first, key.second}).second) {
                ++out.collapsed_parallel_edges;
                continue;
            }
            out.graph.add_edge(root, v);
        }
    }
    return out;
}

}  // namespace tga
