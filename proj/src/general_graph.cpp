#include "tga/general_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tga {

void GeneralGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) {
        throw std::out_of_range("edge endpoint out of range");
    }
    adjacency_[u].push_back(v);
    if (u != v) {
        adjacency_[v].push_back(u);
    }
    ++edge_count_;
}

std::vector<std::pair<int, int>> GeneralGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < node_count(); ++u) {
        for (int v : adjacency_[u]) {
            if (u <= v) {
                out.emplace_back(u, v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool GeneralGraph::is_regular(int degree) const {
    for (int u = 0; u < node_count(); ++u) {
        if (this->degree(u) != degree) {
            return false;
        }
    }
    return true;
}

}  // namespace tga
