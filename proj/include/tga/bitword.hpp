#pragma once

#include <cstdint>
#include <vector>

#include "tga/node_set.hpp"

namespace tga {

/// Binary word over the variable nodes; entries are 0 or 1.
using BitWord = std::vector<std::uint8_t>;

inline int weight(const BitWord& x) {
    int w = 0;
    for (auto b : x) {
        w += b;
    }
    return w;
}

inline NodeSet support(const BitWord& x) {
    NodeSet s;
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
        if (x[i]) {
            s.push_back(i);
        }
    }
    return s;
}

inline BitWord word_from_support(int n, const NodeSet& s) {
    BitWord x(n, 0);
    for (int i : s) {
        x.at(i) = 1;
    }
    return x;
}

inline bool is_zero(const BitWord& x) {
    for (auto b : x) {
        if (b) {
            return false;
        }
    }
    return true;
}

}  // namespace tga
