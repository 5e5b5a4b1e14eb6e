#include "tga/cages.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace tga {

GeneralGraph cycle_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("cycle_graph: need n >= 3");
    }
    GeneralGraph g(n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
    }
    return g;
}

GeneralGraph complete_graph(int n) {
    GeneralGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

GeneralGraph complete_bipartite_graph(int a, int b) {
    GeneralGraph g(a + b);
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) {
            g.add_edge(u, a + v);
        }
    }
    return g;
}

GeneralGraph petersen_graph() {
    GeneralGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

GeneralGraph heawood_graph() {
    // Fano plane lines over points 0..6; line j becomes node 7 + j.
    static const std::array<std::array<int, 3>, 7> lines = {{
        {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5},
    }};
    GeneralGraph g(14);
    for (int j = 0; j < 7; ++j) {
        for (int p : lines[j]) {
            g.add_edge(p, 7 + j);
        }
    }
    return g;
}

GeneralGraph pg2_3_incidence_graph() {
    // Points and lines of PG(2,3) are the 1- and 2-dimensional subspaces of
    // F_3^3; both are indexed by the 13 projective triples normalized so the
    // first nonzero coordinate is 1. Point p lies on line a iff a.p = 0.
    std::vector<std::array<int, 3>> reps;
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
            for (int z = 0; z < 3; ++z) {
                if (x == 1 || (x == 0 && y == 1) || (x == 0 && y == 0 && z == 1)) {
                    reps.push_back({x, y, z});
                }
            }
        }
    }
    GeneralGraph g(26);
    for (int p = 0; p < 13; ++p) {
        for (int l = 0; l < 13; ++l) {
            int dot = reps[p][0] * reps[l][0] + reps[p][1] * reps[l][1] + reps[p][2] * reps[l][2];
            if (dot % 3 == 0) {
                g.add_edge(p, 13 + l);
            }
        }
    }
    return g;
}

}  // namespace tga
