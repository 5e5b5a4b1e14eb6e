#pragma once

#include <random>
#include <utility>
#include <vector>

#include "tga/general_graph.hpp"
#include "tga/tanner_graph.hpp"

namespace testutil {

/// Tanner graph of a single 2n-cycle: n variables, n degree-2 checks,
/// var i on checks i and (i+1) mod n.
inline tga::TannerGraph tanner_cycle(int n) {
    tga::TannerGraph g(n, n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, i);
        g.add_edge(i, (i + 1) % n);
    }
    return g;
}

/// Erdos-Renyi simple graph.
inline tga::GeneralGraph random_simple_graph(std::mt19937& rng, int n, double p) {
    tga::GeneralGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

/// Random bipartite Tanner graph without duplicate edges.
inline tga::TannerGraph random_tanner(std::mt19937& rng, int vars, int checks, double p) {
    tga::TannerGraph g(vars, checks);
    std::bernoulli_distribution coin(p);
    for (int v = 0; v < vars; ++v) {
        for (int c = 0; c < checks; ++c) {
            if (coin(rng)) {
                g.add_edge(v, c);
            }
        }
    }
    return g;
}

}  // namespace testutil
