#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tga/node_set.hpp"
#include "tga/rational.hpp"
#include "tga/tanner_graph.hpp"

namespace tga {

/// Worst expander of one subset size: the fewest distinct check neighbors
/// any size-`size` variable set achieves, with the first witness in
/// lexicographic order.
struct ExpansionRow {
    int size;
    long long min_neighbors;
    NodeSet witness;
    Rational required;  // delta * size
    bool ok;            // min_neighbors > required (or >= when non-strict)
};

struct ExpansionReport {
    int k_max = 0;
    Rational delta;
    bool strict = true;
    std::vector<ExpansionRow> rows;
    bool pass = true;  // every row ok
    BigInt subsets_examined;
};

/// Distinct check neighbors of a variable set.
int neighborhood_size(const TannerGraph& g, const NodeSet& s);

/// Exhaustively enumerates every variable subset of size 1..k_max and
/// records per-size minima. Refuses (BudgetError) when the total subset
/// count exceeds `budget`. Thread results merge deterministically: ties on
/// the minimum keep the lexicographically least witness.
ExpansionReport verify_expansion(const TannerGraph& g, int k_max, const Rational& delta,
                                 bool strict, unsigned long long budget = 100000000ULL,
                                 int threads = 1);

/// Certificate for gamma >= 4-left-regular graphs: every subset smaller than
/// the Moore bound n_0(gamma/2, g') expands strictly beyond 3*gamma/4.
ExpansionReport verify_theorem1(const TannerGraph& g, unsigned long long budget = 100000000ULL,
                                int threads = 1);

/// Generalized certificate: subsets below n_0(gamma*t/(t+1), g') expand
/// strictly beyond gamma*(t+2)/(2(t+1)).
ExpansionReport verify_theorem6(const TannerGraph& g, int t,
                                unsigned long long budget = 100000000ULL, int threads = 1);

}  // namespace tga
