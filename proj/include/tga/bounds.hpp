#pragma once

#include <optional>
#include <string>

#include "tga/general_graph.hpp"
#include "tga/rational.hpp"
#include "tga/tanner_graph.hpp"

namespace tga {

/// Exact threshold plus its strict floor: floor_int is the largest integer
/// strictly below value, so "weight < value" guarantees are usable without
/// callers re-deriving strictness (an integer value yields value - 1).
struct BoundValue {
    Rational value;
    long long floor_int;
    std::string context;
};

/// Moore bound n_0(d, g): fewest nodes of a graph with girth g whose degrees
/// average at least d. Exact for rational d >= 2 and g >= 3; with r = floor(g/2),
///   g odd:  1 + d * sum_{i<r} (d-1)^i
///   g even: 2 * sum_{i<r} (d-1)^i
BoundValue moore_bound(const Rational& d, int g);

/// Upper bound n_u(d, g) on the order of a (d, g)-cage, d >= 3:
///   d = 3:  4/3 + (29/12) 2^{g-2}   (odd g;  2/3 + ... for even g)
///   d >= 4: 2 (d-1)^{g-2}           (odd g;  4 (d-1)^{g-3} for even g)
BoundValue cage_upper_bound(int d, int g);

/// Exact cage order when a machine-verifiable witness construction ships with
/// the toolkit, otherwise just the bracket [lower, upper]. A returned witness
/// has been re-checked d-regular with girth exactly g.
struct CageOrder {
    std::optional<long long> exact;
    std::optional<GeneralGraph> witness;
    Rational lower;                 // Moore bound
    std::optional<Rational> upper;  // cage upper bound (d >= 3 only)
};

CageOrder cage_order(int d, int g);

/// Guaranteed-correction threshold for gamma-left-regular LDPC codes with
/// girth 2g' under parallel bit flipping: any pattern of weight strictly less
/// than n_0(gamma/2, g') / 2 is corrected. Requires gamma >= 4 and even
/// girth >= 6.
BoundValue ldpc_guarantee(int gamma, int girth);

/// Smallest trapping-set size from the cage construction: a weight of
/// n_c(ceil(gamma/2), g') errors can defeat the parallel decoder.
CageOrder ldpc_failure_bound(int gamma, int girth);

/// Guaranteed-correction threshold for GLDPC codes whose subcode corrects t
/// errors: weight strictly below n_0(gamma t/(t+1), g'). Requires
/// gamma t/(t+1) >= 2.
BoundValue gldpc_guarantee(int gamma, int t, int girth);

/// Expansion threshold (t+2)/(2(t+1)) from the GLDPC sufficient condition.
Rational gldpc_beta_threshold(int t);

/// Budgeted exhaustive search for the least left-vertex count of a
/// (d_l, d_r)-biregular bipartite graph with girth exactly >= girth.
struct BipartiteCageResult {
    std::optional<long long> left_count;  // exact minimum, when search completed
    std::optional<TannerGraph> witness;   // left nodes as variables
    long long lower_bound;                // least left count not ruled out
    bool budget_exhausted = false;
    unsigned long long states_explored = 0;
};

BipartiteCageResult bipartite_cage_order(int d_l, int d_r, int girth,
                                         unsigned long long node_budget = 100000000ULL,
                                         int threads = 1);

/// Tree-counting lower bound on the left count of a (d_l, d_r)-biregular
/// bipartite graph with girth >= girth (count left-parity levels of the
/// breadth-first tree that the girth forces to be duplicate-free).
long long bipartite_tree_lower_bound(int d_l, int d_r, int girth);

}  // namespace tga
