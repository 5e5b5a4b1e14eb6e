#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tga/bitword.hpp"
#include "tga/gldpc.hpp"
#include "tga/node_set.hpp"
#include "tga/tanner_graph.hpp"

namespace tga {

enum class BfAlgorithm { parallel, serial };

/// Verdict on a candidate trapping set T of a left-regular graph.
///
/// Checks adjacent to T split by the parity of their degree in the induced
/// subgraph: odd_checks unsatisfied under the T-pattern, even_checks
/// satisfied. cond_a: every member has at least ceil(gamma/2) even-degree
/// neighbors. cond_b: no outside variable touches more than floor(gamma/2)
/// odd-degree checks. For left-regular graphs cond_a && cond_b holds iff the
/// T-pattern is a parallel fixed point; both sides are computed and compared
/// as a self-check.
struct TrappingReport {
    NodeSet set;
    int a_vars = 0;   // |T|, the V of a (V,C) trapping set
    int b_checks = 0; // odd-degree check count, the C
    bool cond_a = true;
    bool cond_b = true;
    bool is_fixed_point_parallel = false;
    bool is_fixed_point_serial = false;
    std::vector<int> odd_checks;
    std::vector<int> even_checks;

    bool is_trapping_set() const { return cond_a && cond_b; }
};

TrappingReport check_trapping_conditions(const TannerGraph& g, const NodeSet& t);

/// True iff one decoding round (one full pass for serial) leaves the
/// corrupt set unchanged. Codewords qualify trivially.
bool is_fixed_point(const TannerGraph& g, const BitWord& x, BfAlgorithm algorithm);

/// The cage-based candidate: edge-vertex incidence of the
/// (ceil(gamma/2), g')-cage, gamma-augmented. Every variable belongs to the
/// set; each has ceil(gamma/2) degree-2 checks (first) and the pendant
/// checks appended after them. Throws when no exact cage witness ships.
TannerGraph construct_potential_trapping_set(int gamma, int g_prime);

struct EmbeddedTrappingSet {
    TannerGraph host;
    NodeSet set;  // fragment variables, indices preserved
};

/// Extends the fragment to a gamma-left-regular host of girth exactly
/// `girth` in which the fragment variable set is a genuine trapping set:
/// pendant checks are completed to degree >= 2 and no new variable touches
/// more than floor(gamma/2) of the fragment's odd-degree checks.
/// size_budget caps the host variable count.
EmbeddedTrappingSet embed_trapping_set(const TannerGraph& fragment, int gamma, int girth,
                                       int size_budget, std::uint64_t seed = 1);

enum class CriticalPool {
    subsets_of_set,        // error patterns inside T (default)
    set_plus_neighborhood, // patterns inside T plus vars sharing a check with T
    all_up_to_weight,      // every pattern of weight <= |T|
};

struct CriticalNumberResult {
    std::optional<int> value;
    NodeSet witness;  // least-weight, colex-least initiating pattern
    std::string search_space;
    unsigned long long patterns_tried = 0;
};

/// Least initial error weight (within the pool) whose decoding terminates in
/// the fixed point supported exactly on T. T itself is a fixed point, so
/// with the default pool the value always exists and is <= |T|.
CriticalNumberResult critical_number(const TannerGraph& g, const NodeSet& t,
                                     BfAlgorithm algorithm = BfAlgorithm::parallel,
                                     CriticalPool pool = CriticalPool::subsets_of_set,
                                     int max_rounds = 100,
                                     unsigned long long budget = 100000000ULL);

/// True iff decoding the pattern supported on S does not end in the zero
/// codeword (wrong codeword, fixed point, oscillation, or cap).
bool failure_set_check(const TannerGraph& g, const NodeSet& s, BfAlgorithm algorithm,
                       int max_rounds = 100);

/// GLDPC trapping-set fragment: a (ceil(gamma/2), t+1)-
/// biregular girth-`girth` bipartite core (found by the budgeted cage
/// search) plus floor(gamma/2) pendant checks per variable. Check degrees
/// are all 1 or t+1; the trapping set is the whole variable set.
struct GldpcFragment {
    TannerGraph graph;
    NodeSet set;
    int core_checks = 0;     // degree-(t+1) checks, listed first
    int pendant_checks = 0;  // degree-1 checks, appended after the core
};

GldpcFragment construct_gldpc_trapping_set(int gamma, int t, int girth,
                                           unsigned long long search_budget = 100000000ULL);

/// Embeds the fragment into a host where every check has degree exactly rho
/// (ready for a block-length-rho sub-code), every variable degree gamma,
/// girth >= girth, and no outside variable touches more than floor(gamma/2)
/// of the fragment's degree-(t+1) checks. Host size (n, n*gamma/rho) is the
/// smallest multiple-of-rho var count >= min_vars that completes.
EmbeddedTrappingSet embed_gldpc_trapping_set(const GldpcFragment& fragment, int gamma, int rho,
                                             int girth, int min_vars, int max_vars,
                                             std::uint64_t seed = 1);

}  // namespace tga
