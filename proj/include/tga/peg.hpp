#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tga/tanner_graph.hpp"

namespace tga {

/// Partial Tanner graph handed to the progressive-edge-growth engine.
struct PegSeed {
    int var_count = 0;
    int check_count = 0;
    std::vector<std::pair<int, int>> edges;  // (var, check)
};

struct PegOptions {
    int gamma = 0;         // target degree of every variable
    int check_cap = 0;     // hard upper bound on check degree
    int girth_target = 0;  // even; every placed edge keeps girth >= this
    std::uint64_t rng_seed = 1;
    int restarts = 60;

    // Fixed mode: the final graph has exactly total_vars variables and
    // total_checks checks (all pre-created). Grow mode (fixed_size = false):
    // variables are appended until every check reaches min_check_degree,
    // creating fresh checks whenever no existing one is girth-safe;
    // total_vars then acts as a size budget.
    bool fixed_size = true;
    int total_vars = -1;
    int total_checks = -1;
    int min_check_degree = 0;

    // Per-variable cap on edges into a marked check set; -1 disables. Applies
    // to every variable the engine extends (seed variables already at gamma
    // are never touched).
    std::vector<int> capped_checks;
    int capped_limit = -1;

    // Fixed mode only: when greedy placement alone cannot reach the girth
    // target, edges placed without the distance constraint are repaired by
    // shortest-cycle edge swaps, up to this many attempts per restart.
    // -1 picks a size-based default, 0 disables the repair stage.
    long long repair_iters = -1;
};

/// Runs seeded PEG completion: processes variables in index order, giving
/// each one gamma edges; every edge goes to a check at bipartite distance
/// >= girth_target - 1 (or unreached), degree below cap, and within the
/// marked-set cap — preferring low degree, then far distance, with seeded
/// random tie-breaks. In fixed mode, greedy dead ends fall back to degree-only
/// placement followed by girth repair via seed-preserving edge swaps.
/// Returns std::nullopt when all restarts fail.
std::optional<TannerGraph> peg_complete(const PegSeed& seed, const PegOptions& options);

/// Regular LDPC construction: n variables of degree gamma, n*gamma/rho
/// checks of degree rho, girth >= girth_target. Throws std::invalid_argument
/// on divisibility or Moore-type counting infeasibility, std::runtime_error
/// when the retry budget runs out.
TannerGraph peg_construct(int n, int gamma, int rho, int girth_target, std::uint64_t seed = 1);

}  // namespace tga
