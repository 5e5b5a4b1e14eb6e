#include "tga/trapping.hpp"

#include <algorithm>
#include <stdexcept>

#include "tga/bitflip.hpp"
#include "tga/bounds.hpp"
#include "tga/combinatorics.hpp"
#include "tga/errors.hpp"
#include "tga/girth.hpp"
#include "tga/peg.hpp"
#include "tga/transforms.hpp"

namespace tga {

TrappingReport check_trapping_conditions(const TannerGraph& g, const NodeSet& t) {
    auto gamma = g.var_regularity();
    if (!gamma) {
        throw std::invalid_argument("check_trapping_conditions: graph must be left-regular");
    }
    TrappingReport report;
    report.set = t;
    report.a_vars = static_cast<int>(t.size());

    std::vector<int> induced_degree(g.check_count(), 0);
    for (int v : t) {
        if (v < 0 || v >= g.var_count()) {
            throw std::out_of_range("check_trapping_conditions: variable index out of range");
        }
        for (int c : g.var_neighbors(v)) {
            ++induced_degree[c];
        }
    }
    std::vector<std::uint8_t> in_t(g.var_count(), 0);
    for (int v : t) {
        in_t[v] = 1;
    }
    for (int c = 0; c < g.check_count(); ++c) {
        if (induced_degree[c] == 0) {
            continue;
        }
        (induced_degree[c] % 2 ? report.odd_checks : report.even_checks).push_back(c);
    }
    report.b_checks = static_cast<int>(report.odd_checks.size());

    const int need_even = (*gamma + 1) / 2;  // ceil(gamma/2)
    for (int v : t) {
        int even_neighbors = 0;
        for (int c : g.var_neighbors(v)) {
            if (induced_degree[c] > 0 && induced_degree[c] % 2 == 0) {
                ++even_neighbors;
            }
        }
        if (even_neighbors < need_even) {
            report.cond_a = false;
            break;
        }
    }

    const int odd_cap = *gamma / 2;  // floor(gamma/2)
    std::vector<std::uint8_t> odd_mark(g.check_count(), 0);
    for (int c : report.odd_checks) {
        odd_mark[c] = 1;
    }
    for (int u = 0; u < g.var_count() && report.cond_b; ++u) {
        if (in_t[u]) {
            continue;
        }
        int met = 0;
        for (int c : g.var_neighbors(u)) {
            met += odd_mark[c];
        }
        if (met > odd_cap) {
            report.cond_b = false;
        }
    }

    BitWord x = word_from_support(g.var_count(), t);
    report.is_fixed_point_parallel = is_fixed_point(g, x, BfAlgorithm::parallel);
    report.is_fixed_point_serial = is_fixed_point(g, x, BfAlgorithm::serial);

    if ((report.cond_a && report.cond_b) != report.is_fixed_point_parallel) {
        throw std::logic_error(
            "check_trapping_conditions: condition/fixed-point equivalence self-check failed");
    }
    return report;
}

bool is_fixed_point(const TannerGraph& g, const BitWord& x, BfAlgorithm algorithm) {
    if (algorithm == BfAlgorithm::parallel) {
        return parallel_bf_round(g, x) == x;
    }
    DecodeOutcome one_pass = serial_bf_decode(g, x, 1);
    return one_pass.final_word == x;
}

TannerGraph construct_potential_trapping_set(int gamma, int g_prime) {
    if (gamma < 3) {
        throw std::invalid_argument("construct_potential_trapping_set: need gamma >= 3");
    }
    int d = (gamma + 1) / 2;
    CageOrder cage = cage_order(d, g_prime);
    if (!cage.witness) {
        throw std::invalid_argument("construct_potential_trapping_set: no exact (" +
                                    std::to_string(d) + "," + std::to_string(g_prime) +
                                    ")-cage witness available");
    }
    return gamma_augment(edge_vertex_incidence(*cage.witness).graph, gamma);
}

EmbeddedTrappingSet embed_trapping_set(const TannerGraph& fragment, int gamma, int girth,
                                       int size_budget, std::uint64_t seed) {
    if (girth % 2 != 0 || girth < 4) {
        throw std::invalid_argument("embed_trapping_set: girth target must be even and >= 4");
    }
    if (fragment.var_regularity() != std::optional<int>(gamma)) {
        throw std::invalid_argument("embed_trapping_set: fragment is not gamma-left-regular");
    }
    int fragment_girth = tga::girth(fragment);
    if (fragment_girth < girth) {
        throw std::invalid_argument("embed_trapping_set: fragment girth " +
                                    std::to_string(fragment_girth) +
                                    " already violates the target");
    }
    if (size_budget <= fragment.var_count()) {
        throw std::invalid_argument("embed_trapping_set: size budget below fragment size");
    }

    PegSeed peg_seed;
    peg_seed.var_count = fragment.var_count();
    peg_seed.check_count = fragment.check_count();
    for (int v = 0; v < fragment.var_count(); ++v) {
        for (int c : fragment.var_neighbors(v)) {
            peg_seed.edges.push_back({v, c});
        }
    }

    PegOptions opt;
    opt.gamma = gamma;
    opt.check_cap = std::max(gamma, fragment.max_check_degree());
    opt.girth_target = girth;
    opt.rng_seed = seed;
    opt.fixed_size = false;
    opt.total_vars = size_budget;
    opt.min_check_degree = 2;
    for (int c = 0; c < fragment.check_count(); ++c) {
        if (fragment.check_degree(c) % 2 == 1) {
            opt.capped_checks.push_back(c);
        }
    }
    opt.capped_limit = gamma / 2;

    auto host = peg_complete(peg_seed, opt);
    if (!host) {
        throw BudgetError("embed_trapping_set: no completion within the size budget",
                          std::to_string(size_budget) + " variables");
    }

    EmbeddedTrappingSet out;
    out.host = std::move(*host);
    for (int v = 0; v < fragment.var_count(); ++v) {
        out.set.push_back(v);
    }

    if (tga::girth(out.host) != girth) {
        throw std::logic_error("embed_trapping_set: host girth missed the target");
    }
    TrappingReport report = check_trapping_conditions(out.host, out.set);
    if (!report.is_trapping_set() || !report.is_fixed_point_parallel ||
        !report.is_fixed_point_serial) {
        throw std::logic_error("embed_trapping_set: embedded set failed verification");
    }
    return out;
}

namespace {

NodeSet pool_vars(const TannerGraph& g, const NodeSet& t, CriticalPool pool) {
    switch (pool) {
        case CriticalPool::subsets_of_set:
            return t;
        case CriticalPool::set_plus_neighborhood: {
            NodeSet out = t;
            for (int v : t) {
                for (int c : g.var_neighbors(v)) {
                    for (int u : g.check_neighbors(c)) {
                        out.push_back(u);
                    }
                }
            }
            return make_node_set(std::move(out));
        }
        case CriticalPool::all_up_to_weight:
        default: {
            NodeSet out(g.var_count());
            for (int v = 0; v < g.var_count(); ++v) {
                out[v] = v;
            }
            return out;
        }
    }
}

const char* pool_name(CriticalPool pool) {
    switch (pool) {
        case CriticalPool::subsets_of_set: return "subsets of the trapping set";
        case CriticalPool::set_plus_neighborhood: return "trapping set plus one-check neighborhood";
        case CriticalPool::all_up_to_weight: return "all patterns up to the set weight";
    }
    return "?";
}

DecodeOutcome run_decoder(const TannerGraph& g, const BitWord& x, BfAlgorithm algorithm,
                          int max_rounds) {
    return algorithm == BfAlgorithm::parallel ? parallel_bf_decode(g, x, max_rounds)
                                              : serial_bf_decode(g, x, max_rounds);
}

}  // namespace

CriticalNumberResult critical_number(const TannerGraph& g, const NodeSet& t,
                                     BfAlgorithm algorithm, CriticalPool pool, int max_rounds,
                                     unsigned long long budget) {
    CriticalNumberResult result;
    NodeSet pool_set = pool_vars(g, t, pool);
    result.search_space = pool_name(pool);

    const int target_weight = static_cast<int>(t.size());
    for (int w = 0; w <= target_weight; ++w) {
        if (w > static_cast<int>(pool_set.size())) {
            break;
        }
        std::vector<int> positions(w);
        for (int i = 0; i < w; ++i) {
            positions[i] = i;
        }
        bool more = true;
        while (more) {
            if (result.patterns_tried >= budget) {
                return result;  // value stays empty: not found within budget
            }
            ++result.patterns_tried;
            NodeSet pattern;
            pattern.reserve(w);
            for (int p : positions) {
                pattern.push_back(pool_set[p]);
            }
            std::sort(pattern.begin(), pattern.end());
            BitWord x = word_from_support(g.var_count(), pattern);
            DecodeOutcome outcome = run_decoder(g, x, algorithm, max_rounds);
            bool settled = outcome.status == DecodeStatus::fixed_point ||
                           outcome.status == DecodeStatus::codeword;
            if (settled && support(outcome.final_word) == t) {
                result.value = w;
                result.witness = pattern;
                return result;
            }
            more = w > 0 && colex_next(positions, static_cast<int>(pool_set.size()));
            if (w == 0) {
                more = false;
            }
        }
    }
    return result;
}

bool failure_set_check(const TannerGraph& g, const NodeSet& s, BfAlgorithm algorithm,
                       int max_rounds) {
    BitWord x = word_from_support(g.var_count(), s);
    DecodeOutcome outcome = run_decoder(g, x, algorithm, max_rounds);
    return !(outcome.status == DecodeStatus::codeword && is_zero(outcome.final_word));
}

GldpcFragment construct_gldpc_trapping_set(int gamma, int t, int girth,
                                           unsigned long long search_budget) {
    if (gamma < 3 || t < 1) {
        throw std::invalid_argument("construct_gldpc_trapping_set: need gamma >= 3 and t >= 1");
    }
    if (girth % 2 != 0 || girth < 4) {
        throw std::invalid_argument("construct_gldpc_trapping_set: girth must be even and >= 4");
    }
    const int d_l = (gamma + 1) / 2;
    const int d_r = t + 1;
    BipartiteCageResult core = bipartite_cage_order(d_l, d_r, girth, search_budget);
    if (!core.witness) {
        throw BudgetError("construct_gldpc_trapping_set: no (" + std::to_string(d_l) + "," +
                              std::to_string(d_r) + ") girth-" + std::to_string(girth) +
                              " core found",
                          std::to_string(core.states_explored) + " states explored");
    }

    const TannerGraph& core_graph = *core.witness;
    const int n = core_graph.var_count();
    const int pendants_per_var = gamma / 2;
    GldpcFragment fragment;
    fragment.core_checks = core_graph.check_count();
    fragment.pendant_checks = n * pendants_per_var;
    fragment.graph = TannerGraph(n, fragment.core_checks + fragment.pendant_checks);
    for (int c = 0; c < core_graph.check_count(); ++c) {
        for (int v : core_graph.check_neighbors(c)) {
            fragment.graph.add_edge(v, c);
        }
    }
    int next = fragment.core_checks;
    for (int v = 0; v < n; ++v) {
        fragment.set.push_back(v);
        for (int k = 0; k < pendants_per_var; ++k) {
            fragment.graph.add_edge(v, next++);
        }
    }
    return fragment;
}

EmbeddedTrappingSet embed_gldpc_trapping_set(const GldpcFragment& fragment, int gamma, int rho,
                                             int girth, int min_vars, int max_vars,
                                             std::uint64_t seed) {
    const TannerGraph& frag = fragment.graph;
    if (frag.var_regularity() != std::optional<int>(gamma)) {
        throw std::invalid_argument("embed_gldpc_trapping_set: fragment is not gamma-left-regular");
    }
    PegSeed peg_seed;
    peg_seed.var_count = frag.var_count();
    peg_seed.check_count = frag.check_count();
    for (int v = 0; v < frag.var_count(); ++v) {
        for (int c : frag.var_neighbors(v)) {
            peg_seed.edges.push_back({v, c});
        }
    }

    for (int n = std::max(min_vars, frag.var_count()); n <= max_vars; ++n) {
        if (static_cast<long long>(n) * gamma % rho != 0) {
            continue;
        }
        int m = static_cast<int>(static_cast<long long>(n) * gamma / rho);
        if (m < frag.check_count()) {
            continue;
        }
        PegOptions opt;
        opt.gamma = gamma;
        opt.check_cap = rho;
        opt.girth_target = girth;
        opt.rng_seed = seed;
        opt.fixed_size = true;
        opt.total_vars = n;
        opt.total_checks = m;
        opt.capped_limit = gamma / 2;
        for (int c = 0; c < fragment.core_checks; ++c) {
            opt.capped_checks.push_back(c);
        }
        auto host = peg_complete(peg_seed, opt);
        if (!host) {
            continue;
        }
        EmbeddedTrappingSet out;
        out.host = std::move(*host);
        out.set = fragment.set;
        if (out.host.check_regularity() != std::optional<int>(rho) ||
            out.host.var_regularity() != std::optional<int>(gamma) ||
            tga::girth(out.host) < girth) {
            throw std::logic_error("embed_gldpc_trapping_set: completion failed verification");
        }
        return out;
    }
    throw std::runtime_error("embed_gldpc_trapping_set: no host completed in [" +
                             std::to_string(min_vars) + ", " + std::to_string(max_vars) + "]");
}

}  // namespace tga
