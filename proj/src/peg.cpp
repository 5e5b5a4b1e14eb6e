#include "tga/peg.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "tga/girth.hpp"

namespace tga {

namespace {

struct Partial {
    std::vector<std::vector<int>> var_adj;
    std::vector<std::vector<int>> check_adj;

    void add_edge(int v, int c) {
        var_adj[v].push_back(c);
        check_adj[c].push_back(v);
    }

    bool has_edge(int v, int c) const {
        return std::find(var_adj[v].begin(), var_adj[v].end(), c) != var_adj[v].end();
    }

    void drop_edge(int v, int c) {
        var_adj[v].erase(std::find(var_adj[v].begin(), var_adj[v].end(), c));
        check_adj[c].erase(std::find(check_adj[c].begin(), check_adj[c].end(), v));
    }

    // Bipartite BFS from a variable; returns distances to checks (-1 when
    // unreached). Distances to checks are odd.
    std::vector<int> check_distances(int v0) const {
        std::vector<int> var_dist(var_adj.size(), -1);
        std::vector<int> check_dist(check_adj.size(), -1);
        var_dist[v0] = 0;
        std::deque<std::pair<int, bool>> queue{{v0, true}};  // (index, is_var)
        while (!queue.empty()) {
            auto [x, is_var] = queue.front();
            queue.pop_front();
            if (is_var) {
                for (int c : var_adj[x]) {
                    if (check_dist[c] == -1) {
                        check_dist[c] = var_dist[x] + 1;
                        queue.push_back({c, false});
                    }
                }
            } else {
                for (int v : check_adj[x]) {
                    if (var_dist[v] == -1) {
                        var_dist[v] = check_dist[x] + 1;
                        queue.push_back({v, true});
                    }
                }
            }
        }
        return check_dist;
    }
};

// Girth plus a gradient for the swap repair: how many times BFS closes a
// shortest cycle, and a sample of edges lying on shortest cycles.
struct GirthStat {
    int girth = std::numeric_limits<int>::max();
    long long closings = 0;
    std::vector<std::pair<int, int>> pool;  // (var, check) closing edges

    bool better_than(const GirthStat& o) const {
        return girth > o.girth || (girth == o.girth && closings < o.closings);
    }
    bool ties(const GirthStat& o) const {
        return girth == o.girth && closings == o.closings;
    }
};

GirthStat girth_signature(const Partial& g) {
    const int vars = static_cast<int>(g.var_adj.size());
    const int total = vars + static_cast<int>(g.check_adj.size());
    GirthStat st;
    std::vector<int> dist(total), par(total), stamp(total, -1), queue;
    queue.reserve(total);
    for (int root = 0; root < total; ++root) {
        queue.clear();
        queue.push_back(root);
        dist[root] = 0;
        par[root] = -1;
        stamp[root] = root;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            // a closure via x has length >= 2 dist(x) + 1
            if (st.girth != std::numeric_limits<int>::max() && 2 * dist[x] >= st.girth) {
                continue;
            }
            const bool is_var = x < vars;
            const auto& nbrs = is_var ? g.var_adj[x] : g.check_adj[x - vars];
            for (int raw : nbrs) {
                int y = is_var ? raw + vars : raw;
                if (stamp[y] != root) {
                    stamp[y] = root;
                    dist[y] = dist[x] + 1;
                    par[y] = x;
                    queue.push_back(y);
                } else if (y != par[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (len < st.girth) {
                        st.girth = len;
                        st.closings = 0;
                        st.pool.clear();
                    }
                    if (len == st.girth) {
                        ++st.closings;
                        if (st.pool.size() < 64) {
                            st.pool.emplace_back(is_var ? x : y, (is_var ? y : x) - vars);
                        }
                    }
                }
            }
        }
    }
    return st;
}

class PegRun {
  public:
    PegRun(const PegSeed& seed, const PegOptions& opt, std::uint64_t rng_seed,
           bool girth_greedy = true)
        : opt_(opt), rng_(rng_seed), girth_greedy_(girth_greedy) {
        const int vars = opt.fixed_size ? opt.total_vars : seed.var_count;
        const int checks = opt.fixed_size ? opt.total_checks : seed.check_count;
        graph_.var_adj.resize(vars);
        graph_.check_adj.resize(checks);
        is_capped_.assign(checks, 0);
        for (int c : opt.capped_checks) {
            is_capped_[c] = 1;
        }
        for (auto [v, c] : seed.edges) {
            graph_.add_edge(v, c);
            locked_.insert({v, c});
        }
    }

    bool run() {
        // Complete existing variables first, then (grow mode) append new ones.
        for (int v = 0; v < static_cast<int>(graph_.var_adj.size()); ++v) {
            if (!place_var(v)) {
                return false;
            }
        }
        if (opt_.fixed_size) {
            return !girth_debt_ || repair();
        }
        while (!grow_complete()) {
            if (static_cast<int>(graph_.var_adj.size()) >= opt_.total_vars) {
                return false;
            }
            graph_.var_adj.emplace_back();
            if (!place_var(static_cast<int>(graph_.var_adj.size()) - 1)) {
                return false;
            }
        }
        return true;
    }

    TannerGraph result() const {
        TannerGraph g(static_cast<int>(graph_.var_adj.size()),
                      static_cast<int>(graph_.check_adj.size()));
        for (int v = 0; v < static_cast<int>(graph_.var_adj.size()); ++v) {
            for (int c : graph_.var_adj[v]) {
                g.add_edge(v, c);
            }
        }
        return g;
    }

  private:
    bool grow_complete() const {
        for (const auto& adj : graph_.check_adj) {
            if (static_cast<int>(adj.size()) < opt_.min_check_degree) {
                return false;
            }
        }
        return true;
    }

    int capped_edges(int v) const {
        int out = 0;
        for (int c : graph_.var_adj[v]) {
            if (c < static_cast<int>(is_capped_.size()) && is_capped_[c]) {
                ++out;
            }
        }
        return out;
    }

    bool place_var(int v) {
        while (static_cast<int>(graph_.var_adj[v].size()) < opt_.gamma) {
            if (!girth_greedy_) {
                // Random restart flavor: degree balance only, repair afterwards.
                if (!fill_edge(v)) {
                    return false;
                }
                girth_debt_ = true;
                continue;
            }
            if (!place_edge(v)) {
                // Fixed mode: take any degree-legal check now, fix girth later.
                if (!opt_.fixed_size || !fill_edge(v)) {
                    return false;
                }
                girth_debt_ = true;
            }
        }
        return true;
    }

    // Degree- and cap-legal placement that ignores the distance rule.
    bool fill_edge(int v) {
        int cap_used = capped_edges(v);
        int best = -1, best_deg = 0, tie_count = 0;
        for (int c = 0; c < static_cast<int>(graph_.check_adj.size()); ++c) {
            int deg = static_cast<int>(graph_.check_adj[c].size());
            if (deg >= opt_.check_cap || graph_.has_edge(v, c)) {
                continue;
            }
            if (opt_.capped_limit >= 0 && is_capped_[c] && cap_used >= opt_.capped_limit) {
                continue;
            }
            if (best == -1 || deg < best_deg) {
                best = c;
                best_deg = deg;
                tie_count = 1;
            } else if (deg == best_deg) {
                ++tie_count;
                if (std::uniform_int_distribution<int>(1, tie_count)(rng_) == 1) {
                    best = c;
                }
            }
        }
        if (best == -1) {
            return false;
        }
        graph_.add_edge(v, best);
        return true;
    }

    bool swap_respects_caps(int v, int from_c, int to_c) const {
        if (opt_.capped_limit < 0) {
            return true;
        }
        int after = capped_edges(v) - (is_capped_[from_c] ? 1 : 0) + (is_capped_[to_c] ? 1 : 0);
        return after <= opt_.capped_limit;
    }

    // Hill climb on (girth, shortest-cycle closings): pull one edge off a
    // shortest cycle, exchange partners with a random edge, keep the move
    // when the signature does not get worse. Seed edges stay untouched.
    bool repair() {
        long long budget = opt_.repair_iters;
        if (budget < 0) {
            budget = 400LL * (graph_.var_adj.size() + graph_.check_adj.size());
        }
        GirthStat st = girth_signature(graph_);
        const int vars = static_cast<int>(graph_.var_adj.size());
        for (long long it = 0; it < budget && st.girth < opt_.girth_target; ++it) {
            if (st.pool.empty()) {
                return false;
            }
            auto [v1, c1] = st.pool[std::uniform_int_distribution<std::size_t>(
                0, st.pool.size() - 1)(rng_)];
            int v2 = std::uniform_int_distribution<int>(0, vars - 1)(rng_);
            if (graph_.var_adj[v2].empty()) {
                continue;
            }
            int c2 = graph_.var_adj[v2][std::uniform_int_distribution<std::size_t>(
                0, graph_.var_adj[v2].size() - 1)(rng_)];
            if (v1 == v2 || c1 == c2 || graph_.has_edge(v1, c2) || graph_.has_edge(v2, c1) ||
                locked_.count({v1, c1}) || locked_.count({v2, c2}) ||
                !swap_respects_caps(v1, c1, c2) || !swap_respects_caps(v2, c2, c1)) {
                continue;
            }
            graph_.drop_edge(v1, c1);
            graph_.drop_edge(v2, c2);
            graph_.add_edge(v1, c2);
            graph_.add_edge(v2, c1);
            GirthStat next = girth_signature(graph_);
            bool keep = next.better_than(st) ||
                        (next.ties(st) && std::uniform_int_distribution<int>(0, 1)(rng_) == 1);
            if (keep) {
                st = std::move(next);
            } else {
                graph_.drop_edge(v1, c2);
                graph_.drop_edge(v2, c1);
                graph_.add_edge(v1, c1);
                graph_.add_edge(v2, c2);
            }
        }
        return st.girth >= opt_.girth_target;
    }

    bool place_edge(int v) {
        auto dist = graph_.check_distances(v);
        int cap_used = capped_edges(v);

        // Deficient checks first (grow mode), then lowest degree, then the
        // farthest girth-safe distance; seeded random among exact ties.
        int best = -1;
        long long best_score = 0;
        int tie_count = 0;
        for (int c = 0; c < static_cast<int>(graph_.check_adj.size()); ++c) {
            int deg = static_cast<int>(graph_.check_adj[c].size());
            if (deg >= opt_.check_cap) {
                continue;
            }
            if (dist[c] != -1 && dist[c] < opt_.girth_target - 1) {
                continue;
            }
            if (opt_.capped_limit >= 0 && is_capped_[c] && cap_used >= opt_.capped_limit) {
                continue;
            }
            bool deficient = deg < opt_.min_check_degree;
            long long far = (dist[c] == -1) ? (1 << 30) : dist[c];
            long long score = (deficient ? 1LL << 62 : 0) - (static_cast<long long>(deg) << 32) +
                              far;
            if (best == -1 || score > best_score) {
                best = c;
                best_score = score;
                tie_count = 1;
            } else if (score == best_score) {
                // Reservoir choice keeps ties uniform without a candidate list.
                ++tie_count;
                if (std::uniform_int_distribution<int>(1, tie_count)(rng_) == 1) {
                    best = c;
                }
            }
        }
        if (best == -1) {
            if (!opt_.fixed_size) {
                graph_.check_adj.emplace_back();
                is_capped_.push_back(0);
                best = static_cast<int>(graph_.check_adj.size()) - 1;
            } else {
                return false;
            }
        }
        graph_.add_edge(v, best);
        return true;
    }

    const PegOptions& opt_;
    Partial graph_;
    std::vector<std::uint8_t> is_capped_;
    std::set<std::pair<int, int>> locked_;
    std::mt19937_64 rng_;
    bool girth_greedy_ = true;
    bool girth_debt_ = false;
};

}  // namespace

std::optional<TannerGraph> peg_complete(const PegSeed& seed, const PegOptions& options) {
    for (int attempt = 0; attempt < options.restarts; ++attempt) {
        // Greedy placement first; later fixed-mode restarts explore random
        // degree-balanced starts, which give the swap repair more room.
        bool greedy = !options.fixed_size || attempt < 2;
        PegRun run(seed, options, options.rng_seed + 0x9e3779b97f4a7c15ULL * attempt, greedy);
        if (run.run()) {
            TannerGraph g = run.result();
            if (girth(g) >= options.girth_target) {
                return g;
            }
        }
    }
    return std::nullopt;
}

TannerGraph peg_construct(int n, int gamma, int rho, int girth_target, std::uint64_t seed) {
    if (n < 1 || gamma < 1 || rho < 1) {
        throw std::invalid_argument("peg_construct: degrees and size must be positive");
    }
    if (girth_target % 2 != 0 || girth_target < 4) {
        throw std::invalid_argument("peg_construct: girth target must be even and >= 4");
    }
    if (static_cast<long long>(n) * gamma % rho != 0) {
        throw std::invalid_argument("peg_construct: n*gamma = " + std::to_string(1LL * n * gamma) +
                                    " is not divisible by rho = " + std::to_string(rho));
    }
    const long long m = static_cast<long long>(n) * gamma / rho;

    // Moore-type counting: girth >= 2g' forces the depth-(g'-1) neighborhood
    // tree of any node to be duplicate-free, so its per-side node counts are
    // lower bounds on n and m.
    const int g_prime = girth_target / 2;
    for (int root_is_var = 0; root_is_var < 2; ++root_is_var) {
        long long vars = root_is_var, checks = 1 - root_is_var, frontier = 1;
        bool var_level = root_is_var;
        for (int depth = 1; depth <= g_prime - 1; ++depth) {
            int root_degree = var_level ? gamma : rho;
            frontier *= (depth == 1) ? root_degree : (var_level ? gamma - 1 : rho - 1);
            var_level = !var_level;
            (var_level ? vars : checks) += frontier;
            if (vars > n || checks > m) {
                throw std::invalid_argument(
                    "peg_construct: girth " + std::to_string(girth_target) +
                    " infeasible for these parameters: a single depth-" + std::to_string(depth) +
                    " neighborhood already needs " + std::to_string(vars) + " variables and " +
                    std::to_string(checks) + " checks (have " + std::to_string(n) + ", " +
                    std::to_string(m) + ")");
            }
        }
    }

    PegOptions opt;
    opt.gamma = gamma;
    opt.check_cap = rho;
    opt.girth_target = girth_target;
    opt.rng_seed = seed;
    opt.fixed_size = true;
    opt.total_vars = n;
    opt.total_checks = static_cast<int>(m);
    auto got = peg_complete(PegSeed{}, opt);
    if (!got) {
        throw std::runtime_error("peg_construct: no girth-" + std::to_string(girth_target) +
                                 " completion found within the retry budget");
    }
    return *got;
}

}  // namespace tga
