#include "tga/expansion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

#include "tga/bounds.hpp"
#include "tga/combinatorics.hpp"
#include "tga/errors.hpp"
#include "tga/girth.hpp"

namespace tga {

namespace {

struct SizeMin {
    long long min_neighbors = -1;  // -1 = no subset of this size seen
    NodeSet witness;

    void offer(long long count, const NodeSet& set) {
        if (min_neighbors == -1 || count < min_neighbors ||
            (count == min_neighbors && set < witness)) {
            min_neighbors = count;
            witness = set;
        }
    }

    void merge(const SizeMin& other) {
        if (other.min_neighbors != -1) {
            offer(other.min_neighbors, other.witness);
        }
    }
};

// Packed per-variable check-neighbor bitsets.
struct NeighborBits {
    int words;
    std::vector<std::uint64_t> bits;  // var * words

    NeighborBits(const TannerGraph& g)
        : words((g.check_count() + 63) / 64), bits(static_cast<size_t>(g.var_count()) * words, 0) {
        for (int v = 0; v < g.var_count(); ++v) {
            for (int c : g.var_neighbors(v)) {
                bits[static_cast<size_t>(v) * words + c / 64] |= std::uint64_t{1} << (c % 64);
            }
        }
    }
};

void enumerate_from(const TannerGraph& g, const NeighborBits& nb, int lead, int k_max,
                    std::vector<SizeMin>& mins) {
    const int n = g.var_count();
    const int w = nb.words;
    std::vector<int> chosen;
    chosen.reserve(k_max);
    // DFS stack of partial unions; level d holds the union over chosen[0..d].
    std::vector<std::uint64_t> unions(static_cast<size_t>(k_max) * w, 0);
    std::vector<std::uint64_t> scratch(w, 0);

    struct Frame {
        int var;
        int depth;
    };
    std::vector<Frame> stack{{lead, 0}};
    while (!stack.empty()) {
        auto [var, depth] = stack.back();
        stack.pop_back();
        chosen.resize(depth);
        chosen.push_back(var);

        std::uint64_t* level = &unions[static_cast<size_t>(depth) * w];
        const std::uint64_t* prev = depth ? &unions[static_cast<size_t>(depth - 1) * w] : nullptr;
        const std::uint64_t* own = &nb.bits[static_cast<size_t>(var) * w];
        long long count = 0;
        for (int i = 0; i < w; ++i) {
            level[i] = own[i] | (prev ? prev[i] : 0);
            count += std::popcount(level[i]);
        }
        mins[depth + 1].offer(count, chosen);

        if (depth + 1 < k_max) {
            // Push in reverse so smaller extensions are explored first and
            // witnesses come out lexicographically least.
            for (int next = n - 1; next > var; --next) {
                stack.push_back({next, depth + 1});
            }
        }
    }
}

ExpansionReport run_report(const TannerGraph& g, int k_max, const Rational& delta, bool strict,
                           unsigned long long budget, int threads) {
    if (k_max < 1 || k_max > g.var_count()) {
        throw std::invalid_argument("verify_expansion: k_max must be in [1, n_vars]");
    }
    BigInt total = pattern_count(g.var_count(), k_max);
    if (total > budget) {
        throw BudgetError("verify_expansion: subset count exceeds budget", total.str());
    }

    NeighborBits nb(g);
    const int n = g.var_count();
    threads = std::max(1, std::min(threads, n));
    std::vector<std::vector<SizeMin>> per_thread(threads, std::vector<SizeMin>(k_max + 1));
    {
        std::vector<std::thread> pool;
        for (int ti = 0; ti < threads; ++ti) {
            pool.emplace_back([&, ti] {
                for (int lead = ti; lead < n; lead += threads) {
                    enumerate_from(g, nb, lead, k_max, per_thread[ti]);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    std::vector<SizeMin> mins(k_max + 1);
    for (const auto& part : per_thread) {
        for (int s = 1; s <= k_max; ++s) {
            mins[s].merge(part[s]);
        }
    }

    ExpansionReport report;
    report.k_max = k_max;
    report.delta = delta;
    report.strict = strict;
    report.subsets_examined = total;
    for (int s = 1; s <= k_max; ++s) {
        ExpansionRow row;
        row.size = s;
        row.min_neighbors = mins[s].min_neighbors;
        row.witness = mins[s].witness;
        row.required = delta * s;
        Rational have(row.min_neighbors);
        row.ok = strict ? have > row.required : have >= row.required;
        report.pass = report.pass && row.ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace

int neighborhood_size(const TannerGraph& g, const NodeSet& s) {
    std::vector<std::uint8_t> seen(g.check_count(), 0);
    int count = 0;
    for (int v : s) {
        if (v < 0 || v >= g.var_count()) {
            throw std::out_of_range("neighborhood_size: variable index out of range");
        }
        for (int c : g.var_neighbors(v)) {
            if (!seen[c]) {
                seen[c] = 1;
                ++count;
            }
        }
    }
    return count;
}

ExpansionReport verify_expansion(const TannerGraph& g, int k_max, const Rational& delta,
                                 bool strict, unsigned long long budget, int threads) {
    return run_report(g, k_max, delta, strict, budget, threads);
}

ExpansionReport verify_theorem1(const TannerGraph& g, unsigned long long budget, int threads) {
    auto gamma = g.var_regularity();
    if (!gamma || *gamma < 4) {
        throw std::invalid_argument("verify_theorem1: graph must be gamma >= 4 left-regular");
    }
    int girth_2gp = girth(g);
    if (girth_2gp == kInfiniteGirth) {
        throw std::invalid_argument("verify_theorem1: acyclic graph has no girth parameter");
    }
    int g_prime = girth_2gp / 2;
    long long k_max = moore_bound(Rational(*gamma, 2), g_prime).floor_int;
    k_max = std::min<long long>(k_max, g.var_count());
    return run_report(g, static_cast<int>(k_max), Rational(3 * *gamma, 4), true, budget, threads);
}

ExpansionReport verify_theorem6(const TannerGraph& g, int t, unsigned long long budget,
                                int threads) {
    auto gamma = g.var_regularity();
    if (!gamma) {
        throw std::invalid_argument("verify_theorem6: graph must be left-regular");
    }
    if (t < 1) {
        throw std::invalid_argument("verify_theorem6: need t >= 1");
    }
    Rational d = Rational(*gamma) * t / (t + 1);
    if (d < 2) {
        throw std::invalid_argument("verify_theorem6: need gamma*t/(t+1) >= 2");
    }
    int girth_2gp = girth(g);
    if (girth_2gp == kInfiniteGirth) {
        throw std::invalid_argument("verify_theorem6: acyclic graph has no girth parameter");
    }
    int g_prime = girth_2gp / 2;
    long long k_max = moore_bound(d, g_prime).floor_int;
    k_max = std::min<long long>(k_max, g.var_count());
    Rational delta = Rational(*gamma) * (t + 2) / (2 * (t + 1));
    return run_report(g, static_cast<int>(k_max), delta, true, budget, threads);
}

}  // namespace tga
