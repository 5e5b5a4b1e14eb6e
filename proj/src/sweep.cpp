#include "tga/sweep.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <thread>

#include "tga/bounds.hpp"
#include "tga/combinatorics.hpp"
#include "tga/errors.hpp"
#include "tga/girth.hpp"

namespace tga {

namespace {

using DecodeFn = std::function<bool(const NodeSet&)>;  // true = decoded to zero

// Exhaustive scan of one weight class, partitioned by colex rank ranges.
WeightSweep sweep_weight_exhaustive(int n, int weight, const DecodeFn& decodes_to_zero,
                                    int threads) {
    WeightSweep out;
    out.weight = weight;
    const std::uint64_t total = static_cast<std::uint64_t>(binomial(n, weight));
    out.patterns_tried = total;
    threads = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(
                                                     total, std::thread::hardware_concurrency()
                                                                ? std::thread::hardware_concurrency()
                                                                : 1))));

    struct Part {
        unsigned long long failures = 0;
        std::optional<std::uint64_t> first_rank;
        std::optional<NodeSet> first_failure;
    };
    std::vector<Part> parts(threads);
    std::vector<std::thread> pool;
    for (int ti = 0; ti < threads; ++ti) {
        pool.emplace_back([&, ti] {
            std::uint64_t lo = total * ti / threads;
            std::uint64_t hi = total * (ti + 1) / threads;
            if (lo >= hi) {
                return;
            }
            std::vector<int> combo = colex_unrank(lo, n, weight);
            for (std::uint64_t rank = lo; rank < hi; ++rank) {
                if (!decodes_to_zero(combo)) {
                    ++parts[ti].failures;
                    if (!parts[ti].first_rank) {
                        parts[ti].first_rank = rank;
                        parts[ti].first_failure = combo;
                    }
                }
                if (rank + 1 < hi) {
                    colex_next(combo, n);
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& part : parts) {
        out.failures += part.failures;
        if (part.first_rank &&
            (!out.first_failure || *part.first_rank < colex_rank(*out.first_failure))) {
            out.first_failure = part.first_failure;
        }
    }
    return out;
}

WeightSweep sweep_weight_sampled(int n, int weight, const DecodeFn& decodes_to_zero,
                                 unsigned long long samples, std::mt19937_64& rng) {
    WeightSweep out;
    out.weight = weight;
    out.patterns_tried = samples;
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) {
        pool[i] = i;
    }
    for (unsigned long long s = 0; s < samples; ++s) {
        // Partial Fisher-Yates for a uniform weight-sized subset.
        for (int i = 0; i < weight; ++i) {
            int j = static_cast<int>(
                std::uniform_int_distribution<std::uint64_t>(i, n - 1)(rng));
            std::swap(pool[i], pool[j]);
        }
        NodeSet pattern(pool.begin(), pool.begin() + weight);
        std::sort(pattern.begin(), pattern.end());
        if (!decodes_to_zero(pattern)) {
            ++out.failures;
            if (!out.first_failure ||
                colex_rank(pattern) < colex_rank(*out.first_failure)) {
                out.first_failure = pattern;
            }
        }
    }
    return out;
}

SweepReport run_sweep(int n, SweepAlgorithm algorithm, int w_max, const SweepMode& mode,
                      unsigned long long budget, int threads, const std::string& code_id,
                      std::optional<BoundValue> guarantee, const DecodeFn& decodes_to_zero) {
    if (w_max < 0 || w_max > n) {
        throw std::invalid_argument("sweep_guarantee: w_max must be in [0, n_vars]");
    }
    SweepReport report;
    report.code_id = code_id;
    report.algorithm = algorithm;
    report.w_max = w_max;
    if (guarantee) {
        report.guarantee_value = guarantee->value;
        report.guarantee_floor = guarantee->floor_int;
    }

    if (mode.exhaustive) {
        BigInt total = pattern_count(n, w_max);
        if (total > budget) {
            throw BudgetError("sweep_guarantee: pattern count exceeds budget", total.str());
        }
    } else {
        report.sample_rng = "mt19937_64(seed=" + std::to_string(mode.seed) + ")";
    }

    std::mt19937_64 rng(mode.seed);
    for (int w = 1; w <= w_max; ++w) {
        WeightSweep row = mode.exhaustive
                              ? sweep_weight_exhaustive(n, w, decodes_to_zero, threads)
                              : sweep_weight_sampled(n, w, decodes_to_zero, mode.samples, rng);
        report.patterns_total += row.patterns_tried;
        if (row.failures > 0 && report.guarantee_floor >= 0 && w <= report.guarantee_floor) {
            report.consistent = false;
        }
        report.per_weight.push_back(std::move(row));
    }
    return report;
}

}  // namespace

const char* to_string(SweepAlgorithm algorithm) {
    switch (algorithm) {
        case SweepAlgorithm::parallel: return "parallel";
        case SweepAlgorithm::serial: return "serial";
        case SweepAlgorithm::gldpc: return "gldpc";
    }
    return "?";
}

SweepReport sweep_guarantee(const TannerGraph& g, SweepAlgorithm algorithm, int w_max,
                            const SweepMode& mode, int max_rounds, unsigned long long budget,
                            int threads, const std::string& code_id) {
    if (algorithm == SweepAlgorithm::gldpc) {
        throw std::invalid_argument("sweep_guarantee: gldpc sweeps need the GldpcCode overload");
    }
    std::optional<BoundValue> guarantee;
    auto gamma = g.var_regularity();
    int girth_val = girth(g);
    if (gamma && *gamma >= 4 && girth_val != kInfiniteGirth && girth_val % 2 == 0 &&
        girth_val >= 6) {
        guarantee = ldpc_guarantee(*gamma, girth_val);
    }
    auto decodes_to_zero = [&](const NodeSet& pattern) {
        BitWord x = word_from_support(g.var_count(), pattern);
        DecodeOutcome outcome = algorithm == SweepAlgorithm::parallel
                                    ? parallel_bf_decode(g, x, max_rounds)
                                    : serial_bf_decode(g, x, max_rounds);
        return outcome.status == DecodeStatus::codeword && is_zero(outcome.final_word);
    };
    return run_sweep(g.var_count(), algorithm, w_max, mode, budget, threads, code_id, guarantee,
                     decodes_to_zero);
}

SweepReport sweep_guarantee(const GldpcCode& code, int w_max, const SweepMode& mode,
                            int max_rounds, unsigned long long budget, int threads,
                            const std::string& code_id) {
    std::optional<BoundValue> guarantee;
    auto gamma = code.graph.var_regularity();
    int girth_val = girth(code.graph);
    if (gamma && girth_val != kInfiniteGirth && girth_val % 2 == 0 && girth_val >= 6) {
        Rational d = Rational(*gamma) * code.subcode.radius() / (code.subcode.radius() + 1);
        if (d >= 2) {
            guarantee = gldpc_guarantee(*gamma, code.subcode.radius(), girth_val);
        }
    }
    auto decodes_to_zero = [&](const NodeSet& pattern) {
        BitWord x = word_from_support(code.graph.var_count(), pattern);
        DecodeOutcome outcome = gldpc_decode(code, x, max_rounds);
        return outcome.status == DecodeStatus::codeword && is_zero(outcome.final_word);
    };
    return run_sweep(code.graph.var_count(), SweepAlgorithm::gldpc, w_max, mode, budget, threads,
                     code_id, guarantee, decodes_to_zero);
}

}  // namespace tga
