#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tga/bitflip.hpp"
#include "tga/gldpc.hpp"
#include "tga/rational.hpp"
#include "tga/tanner_graph.hpp"

namespace tga {

enum class SweepAlgorithm { parallel, serial, gldpc };

const char* to_string(SweepAlgorithm algorithm);

struct WeightSweep {
    int weight;
    unsigned long long patterns_tried = 0;
    unsigned long long failures = 0;
    std::optional<NodeSet> first_failure;  // colex-least failing pattern
};

struct SweepReport {
    std::string code_id;
    SweepAlgorithm algorithm;
    int w_max = 0;
    std::optional<Rational> guarantee_value;  // bounds-module threshold, when applicable
    long long guarantee_floor = -1;
    std::vector<WeightSweep> per_weight;
    bool consistent = true;  // zero failures at weights <= guarantee_floor
    unsigned long long patterns_total = 0;
    std::string sample_rng;  // e.g. "mt19937_64(seed=7)"; empty = exhaustive
};

struct SweepMode {
    bool exhaustive = true;
    unsigned long long samples = 0;  // per weight, when sampling
    std::uint64_t seed = 1;
};

/// Decodes error patterns of weight 1..w_max against the all-zero codeword,
/// colexicographically, either exhaustively or by sampling. A pattern fails
/// iff decoding does not return the zero word. The guarantee line comes from
/// ldpc_guarantee when the graph is gamma >= 4 left-regular with finite even
/// girth, and is left unset otherwise.
SweepReport sweep_guarantee(const TannerGraph& g, SweepAlgorithm algorithm, int w_max,
                            const SweepMode& mode = {}, int max_rounds = 100,
                            unsigned long long budget = 100000000ULL, int threads = 1,
                            const std::string& code_id = "");

/// GLDPC flavor: patterns run through gldpc_decode; the guarantee is
/// gldpc_guarantee(gamma, t, girth) with t the sub-code correction radius.
SweepReport sweep_guarantee(const GldpcCode& code, int w_max, const SweepMode& mode = {},
                            int max_rounds = 100, unsigned long long budget = 100000000ULL,
                            int threads = 1, const std::string& code_id = "");

}  // namespace tga
