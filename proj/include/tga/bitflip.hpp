#pragma once

#include <cstdint>
#include <vector>

#include "tga/bitword.hpp"
#include "tga/tanner_graph.hpp"

namespace tga {

enum class DecodeStatus {
    codeword,       // zero syndrome
    fixed_point,    // nonzero syndrome, one more round changes nothing
    oscillation,    // a previously visited word recurred
    iteration_cap,  // max_rounds exhausted without any of the above
};

const char* to_string(DecodeStatus status);

struct DecodeOutcome {
    BitWord final_word;
    DecodeStatus status;
    int rounds_used = 0;
    std::vector<int> per_round_flips;
};

/// Bit c is 1 iff check c is unsatisfied (odd parity over its neighbors).
std::vector<std::uint8_t> syndrome(const TannerGraph& g, const BitWord& x);

/// One synchronous round: flip exactly the variables sitting in strictly
/// more unsatisfied than satisfied checks. A tie (exactly half unsatisfied)
/// never flips. All decisions read the pre-round word.
BitWord parallel_bf_round(const TannerGraph& g, const BitWord& x);

/// Iterates parallel rounds until codeword, fixed point, oscillation, or cap.
DecodeOutcome parallel_bf_decode(const TannerGraph& g, BitWord x, int max_rounds);

/// Serial sweep in ascending variable order, flipping immediately when a
/// variable is currently strictly majority-unsatisfied; one pass counts as
/// one round in the outcome.
DecodeOutcome serial_bf_decode(const TannerGraph& g, BitWord x, int max_passes);

}  // namespace tga
