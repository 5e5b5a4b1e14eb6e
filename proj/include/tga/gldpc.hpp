#pragma once

#include <cstdint>
#include <vector>

#include "tga/bitflip.hpp"
#include "tga/bitword.hpp"
#include "tga/subcode.hpp"
#include "tga/tanner_graph.hpp"

namespace tga {

/// Generalized LDPC code: every check constrains its ordered neighborhood
/// (v_{b(i,1)}, ..., v_{b(i,rho)}) to be a codeword of one shared sub-code.
/// The j-th neighbor in the check's adjacency list carries coordinate j.
struct GldpcCode {
    TannerGraph graph;
    SubCode subcode;
};

/// Validates degrees against the sub-code block length and binds the pair.
GldpcCode gldpc_assemble(TannerGraph graph, SubCode subcode);

/// Local word seen by a check: bit j is the value of its j-th neighbor.
std::uint32_t local_word(const GldpcCode& code, int check, const BitWord& x);

/// Bit c is 1 iff check c's neighborhood is not a sub-code codeword.
std::vector<std::uint8_t> gldpc_syndrome(const GldpcCode& code, const BitWord& x);

/// One synchronous round: every check bounded-distance decodes its local
/// word and, on success, sends a flip message to each neighbor whose bit
/// differs from the decoded codeword (failed decodes send nothing); then
/// every variable flips iff it collected strictly more than d(v)/2 messages.
BitWord gldpc_round(const GldpcCode& code, const BitWord& x);

DecodeOutcome gldpc_decode(const GldpcCode& code, BitWord x, int max_rounds);

/// Checks that mis-serve the reference word at state x: a check is confused
/// iff it sends a flip message to a variable that already agrees with the
/// reference, or withholds one from a variable that does not, or both.
std::vector<int> confused_checks(const GldpcCode& code, const BitWord& x, const BitWord& reference);

}  // namespace tga
