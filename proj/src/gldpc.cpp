#include "tga/gldpc.hpp"

#include <stdexcept>
#include <unordered_set>

namespace tga {

namespace {

void check_length(const GldpcCode& code, const BitWord& x) {
    if (static_cast<int>(x.size()) != code.graph.var_count()) {
        throw std::invalid_argument("bit word length does not match variable count");
    }
}

// Flip-message counts per variable for one round, shared by the round and
// the confusion classifier.
std::vector<int> flip_messages(const GldpcCode& code, const BitWord& x,
                               std::vector<std::uint32_t>* decoded_diff) {
    std::vector<int> messages(code.graph.var_count(), 0);
    if (decoded_diff) {
        decoded_diff->assign(code.graph.check_count(), 0);
    }
    for (int c = 0; c < code.graph.check_count(); ++c) {
        std::uint32_t y = local_word(code, c, x);
        auto decoded = code.subcode.bounded_distance_decode(y);
        if (!decoded) {
            continue;
        }
        std::uint32_t diff = y ^ *decoded;
        if (decoded_diff) {
            (*decoded_diff)[c] = diff;
        }
        const auto& nbrs = code.graph.check_neighbors(c);
        for (int j = 0; j < static_cast<int>(nbrs.size()); ++j) {
            if (diff >> j & 1) {
                ++messages[nbrs[j]];
            }
        }
    }
    return messages;
}

}  // namespace

GldpcCode gldpc_assemble(TannerGraph graph, SubCode subcode) {
    for (int c = 0; c < graph.check_count(); ++c) {
        if (graph.check_degree(c) != subcode.block_length()) {
            throw std::invalid_argument("gldpc_assemble: check " + std::to_string(c) +
                                        " has degree " + std::to_string(graph.check_degree(c)) +
                                        ", sub-code block length is " +
                                        std::to_string(subcode.block_length()));
        }
    }
    if (!subcode.is_codeword(0)) {
        throw std::logic_error("gldpc_assemble: sub-code does not contain the zero word");
    }
    return GldpcCode{std::move(graph), std::move(subcode)};
}

std::uint32_t local_word(const GldpcCode& code, int check, const BitWord& x) {
    const auto& nbrs = code.graph.check_neighbors(check);
    std::uint32_t y = 0;
    for (int j = 0; j < static_cast<int>(nbrs.size()); ++j) {
        y |= static_cast<std::uint32_t>(x[nbrs[j]]) << j;
    }
    return y;
}

std::vector<std::uint8_t> gldpc_syndrome(const GldpcCode& code, const BitWord& x) {
    check_length(code, x);
    std::vector<std::uint8_t> s(code.graph.check_count(), 0);
    for (int c = 0; c < code.graph.check_count(); ++c) {
        s[c] = code.subcode.is_codeword(local_word(code, c, x)) ? 0 : 1;
    }
    return s;
}

BitWord gldpc_round(const GldpcCode& code, const BitWord& x) {
    check_length(code, x);
    auto messages = flip_messages(code, x, nullptr);
    BitWord out = x;
    for (int v = 0; v < code.graph.var_count(); ++v) {
        if (2 * messages[v] > code.graph.var_degree(v)) {
            out[v] ^= 1;
        }
    }
    return out;
}

DecodeOutcome gldpc_decode(const GldpcCode& code, BitWord x, int max_rounds) {
    check_length(code, x);
    if (max_rounds < 1) {
        throw std::invalid_argument("gldpc_decode: need max_rounds >= 1");
    }
    DecodeOutcome out;
    std::unordered_set<std::string> seen;
    auto key = [](const BitWord& w) { return std::string(w.begin(), w.end()); };
    seen.insert(key(x));
    for (int round = 0; round < max_rounds; ++round) {
        bool clean = true;
        for (auto b : gldpc_syndrome(code, x)) {
            if (b) {
                clean = false;
                break;
            }
        }
        if (clean) {
            out.status = DecodeStatus::codeword;
            out.final_word = std::move(x);
            return out;
        }
        BitWord next = gldpc_round(code, x);
        int flips = 0;
        for (int v = 0; v < code.graph.var_count(); ++v) {
            flips += next[v] != x[v];
        }
        ++out.rounds_used;
        out.per_round_flips.push_back(flips);
        if (flips == 0) {
            out.status = DecodeStatus::fixed_point;
            out.final_word = std::move(x);
            return out;
        }
        if (!seen.insert(key(next)).second) {
            out.status = DecodeStatus::oscillation;
            out.final_word = std::move(next);
            return out;
        }
        x = std::move(next);
    }
    bool clean = true;
    for (auto b : gldpc_syndrome(code, x)) {
        if (b) {
            clean = false;
            break;
        }
    }
    out.status = clean ? DecodeStatus::codeword : DecodeStatus::iteration_cap;
    out.final_word = std::move(x);
    return out;
}

std::vector<int> confused_checks(const GldpcCode& code, const BitWord& x, const BitWord& reference) {
    check_length(code, x);
    check_length(code, reference);
    std::vector<int> out;
    for (int c = 0; c < code.graph.check_count(); ++c) {
        std::uint32_t y = local_word(code, c, x);
        std::uint32_t ref = local_word(code, c, reference);
        auto decoded = code.subcode.bounded_distance_decode(y);
        // Messages the check emits (none on failure) vs the ones it should:
        // exactly the positions where the state differs from the reference.
        std::uint32_t sent = decoded ? (y ^ *decoded) : 0;
        std::uint32_t needed = y ^ ref;
        if (sent != needed) {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace tga
