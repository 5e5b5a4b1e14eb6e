#include "tga/bitflip.hpp"

#include <stdexcept>
#include <unordered_set>

namespace tga {

namespace {

void check_length(const TannerGraph& g, const BitWord& x) {
    if (static_cast<int>(x.size()) != g.var_count()) {
        throw std::invalid_argument("bit word length does not match variable count");
    }
}

// FNV-1a over the word, for the seen-state set.
std::uint64_t hash_word(const BitWord& x) {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto b : x) {
        h = (h ^ b) * 1099511628211ULL;
    }
    return h;
}

struct SeenStates {
    // Hash set with full-word confirmation lists; collisions resolved exactly.
    std::unordered_set<std::uint64_t> hashes;
    std::vector<BitWord> words;

    bool insert(const BitWord& x) {  // returns false if already present
        if (hashes.insert(hash_word(x)).second) {
            words.push_back(x);
            return true;
        }
        for (const auto& w : words) {
            if (w == x) {
                return false;
            }
        }
        words.push_back(x);
        return true;
    }
};

}  // namespace

const char* to_string(DecodeStatus status) {
    switch (status) {
        case DecodeStatus::codeword: return "codeword";
        case DecodeStatus::fixed_point: return "fixed_point";
        case DecodeStatus::oscillation: return "oscillation";
        case DecodeStatus::iteration_cap: return "iteration_cap";
    }
    return "?";
}

std::vector<std::uint8_t> syndrome(const TannerGraph& g, const BitWord& x) {
    check_length(g, x);
    std::vector<std::uint8_t> s(g.check_count(), 0);
    for (int c = 0; c < g.check_count(); ++c) {
        std::uint8_t parity = 0;
        for (int v : g.check_neighbors(c)) {
            parity ^= x[v];
        }
        s[c] = parity;
    }
    return s;
}

BitWord parallel_bf_round(const TannerGraph& g, const BitWord& x) {
    check_length(g, x);
    auto s = syndrome(g, x);
    BitWord out = x;
    for (int v = 0; v < g.var_count(); ++v) {
        int unsat = 0;
        for (int c : g.var_neighbors(v)) {
            unsat += s[c];
        }
        if (2 * unsat > g.var_degree(v)) {
            out[v] ^= 1;
        }
    }
    return out;
}

DecodeOutcome parallel_bf_decode(const TannerGraph& g, BitWord x, int max_rounds) {
    check_length(g, x);
    if (max_rounds < 1) {
        throw std::invalid_argument("parallel_bf_decode: need max_rounds >= 1");
    }
    DecodeOutcome out;
    SeenStates seen;
    seen.insert(x);
    for (int round = 0; round < max_rounds; ++round) {
        // Terminal checks consider the current word before spending a round.
        auto s = syndrome(g, x);
        bool clean = true;
        for (auto b : s) {
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

        BitWord next = parallel_bf_round(g, x);
        int flips = 0;
        for (int v = 0; v < g.var_count(); ++v) {
            flips += next[v] != x[v];
        }
        ++out.rounds_used;
        out.per_round_flips.push_back(flips);
        if (flips == 0) {
            out.status = DecodeStatus::fixed_point;
            out.final_word = std::move(x);
            return out;
        }
        if (!seen.insert(next)) {
            out.status = DecodeStatus::oscillation;
            out.final_word = std::move(next);
            return out;
        }
        x = std::move(next);
    }
    auto s = syndrome(g, x);
    bool clean = true;
    for (auto b : s) {
        if (b) {
            clean = false;
            break;
        }
    }
    out.status = clean ? DecodeStatus::codeword : DecodeStatus::iteration_cap;
    out.final_word = std::move(x);
    return out;
}

DecodeOutcome serial_bf_decode(const TannerGraph& g, BitWord x, int max_passes) {
    check_length(g, x);
    if (max_passes < 1) {
        throw std::invalid_argument("serial_bf_decode: need max_passes >= 1");
    }
    DecodeOutcome out;
    SeenStates seen;
    seen.insert(x);
    for (int pass = 0; pass < max_passes; ++pass) {
        auto s = syndrome(g, x);
        bool clean = true;
        for (auto b : s) {
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

        int flips = 0;
        for (int v = 0; v < g.var_count(); ++v) {
            int unsat = 0;
            for (int c : g.var_neighbors(v)) {
                unsat += s[c];
            }
            if (2 * unsat > g.var_degree(v)) {
                x[v] ^= 1;
                ++flips;
                for (int c : g.var_neighbors(v)) {
                    s[c] ^= 1;  // keep the syndrome current within the pass
                }
            }
        }
        ++out.rounds_used;
        out.per_round_flips.push_back(flips);
        if (flips == 0) {
            out.status = DecodeStatus::fixed_point;
            out.final_word = std::move(x);
            return out;
        }
        if (!seen.insert(x)) {
            out.status = DecodeStatus::oscillation;
            out.final_word = x;
            return out;
        }
    }
    auto s = syndrome(g, x);
    bool clean = true;
    for (auto b : s) {
        if (b) {
            clean = false;
            break;
        }
    }
    out.status = clean ? DecodeStatus::codeword : DecodeStatus::iteration_cap;
    out.final_word = std::move(x);
    return out;
}

}  // namespace tga
