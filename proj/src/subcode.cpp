#include "tga/subcode.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tga {

SubCode SubCode::from_generators(int block_length, const std::vector<std::uint32_t>& rows) {
    if (block_length < 1 || block_length > 16) {
        throw std::invalid_argument("subcode: block length must be in [1, 16]");
    }
    SubCode s;
    s.block_length_ = block_length;
    const std::uint32_t mask = (block_length == 32) ? ~0u : ((1u << block_length) - 1);
    for (auto r : rows) {
        if (r & ~mask) {
            throw std::invalid_argument("subcode: generator row wider than block length");
        }
    }

    // Span of the rows: repeated doubling keeps this O(2^k).
    std::vector<std::uint32_t> words{0};
    for (auto r : rows) {
        std::vector<std::uint32_t> next = words;
        for (auto w : words) {
            next.push_back(w ^ r);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        words.swap(next);
    }
    s.codewords_ = std::move(words);
    s.dimension_ = std::bit_width(s.codewords_.size()) - 1;

    s.min_distance_ = block_length + 1;
    for (auto w : s.codewords_) {
        if (w != 0) {
            s.min_distance_ = std::min(s.min_distance_, std::popcount(w));
        }
    }
    if (s.codewords_.size() == 1) {
        s.min_distance_ = block_length + 1;  // trivial code; every radius works
    }
    s.radius_ = (s.min_distance_ - 1) / 2;

    // Precompute the decode map when the table stays small.
    std::uint64_t table_cost =
        (std::uint64_t{1} << block_length) * s.codewords_.size();
    if (table_cost <= (std::uint64_t{1} << 26)) {
        s.decode_table_.assign(std::uint64_t{1} << block_length, -1);
        for (std::uint32_t y = 0; y <= mask; ++y) {
            int hits = 0;
            std::uint32_t found = 0;
            for (auto w : s.codewords_) {
                if (std::popcount(y ^ w) <= s.radius_) {
                    ++hits;
                    found = w;
                }
            }
            if (hits == 1) {
                s.decode_table_[y] = static_cast<std::int32_t>(found);
            }
        }
    }
    return s;
}

bool SubCode::is_codeword(std::uint32_t word) const {
    return std::binary_search(codewords_.begin(), codewords_.end(), word);
}

std::optional<std::uint32_t> SubCode::bounded_distance_decode(std::uint32_t y) const {
    if (!decode_table_.empty()) {
        std::int32_t v = decode_table_[y];
        if (v < 0) {
            return std::nullopt;
        }
        return static_cast<std::uint32_t>(v);
    }
    int hits = 0;
    std::uint32_t found = 0;
    for (auto w : codewords_) {
        if (std::popcount(y ^ w) <= radius_) {
            ++hits;
            found = w;
        }
    }
    if (hits != 1) {
        return std::nullopt;
    }
    return found;
}

}  // namespace tga
