#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tga {

/// Short binary linear code used at a generalized check node. Block length is
/// capped at 16 so the full codeword list can be enumerated; words are stored
/// as bitmasks with coordinate j in bit j.
class SubCode {
  public:
    /// Builds the linear span of the given generator rows. Dependent or
    /// duplicate rows are tolerated; the dimension reflects the span.
    static SubCode from_generators(int block_length, const std::vector<std::uint32_t>& rows);

    int block_length() const { return block_length_; }
    int dimension() const { return dimension_; }
    int min_distance() const { return min_distance_; }
    /// Correction radius t = floor((d_min - 1) / 2).
    int radius() const { return radius_; }

    /// Sorted list of all codewords (always contains 0).
    const std::vector<std::uint32_t>& codewords() const { return codewords_; }
    bool is_codeword(std::uint32_t word) const;

    /// Unique codeword within Hamming distance radius() of y, if any.
    /// Failure (no codeword in the ball, or a non-unique nearest) is a value.
    std::optional<std::uint32_t> bounded_distance_decode(std::uint32_t y) const;

  private:
    int block_length_ = 0;
    int dimension_ = 0;
    int min_distance_ = 0;
    int radius_ = 0;
    std::vector<std::uint32_t> codewords_;
    std::vector<std::int32_t> decode_table_;  // y -> codeword, -1 = failure; empty if too large
};

}  // namespace tga
