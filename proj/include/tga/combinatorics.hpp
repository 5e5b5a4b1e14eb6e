#pragma once

#include <cstdint>
#include <vector>

#include "tga/rational.hpp"

namespace tga {

/// Exact binomial coefficient.
BigInt binomial(int n, int k);

/// Sum of C(n, w) for 1 <= w <= w_max — the pattern count of a sweep.
BigInt pattern_count(int n, int w_max);

/// Combinations of {0..n-1} of fixed size in colexicographic order, i.e.
/// ordered by their largest differing element. The first combination is
/// {0, 1, ..., k-1}; ranks follow the combinatorial number system
/// rank(c) = sum_j C(c_j, j+1).
///
/// Advances `c` in place; returns false when the last combination (the k
/// largest indices) was already reached.
bool colex_next(std::vector<int>& c, int n);

/// Combination of size k over {0..n-1} with the given colex rank.
std::vector<int> colex_unrank(std::uint64_t rank, int n, int k);

std::uint64_t colex_rank(const std::vector<int>& c);

}  // namespace tga
