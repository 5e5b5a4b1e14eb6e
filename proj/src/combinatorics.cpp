#include "tga/combinatorics.hpp"

#include <stdexcept>

namespace tga {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

BigInt pattern_count(int n, int w_max) {
    BigInt total = 0;
    for (int w = 1; w <= w_max; ++w) {
        total += binomial(n, w);
    }
    return total;
}

bool colex_next(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
        int cap = (i + 1 < k) ? c[i + 1] : n;
        if (c[i] + 1 < cap) {
            ++c[i];
            for (int j = 0; j < i; ++j) {
                c[j] = j;
            }
            return true;
        }
    }
    return false;
}

std::vector<int> colex_unrank(std::uint64_t rank, int n, int k) {
    std::vector<int> c(k);
    for (int j = k; j >= 1; --j) {
        // Largest value v with C(v, j) <= rank; scan downward from the cap.
        int v = (j == k) ? n - 1 : c[j] - 1;
        while (v >= j - 1) {
            BigInt b = binomial(v, j);
            if (b <= rank) {
                break;
            }
            --v;
        }
        if (v < j - 1) {
            throw std::invalid_argument("colex_unrank: rank out of range");
        }
        c[j - 1] = v;
        rank -= static_cast<std::uint64_t>(binomial(v, j));
    }
    if (rank != 0) {
        throw std::invalid_argument("colex_unrank: rank out of range");
    }
    return c;
}

std::uint64_t colex_rank(const std::vector<int>& c) {
    BigInt rank = 0;
    for (int j = 0; j < static_cast<int>(c.size()); ++j) {
        rank += binomial(c[j], j + 1);
    }
    return static_cast<std::uint64_t>(rank);
}

}  // namespace tga
