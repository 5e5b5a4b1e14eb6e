#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tga/bounds.hpp"
#include "tga/girth.hpp"

namespace tga {

namespace {

// DFS state for one left-count candidate: left nodes receive their sorted
// d_l-subsets of right nodes one at a time. Canonical-form pruning keeps the
// search exhaustive but small:
//   - fresh right nodes are introduced in increasing order, and
//   - each left node's neighbor tuple is lexicographically >= its
//     predecessor's (any biregular graph can be relabeled to satisfy both,
//     by repeatedly taking the lexicographically least remaining left node).
// Girth safety: connecting two right nodes through a new left node closes a
// cycle of (distance between them) + 2, so every chosen pair must be at
// bipartite distance >= girth - 2 beforehand.
class CageSearch {
  public:
    CageSearch(int d_l, int d_r, int girth, int left_count, int right_count)
        : d_l_(d_l), d_r_(d_r), girth_(girth), left_(left_count), right_(right_count) {
        right_degree_.assign(right_count, 0);
        right_adj_.assign(right_count, {});
        left_sets_.assign(left_count, {});
    }

    // Explores all graphs and returns the first witness found, if any.
    // `budget` counts DFS node expansions and is shared across threads.
    std::optional<TannerGraph> run(std::atomic<unsigned long long>& budget,
                                   std::atomic<bool>& exhausted,
                                   unsigned long long& states) {
        return extend(0, 0, budget, exhausted, states);
    }

  private:
    std::optional<TannerGraph> extend(int left_index, int used_right,
                                      std::atomic<unsigned long long>& budget,
                                      std::atomic<bool>& exhausted,
                                      unsigned long long& states) {
        if (left_index == left_) {
            for (int r = 0; r < right_; ++r) {
                if (right_degree_[r] != d_r_) {
                    return std::nullopt;
                }
            }
            return assemble();
        }
        std::vector<int> combo;
        return choose(left_index, used_right, combo, 0, budget, exhausted, states);
    }

    // Recursively picks the sorted neighbor tuple of left node `left_index`.
    std::optional<TannerGraph> choose(int left_index, int used_right, std::vector<int>& combo,
                                      int min_next, std::atomic<unsigned long long>& budget,
                                      std::atomic<bool>& exhausted, unsigned long long& states) {
        ++states;
        if (budget.fetch_sub(1, std::memory_order_relaxed) == 0) {
            exhausted.store(true, std::memory_order_relaxed);
            budget.store(0, std::memory_order_relaxed);
            return std::nullopt;
        }
        const int slot = static_cast<int>(combo.size());
        if (slot == d_l_) {
            if (left_index > 0 && combo < left_sets_[left_index - 1]) {
                return std::nullopt;
            }
            for (int r : combo) {
                ++right_degree_[r];
            }
            left_sets_[left_index] = combo;
            for (int r : combo) {
                right_adj_[r].push_back(left_index);
            }
            int new_used = std::max(used_right, combo.back() + 1);
            auto found = extend(left_index + 1, new_used, budget, exhausted, states);
            for (int r : combo) {
                --right_degree_[r];
                right_adj_[r].pop_back();
            }
            if (found) {
                return found;
            }
            return std::nullopt;
        }

        // Candidates: existing rights from min_next up, plus exactly one
        // fresh right (further fresh ones are symmetric to it).
        int cap = std::min(right_ - 1, used_right);  // used_right = first fresh index
        for (int r = min_next; r <= cap; ++r) {
            bool fresh = r == used_right;
            if (!fresh) {
                if (right_degree_[r] >= d_r_) {
                    continue;
                }
                if (!pair_distances_ok(combo, r)) {
                    continue;
                }
            }
            combo.push_back(r);
            auto found = choose(left_index, fresh ? used_right + 1 : used_right, combo, r + 1,
                                budget, exhausted, states);
            combo.pop_back();
            if (found) {
                return found;
            }
            if (exhausted.load(std::memory_order_relaxed)) {
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    // Bipartite BFS among right nodes over the edges placed so far; all
    // previously chosen rights in `combo` must stay >= girth-2 away from r.
    bool pair_distances_ok(const std::vector<int>& combo, int r) {
        if (combo.empty()) {
            return true;
        }
        const int limit = girth_ - 2;
        // Distances from r, counted in right-to-right steps of 2.
        std::vector<int> dist(right_, -1);
        dist[r] = 0;
        std::deque<int> queue{r};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (2 * dist[x] + 2 > limit) {
                continue;  // no shorter-than-limit pair can appear deeper
            }
            for (int l : right_adj_[x]) {
                for (int y : left_sets_[l]) {
                    if (dist[y] == -1) {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        for (int c : combo) {
            if (dist[c] != -1 && 2 * dist[c] < limit) {
                return false;
            }
        }
        return true;
    }

    std::optional<TannerGraph> assemble() const {
        TannerGraph g(left_, right_);
        for (int l = 0; l < left_; ++l) {
            for (int r : left_sets_[l]) {
                g.add_edge(l, r);
            }
        }
        return g;
    }

    int d_l_, d_r_, girth_, left_, right_;
    std::vector<int> right_degree_;
    std::vector<std::vector<int>> right_adj_;
    std::vector<std::vector<int>> left_sets_;
};

}  // namespace

long long bipartite_tree_lower_bound(int d_l, int d_r, int girth) {
    // Left-parity levels of the duplicate-free BFS tree of depth girth/2 - 1.
    long long total = 1;
    long long frontier = 1;
    for (int depth = 1; depth <= girth / 2 - 1; ++depth) {
        frontier *= (depth == 1) ? d_l : (depth % 2 == 1 ? d_l - 1 : d_r - 1);
        if (depth % 2 == 0) {
            total += frontier;
        }
    }
    return total;
}

BipartiteCageResult bipartite_cage_order(int d_l, int d_r, int girth,
                                         unsigned long long node_budget, int threads) {
    if (d_l < 2 || d_r < 2) {
        throw std::invalid_argument("bipartite_cage_order: need degrees >= 2");
    }
    if (girth % 2 != 0 || girth < 4) {
        throw std::invalid_argument("bipartite_cage_order: girth must be even and >= 4");
    }
    (void)threads;  // the left-count loop below is cheap enough sequentially

    BipartiteCageResult out;
    out.lower_bound = bipartite_tree_lower_bound(d_l, d_r, girth);
    std::atomic<unsigned long long> budget{node_budget};
    std::atomic<bool> exhausted{false};

    for (long long left = out.lower_bound;; ++left) {
        if (static_cast<long long>(d_l) * left % d_r != 0) {
            continue;
        }
        long long right = d_l * left / d_r;
        if (right < d_l) {  // a left node needs d_l distinct rights
            continue;
        }
        CageSearch search(d_l, d_r, girth, static_cast<int>(left), static_cast<int>(right));
        auto witness = search.run(budget, exhausted, out.states_explored);
        if (witness) {
            out.left_count = left;
            out.witness = std::move(witness);
            out.lower_bound = left;
            return out;
        }
        if (exhausted.load()) {
            out.budget_exhausted = true;
            out.lower_bound = left;  // smallest count not finished
            return out;
        }
        out.lower_bound = left + 1;  // this count is now excluded
    }
}

}  // namespace tga
