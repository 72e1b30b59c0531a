#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "influence/types.hpp"

namespace influence {

// C(n, k), saturating at uint64 max instead of overflowing.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t numerator = static_cast<std::uint64_t>(n - k + i);
        if (result > std::numeric_limits<std::uint64_t>::max() / numerator)
            return std::numeric_limits<std::uint64_t>::max();
        result = result * numerator / static_cast<std::uint64_t>(i);
    }
    return result;
}

// Sum over j = 0..k of C(n, j), saturating.
inline std::uint64_t subsets_up_to(int n, int k) {
    std::uint64_t total = 0;
    for (int j = 0; j <= k; ++j) {
        std::uint64_t b = binomial(n, j);
        if (total > std::numeric_limits<std::uint64_t>::max() - b)
            return std::numeric_limits<std::uint64_t>::max();
        total += b;
    }
    return total;
}

// Calls fn for every k-subset of pool in lexicographic order. fn returns
// false to stop early; the function returns false iff stopped.
template <typename Fn>
bool for_each_combination(const VertexSet& pool, int k, Fn&& fn) {
    const int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return true;
    VertexSet subset(k);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
        if (!fn(static_cast<const VertexSet&>(subset))) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// All subsets of pool with size in [min_size, max_size], sizes ascending,
// lexicographic within each size.
template <typename Fn>
bool for_each_subset(const VertexSet& pool, int min_size, int max_size, Fn&& fn) {
    for (int k = min_size; k <= max_size; ++k)
        if (!for_each_combination(pool, k, fn)) return false;
    return true;
}

// Ordered compositions of total into parts entries, each >= min_part,
// in ascending lexicographic order.
inline std::vector<std::vector<int>> compositions(int total, int parts, int min_part) {
    std::vector<std::vector<int>> out;
    if (parts <= 0) {
        if (total == 0 && parts == 0) out.push_back({});
        return out;
    }
    std::vector<int> current(parts);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            if (remaining >= min_part) {
                current[pos] = remaining;
                out.push_back(current);
            }
            return;
        }
        for (int v = min_part; v <= remaining - min_part * (parts - pos - 1); ++v) {
            current[pos] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

}  // namespace influence
