#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they are used to check.

#include <cstdint>
#include <functional>
#include <vector>

namespace testing_oracles {

// Ordered Bell numbers via the recurrence a(n) = sum_k C(n,k) a(n-k), a(0)=1.
inline uint64_t ordered_bell(int n) {
    std::vector<std::vector<uint64_t>> choose(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        choose[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) {
            choose[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                choose[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                choose[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
        }
    }
    std::vector<uint64_t> a(static_cast<size_t>(n) + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        uint64_t total = 0;
        for (int k = 1; k <= m; ++k) {
            total += choose[static_cast<size_t>(m)][static_cast<size_t>(k)] * a[static_cast<size_t>(m - k)];
        }
        a[static_cast<size_t>(m)] = total;
    }
    return a[static_cast<size_t>(n)];
}

// Enumerates rank vectors of length n by brute force over all functions
// [n] -> [n] and keeping the surjections onto a prefix 0..k-1.
inline std::vector<std::vector<int>> brute_force_rank_vectors(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<size_t>(n), 0);
    while (true) {
        int top = 0;
        for (int r : v) top = std::max(top, r);
        std::vector<bool> seen(static_cast<size_t>(top) + 1, false);
        for (int r : v) seen[static_cast<size_t>(r)] = true;
        bool onto = true;
        for (bool b : seen) onto = onto && b;
        if (onto) out.push_back(v);
        int i = n - 1;
        while (i >= 0 && v[static_cast<size_t>(i)] == n - 1) {
            v[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++v[static_cast<size_t>(i)];
    }
    return out;
}

} // namespace testing_oracles
