#pragma once

#include <vector>

/*
 * Test-only counting oracles. These are deliberately written from scratch so
 * they share no code with the library paths they cross-check: bounded
 * partition counts come from the classical two-way recurrence, box counts
 * from direct recursive generation.
 */
namespace testoracle {

/// Number of partitions of r with parts of size at most k, via
/// p(r, k) = p(r, k-1) + p(r-k, k), p(0, k) = 1, p(r, 0) = 0 for r > 0.
inline long long bounded_partition_count(int r, int k) {
    if (r < 0) return 0;
    std::vector<std::vector<long long>> p(r + 1, std::vector<long long>(k + 1, 0));
    for (int kk = 0; kk <= k; ++kk) p[0][kk] = 1;
    for (int rr = 1; rr <= r; ++rr)
        for (int kk = 1; kk <= k; ++kk)
            p[rr][kk] = p[rr][kk - 1] + (rr >= kk ? p[rr - kk][kk] : 0);
    return p[r][k];
}

namespace detail {
inline void count_box(int remaining, int max_part, int rows_left, int weight,
                      std::vector<long long>& by_size) {
    by_size[weight] += 1;
    if (rows_left == 0) return;
    for (int part = 1; part <= std::min(max_part, remaining); ++part)
        count_box(remaining - part, part, rows_left - 1, weight + part, by_size);
}
}  // namespace detail

/// Counts, by size, of the partitions fitting in a rows x cols box
/// (generated one by one).
inline std::vector<long long> box_size_counts(int rows, int cols) {
    std::vector<long long> by_size(rows * cols + 1, 0);
    detail::count_box(rows * cols, cols, rows, 0, by_size);
    return by_size;
}

/// Number of n-tuples of partitions with part bounds d and total size r, for
/// r = 0..rmax: the convolution of the bounded counts.
inline std::vector<long long> multipartition_counts(const std::vector<int>& d, int rmax) {
    std::vector<long long> counts(rmax + 1, 0);
    counts[0] = 1;
    for (int bound : d) {
        std::vector<long long> bounded(rmax + 1);
        for (int extra = 0; extra <= rmax; ++extra)
            bounded[extra] = bounded_partition_count(extra, bound);
        std::vector<long long> next(rmax + 1, 0);
        for (int used = 0; used <= rmax; ++used) {
            if (counts[used] == 0) continue;
            for (int extra = 0; used + extra <= rmax; ++extra)
                next[used + extra] += counts[used] * bounded[extra];
        }
        counts = std::move(next);
    }
    return counts;
}

}  // namespace testoracle
