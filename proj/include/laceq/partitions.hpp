#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace laceq {

/// Integer partition: weakly decreasing list of positive parts. The empty
/// list is the empty partition.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    /// Validates weak decrease and positivity; throws std::invalid_argument.
    explicit Partition(std::vector<int> p);

    long long size() const;
    int length() const { return static_cast<int>(parts.size()); }
    /// 1-based part access; parts beyond the length read as 0.
    int part(int t) const;

    auto operator<=>(const Partition&) const = default;
};

struct Rect {
    int rows = 0;
    int cols = 0;

    long long area() const { return static_cast<long long>(rows) * cols; }
    bool operator==(const Rect&) const = default;
};

/*
 * Durfee rectangle D(lambda, i): the largest s x (s+i) rectangle fitting in
 * lambda, justified against the top-left corner. Zero-width and zero-height
 * rectangles fit by convention, so for i >= 0 the result has at least 0 rows
 * and for i < 0 at least -i rows (of width >= 0).
 */
Rect durfee_rect(const Partition& lambda, int offset);

/// True iff lambda has at least r.rows parts each of size >= r.cols;
/// rectangles with zero rows or zero columns are always contained.
bool contains_rect(const Partition& lambda, const Rect& r);

/// All partitions with parts <= max_part and size <= max_size, each exactly
/// once, ordered by size and then lexicographically decreasing.
std::vector<Partition> enumerate_bounded(int max_part, int max_size);

/// All partitions with at most `rows` parts, each of size <= cols, in the
/// same canonical order.
std::vector<Partition> enumerate_in_box(int rows, int cols);

/// `3,3,2,2,1`; the empty partition prints as `-`.
std::string to_string(const Partition& lambda);
Partition parse_partition(std::string_view text);

std::string to_string(const Rect& r);  // `3x2`

}  // namespace laceq
