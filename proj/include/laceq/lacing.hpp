#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace laceq {

struct IndexOutOfRange : std::runtime_error {
    explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Interval [start, end] of columns, 1-based, start <= end.
struct Interval {
    int start = 0;
    int end = 0;

    auto operator<=>(const Interval&) const = default;
};

/// Column vertex counts of a lacing diagram / dimensions of a representation.
using DimVector = std::vector<int>;

/*
 * Lace equivalence class eta on n columns, represented by the multiplicity
 * function m: a strand of type [i,j] runs from column i to column j, and
 * m_{[i,j]} counts the strands of that type. The multiplicity function
 * determines the class; individual vertex matchings are never materialized.
 * Zero multiplicities are omitted from the map.
 */
struct LaceClass {
    int n = 0;
    std::map<Interval, int> mult;

    LaceClass() = default;
    LaceClass(int n, std::map<Interval, int> m);

    int multiplicity(const Interval& interval) const {
        const auto it = mult.find(interval);
        return it == mult.end() ? 0 : it->second;
    }

    bool operator==(const LaceClass&) const = default;
};

/*
 * Weight tuple w = (w^(1), ..., w^(n)) with w^(k) a permutation of {1..k} in
 * one-line notation, subject to w^(k)(k) = k.
 */
struct PermSeq {
    std::vector<std::vector<int>> perms;

    PermSeq() = default;
    /// Validates each entry; throws std::invalid_argument on a non-permutation
    /// or when w^(k)(k) != k.
    explicit PermSeq(std::vector<std::vector<int>> one_line);

    static PermSeq identity(int n);

    int n() const { return static_cast<int>(perms.size()); }
    /// w^(k)(i), both arguments 1-based.
    int apply(int k, int i) const;

    bool operator==(const PermSeq&) const = default;
};

/// d(k) = number of strands whose interval covers column k.
DimVector dim_vector(const LaceClass& eta);

/// s_i^k(eta) = #{strands from column i to column k-1} = m_{[i,k-1]}.
/// Requires 1 <= i < k <= n.
int s_stat(const LaceClass& eta, int i, int k);

/// t_j^k(eta) = #{strands starting at column j that use a vertex of column k}
/// = sum_{l >= k} m_{[j,l]}. Requires 1 <= j <= k <= n.
int t_stat(const LaceClass& eta, int j, int k);

/// Number of strands terminating at column j: sum_{i=1}^{j} s_i^{j+1}(eta).
/// Requires 0 <= j <= n-1; j = 0 gives 0.
int leftstrands(const LaceClass& eta, int j);

/// Durfee statistic
///   r_w(eta) = sum_{k=2}^{n} sum_{1<=i<j<=k} s_{w^(k)(i)}^k(eta) t_{w^(k)(j)}^k(eta).
long long durfee_statistic(const LaceClass& eta, const PermSeq& w);

/// Every lace class with the given dimension vector, exactly once, ordered by
/// decreasing lexicographic multiplicity vector over intervals sorted by
/// (start, end).
std::vector<LaceClass> enumerate_classes(const DimVector& d);

/// Single strand of type `interval` on n columns.
LaceClass interval_class(int n, const Interval& interval);

std::string to_string(const Interval& interval);    // `[1,3]`
std::string to_string(const LaceClass& eta);        // `2*[1,3] + [2,2]`; empty prints `-`
std::string to_string(const PermSeq& w);            // `1/12/123`; commas past S_9
PermSeq parse_perm_seq(std::string_view text);

}  // namespace laceq
