#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "laceq/lacing.hpp"
#include "laceq/partitions.hpp"

namespace laceq {

struct MalformedCutData : std::runtime_error {
    explicit MalformedCutData(const std::string& what) : std::runtime_error(what) {}
};

/// Tuple of n partitions, with lambda^(k) restricted to parts of size at most
/// bound(k).
struct MultiPartition {
    std::vector<Partition> lambdas;
    DimVector bound;

    MultiPartition() = default;
    /// Throws std::invalid_argument when a component exceeds its bound.
    MultiPartition(std::vector<Partition> lambdas, DimVector bound);

    long long weight() const;
    bool operator==(const MultiPartition&) const = default;
};

/*
 * The cut side of the bijection: a lace class together with the rectangle
 * list mu and the partition list nu. Keys use 1-based band positions:
 *   mus[(i,j,k)], 1 <= i < j <= k <= n, is the s_{w^(k)(i)}^k x t_{w^(k)(j)}^k
 *   rectangle of the k-th diagram;
 *   nus[(i,k)], 1 <= i <= k <= n, fits the s_{w^(k)(i)}^k x t_{w^(k)(i)}^k box
 *   for i < k and has parts <= t_k^k for i = k.
 * Both maps carry every admissible key, including degenerate entries.
 */
struct CutData {
    LaceClass eta;
    std::map<std::tuple<int, int, int>, Rect> mus;
    std::map<std::pair<int, int>, Partition> nus;

    long long weight() const;
    bool operator==(const CutData&) const = default;
};

/// Intermediate values of the cut: the recursion tables t_i^k and s_i^k and
/// the Durfee rectangles delta_i^k, alongside the cut itself.
struct PhiDetail {
    CutData cut;
    // t[k][i] for 1 <= i <= k <= n and s[k][i] for 1 <= i < k, 1-based on both
    // axes (index 0 unused).
    std::vector<std::vector<int>> t;
    std::vector<std::vector<int>> s;
    std::map<std::pair<int, int>, Rect> deltas;  // (i,k) -> delta_i^k, 1 <= i < k
};

/*
 * Phi: cut each lambda^(k) by the recursive Durfee-rectangle procedure
 * (t_1^1 = d(1); delta_i^k = D(lambda^(k), d(k) - sum of previous-level t's),
 * then read off t and s), rebuild the lace class from s_i^{j+1} and t_i^n,
 * and split the diagrams into rectangles and leftover partitions. Total on
 * its domain; the weight is preserved.
 */
PhiDetail phi_detail(const MultiPartition& lambda, const PermSeq& w);
CutData phi(const MultiPartition& lambda, const PermSeq& w);

/*
 * Psi: glue. The k-th diagram is assembled from horizontal bands, band i of
 * height s_{w^(k)(i)}^k with rows of length
 *   sum_{j=i+1}^{k} t_{w^(k)(j)}^k + (row of nu_i^k),
 * followed below by the rows of nu_k^k. Throws MalformedCutData when the
 * rectangle list or a nu entry does not match the class.
 */
MultiPartition psi(const CutData& cut, const PermSeq& w);

/// phi then psi (or psi then phi) returns the argument and preserves weight.
bool roundtrip_check(const MultiPartition& lambda, const PermSeq& w);
bool roundtrip_check(const CutData& cut, const PermSeq& w);

/// All multipartitions bounded by d with total size <= max_total.
std::vector<MultiPartition> enumerate_multipartitions(const DimVector& d, int max_total);

/// All cut data over the given class with weight <= max_weight. The
/// rectangles are forced by (eta, w); only the nu entries vary.
std::vector<CutData> enumerate_cut_data(const LaceClass& eta, const PermSeq& w, int max_weight);

/// `2,1 / 5,1 / 3,3,2,1,1`; empty components print as `-`.
std::string to_string(const MultiPartition& lambda);
MultiPartition parse_multipartition(std::string_view text, const DimVector& bound);

}  // namespace laceq
