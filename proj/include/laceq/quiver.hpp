#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "laceq/lacing.hpp"

namespace laceq {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Internal-consistency failure: dim Ext^1 computed negative.
struct NegativeExt : std::runtime_error {
    explicit NegativeExt(const std::string& what) : std::runtime_error(what) {}
};

/*
 * Type-A quiver on n vertices as a word over {R, L} of length n-1: arrow a_i
 * joins vertices i and i+1, pointing from i to i+1 when the letter is R and
 * the other way when it is L.
 */
struct OrientationWord {
    std::string arrows;

    OrientationWord() = default;
    explicit OrientationWord(std::string word);

    int n() const { return static_cast<int>(arrows.size()) + 1; }
    bool points_right(int i) const;         // arrow a_i, 1 <= i <= n-1
    int head(int i) const { return points_right(i) ? i + 1 : i; }
    int tail(int i) const { return points_right(i) ? i : i + 1; }

    /// All arrows flipped (opposite quiver).
    OrientationWord reversed() const;
};

/*
 * The permutation tuple w_Q: w^(1) = 1, w^(2) = 12, and for i >= 3
 *   w^(i) = iota(w^(i-1))            if a_{i-2}, a_{i-1} agree,
 *   w^(i) = iota(w^(i-1) w_0^(i-1))  otherwise,
 * where w_0 is the longest permutation and iota appends the fixed point i.
 */
PermSeq wq(const OrientationWord& q);

/// Euler form chi_Q(d1, d2) = sum_x d1(x) d2(x) - sum_a d1(t(a)) d2(h(a)).
long long euler_form(const OrientationWord& q, const DimVector& d1, const DimVector& d2);

/*
 * dim Hom(V_eta1, V_eta2) computed as the kernel dimension of the exact
 * linear system T_{h(a)} V_a = W_a T_{t(a)} over all arrows, where the
 * structure maps come from the strands of the two classes. This is the
 * independent linear-algebra oracle; it shares nothing with the interval
 * combinatorics it is used to validate.
 */
long long hom_dim(const OrientationWord& q, const LaceClass& eta1, const LaceClass& eta2);

/// dim Ext^1(V_eta1, V_eta2) = dim Hom - chi_Q; throws NegativeExt if the
/// computed value is negative (which would signal a bug).
long long ext_dim(const OrientationWord& q, const LaceClass& eta1, const LaceClass& eta2);

/*
 * Interval-pair predicate behind the positive codimension formula. (I,J) is a
 * condition strand iff it matches one of:
 *   (I)   I=[w,x-1], J=[x,z] with w<x<=z;
 *   (II)  I=[w,y],   J=[x,z] with w<x<=y<z and a_{x-1}, a_y parallel;
 *   (III) I=[x,y],   J=[w,z] with w<x<=y<z and a_{x-1}, a_y antiparallel.
 */
bool is_condition_strand(const OrientationWord& q, const Interval& i, const Interval& j);

using IntervalPair = std::pair<Interval, Interval>;

/// { ([w^(k)(i), k-1], [w^(k)(j), l]) : 1 <= i < j <= k <= l <= n }.
std::set<IntervalPair> box_strands(const PermSeq& w, int n);

/// The condition-strand pairs materialized as a set.
std::set<IntervalPair> condition_strands(const OrientationWord& q);

/// Orbit codimension by the positive formula:
/// sum over condition-strand pairs (I,J) of m_I(eta) m_J(eta).
long long codim_condition(const OrientationWord& q, const LaceClass& eta);

/// Orbit codimension as dim Ext^1(V_eta, V_eta), via the Hom oracle and the
/// Euler form. Ground truth for codim_condition and the Durfee statistic.
long long codim_oracle(const OrientationWord& q, const LaceClass& eta);

}  // namespace laceq
