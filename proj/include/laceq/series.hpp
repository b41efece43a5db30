#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "laceq/integer.hpp"

namespace laceq {

struct NonUnitConstantTerm : std::runtime_error {
    NonUnitConstantTerm()
        : std::runtime_error("series inversion needs constant term +1 or -1") {}
};

struct DegreeBeyondTruncation : std::runtime_error {
    DegreeBeyondTruncation(int zdeg, int qdeg, int trunc_z, int trunc_q)
        : std::runtime_error("coefficient (z^" + std::to_string(zdeg) + ", q^" +
                             std::to_string(qdeg) + ") outside retained window z<=" +
                             std::to_string(trunc_z) + ", q<=" + std::to_string(trunc_q)) {}
};

/*
 * Formal power series in z and q with exact integer coefficients, truncated
 * to z-degree <= trunc_z and q-degree <= trunc_q (both inclusive). Univariate
 * q-series are the trunc_z = 0 slice. Terms are kept sparse; absent keys mean
 * coefficient zero, stored coefficients are nonzero and inside the window.
 *
 * Binary operations on operands with different windows retain the
 * componentwise minimum of the two truncation bounds.
 */
class TruncatedSeries {
public:
    using Key = std::pair<int, int>;  // (z-degree, q-degree)
    using TermMap = std::map<Key, Integer>;

    TruncatedSeries(int trunc_z, int trunc_q);

    static TruncatedSeries zero(int trunc_z, int trunc_q);
    static TruncatedSeries constant(const Integer& value, int trunc_z, int trunc_q);
    // Value * z^zdeg * q^qdeg; degrees beyond the window yield the zero series.
    static TruncatedSeries monomial(const Integer& value, int zdeg, int qdeg,
                                    int trunc_z, int trunc_q);

    int trunc_z() const { return trunc_z_; }
    int trunc_q() const { return trunc_q_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Stores a coefficient; throws DegreeBeyondTruncation outside the window.
    void set_coeff(int zdeg, int qdeg, Integer value);

    bool operator==(const TruncatedSeries& rhs) const {
        return trunc_z_ == rhs.trunc_z_ && trunc_q_ == rhs.trunc_q_ && terms_ == rhs.terms_;
    }

    /// Canonical text form, terms sorted by (z-degree, q-degree),
    /// e.g. `1 - q - q^2 + q^3` or `1 - q z - q^2 z + q^3 z^2`.
    std::string to_text() const;

private:
    int trunc_z_;
    int trunc_q_;
    TermMap terms_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse up to truncation, by coefficient recursion.
/// Requires constant term +1 or -1; throws NonUnitConstantTerm otherwise.
TruncatedSeries invert(const TruncatedSeries& a);

/// Exact coefficient of z^zdeg q^qdeg; throws DegreeBeyondTruncation when the
/// requested degree lies outside the retained window.
Integer coeff(const TruncatedSeries& s, int zdeg, int qdeg);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    return mul(a, b);
}

/// $(q)_k = (1-q)(1-q^2)\cdots(1-q^k)$ truncated; $(q)_0 = 1$.
TruncatedSeries q_pochhammer(int k, int trunc_q, int trunc_z = 0);

/// $(z;q)_k = (1-qz)(1-q^2z)\cdots(1-q^kz)$ truncated in both variables.
TruncatedSeries zq_pochhammer(int k, int trunc_q, int trunc_z);

/// Gaussian binomial [k j]_q via the Pascal recursion
/// [k j]_q = [k-1 j]_q + q^{k-j} [k-1 j-1]_q; zero for j outside [0,k].
TruncatedSeries gauss_binom(int k, int j, int trunc_q, int trunc_z = 0);

/// Same polynomial by exact division $(q)_k / ((q)_j (q)_{k-j})$.
/// Kept as an independent cross-check of the Pascal path.
TruncatedSeries gauss_binom_by_division(int k, int j, int trunc_q);

/// Partitions inside a rows x cols box with q marking boxes and z marking the
/// number of (nonzero) rows:
///   sum_{m=0}^{rows} z^m q^m [cols-1+m over m]_q,
/// and 1 when cols = 0. Specializes to gauss_binom(rows+cols, rows) at z = 1.
TruncatedSeries box_series(int rows, int cols, int trunc_q, int trunc_z);

}  // namespace laceq
