#include "laceq/series.hpp"

#include <stdexcept>
#include <vector>

namespace laceq {

namespace {

void check_bounds(int trunc_z, int trunc_q) {
    if (trunc_z < 0 || trunc_q < 0)
        throw std::invalid_argument("truncation bounds must be nonnegative");
}

// Dense (trunc_z+1) x (trunc_q+1) work grid used by mul and invert.
struct Grid {
    int tz, tq;
    std::vector<Integer> cells;

    Grid(int trunc_z, int trunc_q)
        : tz(trunc_z), tq(trunc_q), cells((trunc_z + 1) * (trunc_q + 1)) {}

    Integer& at(int z, int q) { return cells[z * (tq + 1) + q]; }

    TruncatedSeries to_series() const {
        TruncatedSeries out(tz, tq);
        for (int z = 0; z <= tz; ++z)
            for (int q = 0; q <= tq; ++q) {
                const Integer& c = cells[z * (tq + 1) + q];
                if (c != 0) out.set_coeff(z, q, c);
            }
        return out;
    }
};

}  // namespace

TruncatedSeries::TruncatedSeries(int trunc_z, int trunc_q)
    : trunc_z_(trunc_z), trunc_q_(trunc_q) {
    check_bounds(trunc_z, trunc_q);
}

TruncatedSeries TruncatedSeries::zero(int trunc_z, int trunc_q) {
    return TruncatedSeries(trunc_z, trunc_q);
}

TruncatedSeries TruncatedSeries::constant(const Integer& value, int trunc_z, int trunc_q) {
    TruncatedSeries s(trunc_z, trunc_q);
    if (value != 0) s.terms_[{0, 0}] = value;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Integer& value, int zdeg, int qdeg,
                                          int trunc_z, int trunc_q) {
    if (zdeg < 0 || qdeg < 0) throw std::invalid_argument("monomial degrees must be nonnegative");
    TruncatedSeries s(trunc_z, trunc_q);
    if (value != 0 && zdeg <= trunc_z && qdeg <= trunc_q) s.terms_[{zdeg, qdeg}] = value;
    return s;
}

void TruncatedSeries::set_coeff(int zdeg, int qdeg, Integer value) {
    if (zdeg < 0 || qdeg < 0 || zdeg > trunc_z_ || qdeg > trunc_q_)
        throw DegreeBeyondTruncation(zdeg, qdeg, trunc_z_, trunc_q_);
    if (value == 0)
        terms_.erase({zdeg, qdeg});
    else
        terms_[{zdeg, qdeg}] = std::move(value);
}

std::string TruncatedSeries::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        const auto [zd, qd] = key;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Integer mag = abs(c);
        std::string body;
        if (mag != 1 || (zd == 0 && qd == 0)) body = to_decimal(mag);
        auto append_power = [&body](const char* var, int deg) {
            if (deg == 0) return;
            if (!body.empty()) body += " ";
            body += var;
            if (deg > 1) body += "^" + std::to_string(deg);
        };
        append_power("q", qd);
        append_power("z", zd);
        out += body;
    }
    return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int tz = std::min(a.trunc_z(), b.trunc_z());
    const int tq = std::min(a.trunc_q(), b.trunc_q());
    TruncatedSeries out(tz, tq);
    for (const auto& [key, c] : a.terms())
        if (key.first <= tz && key.second <= tq) out.set_coeff(key.first, key.second, c);
    for (const auto& [key, c] : b.terms()) {
        if (key.first > tz || key.second > tq) continue;
        out.set_coeff(key.first, key.second, coeff(out, key.first, key.second) + c);
    }
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int tz = std::min(a.trunc_z(), b.trunc_z());
    const int tq = std::min(a.trunc_q(), b.trunc_q());
    Grid grid(tz, tq);
    for (const auto& [ka, ca] : a.terms()) {
        if (ka.first > tz || ka.second > tq) continue;
        for (const auto& [kb, cb] : b.terms()) {
            const int z = ka.first + kb.first;
            const int q = ka.second + kb.second;
            if (z > tz) break;  // b's keys are sorted by z-degree first
            if (q > tq) continue;
            grid.at(z, q) += ca * cb;
        }
    }
    return grid.to_series();
}

TruncatedSeries invert(const TruncatedSeries& a) {
    const auto it = a.terms().find({0, 0});
    const Integer c0 = (it == a.terms().end()) ? Integer(0) : it->second;
    if (c0 != 1 && c0 != -1) throw NonUnitConstantTerm();

    // With a*b = 1 and a_{0,0} = c0 = +-1, each b coefficient follows from the
    // lower-degree ones:
    //   c0 * b_{z,q} = delta_{(z,q),(0,0)} - sum_{(x,y) != (0,0)} a_{x,y} b_{z-x,q-y}.
    const int tz = a.trunc_z();
    const int tq = a.trunc_q();
    Grid b(tz, tq);
    for (int z = 0; z <= tz; ++z) {
        for (int q = 0; q <= tq; ++q) {
            Integer acc = (z == 0 && q == 0) ? 1 : 0;
            for (const auto& [key, av] : a.terms()) {
                const auto [x, y] = key;
                if (x == 0 && y == 0) continue;
                if (x > z) break;
                if (y > q) continue;
                acc -= av * b.at(z - x, q - y);
            }
            b.at(z, q) = c0 * acc;
        }
    }
    return b.to_series();
}

Integer coeff(const TruncatedSeries& s, int zdeg, int qdeg) {
    if (zdeg < 0 || qdeg < 0 || zdeg > s.trunc_z() || qdeg > s.trunc_q())
        throw DegreeBeyondTruncation(zdeg, qdeg, s.trunc_z(), s.trunc_q());
    const auto it = s.terms().find({zdeg, qdeg});
    return it == s.terms().end() ? Integer(0) : it->second;
}

TruncatedSeries q_pochhammer(int k, int trunc_q, int trunc_z) {
    if (k < 0) throw std::invalid_argument("q_pochhammer subscript must be nonnegative");
    TruncatedSeries out = TruncatedSeries::constant(1, trunc_z, trunc_q);
    for (int i = 1; i <= k && i <= trunc_q; ++i) {
        TruncatedSeries factor = TruncatedSeries::constant(1, trunc_z, trunc_q);
        factor.set_coeff(0, i, -1);
        out = mul(out, factor);
    }
    return out;
}

TruncatedSeries zq_pochhammer(int k, int trunc_q, int trunc_z) {
    if (k < 0) throw std::invalid_argument("zq_pochhammer subscript must be nonnegative");
    TruncatedSeries out = TruncatedSeries::constant(1, trunc_z, trunc_q);
    for (int i = 1; i <= k && i <= trunc_q; ++i) {
        if (trunc_z < 1) break;  // every remaining factor is 1 - z q^i = 1 (mod z)
        TruncatedSeries factor = TruncatedSeries::constant(1, trunc_z, trunc_q);
        factor.set_coeff(1, i, -1);
        out = mul(out, factor);
    }
    return out;
}

TruncatedSeries gauss_binom(int k, int j, int trunc_q, int trunc_z) {
    if (k < 0) throw std::invalid_argument("gauss_binom upper index must be nonnegative");
    if (j < 0 || j > k) return TruncatedSeries::zero(trunc_z, trunc_q);

    // Pascal triangle of q-polynomials, one row at a time. Truncation in q is
    // stable under the recursion because it only shifts by nonnegative powers.
    const int jmax = j;
    std::vector<TruncatedSeries> row(jmax + 1, TruncatedSeries::zero(trunc_z, trunc_q));
    row[0] = TruncatedSeries::constant(1, trunc_z, trunc_q);
    for (int kk = 1; kk <= k; ++kk) {
        for (int jj = std::min(kk, jmax); jj >= 1; --jj) {
            // [kk jj] = [kk-1 jj] + q^{kk-jj} [kk-1 jj-1]; in-place right-to-left.
            const TruncatedSeries shift =
                TruncatedSeries::monomial(1, 0, kk - jj, trunc_z, trunc_q);
            row[jj] = add(row[jj], mul(shift, row[jj - 1]));
        }
    }
    return row[jmax];
}

TruncatedSeries gauss_binom_by_division(int k, int j, int trunc_q) {
    if (k < 0) throw std::invalid_argument("gauss_binom upper index must be nonnegative");
    if (j < 0 || j > k) return TruncatedSeries::zero(0, trunc_q);
    const TruncatedSeries denominator =
        mul(q_pochhammer(j, trunc_q), q_pochhammer(k - j, trunc_q));
    return mul(q_pochhammer(k, trunc_q), invert(denominator));
}

TruncatedSeries box_series(int rows, int cols, int trunc_q, int trunc_z) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("box sides must be nonnegative");
    TruncatedSeries acc = TruncatedSeries::constant(1, trunc_z, trunc_q);
    if (cols == 0) return acc;
    // A partition with exactly m rows in the box is 1^m plus a partition in an
    // m x (cols-1) box.
    for (int m = 1; m <= rows && m <= trunc_z && m <= trunc_q; ++m)
        acc = add(acc, mul(TruncatedSeries::monomial(1, m, m, trunc_z, trunc_q),
                           gauss_binom(cols - 1 + m, m, trunc_q, trunc_z)));
    return acc;
}

}  // namespace laceq
