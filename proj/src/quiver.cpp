#include "laceq/quiver.hpp"

#include <algorithm>
#include <vector>

#include "laceq/integer.hpp"

namespace laceq {

OrientationWord::OrientationWord(std::string word) : arrows(std::move(word)) {
    for (char ch : arrows)
        if (ch != 'R' && ch != 'L')
            throw std::invalid_argument("orientation word must use only R and L: '" + arrows +
                                        "'");
}

bool OrientationWord::points_right(int i) const {
    if (i < 1 || i > n() - 1)
        throw IndexOutOfRange("arrow index " + std::to_string(i) + " out of 1.." +
                              std::to_string(n() - 1));
    return arrows[i - 1] == 'R';
}

OrientationWord OrientationWord::reversed() const {
    std::string flipped = arrows;
    for (char& ch : flipped) ch = (ch == 'R') ? 'L' : 'R';
    return OrientationWord(flipped);
}

PermSeq wq(const OrientationWord& q) {
    const int n = q.n();
    std::vector<std::vector<int>> perms;
    perms.reserve(n);
    if (n >= 1) perms.push_back({1});
    if (n >= 2) perms.push_back({1, 2});
    for (int i = 3; i <= n; ++i) {
        const std::vector<int>& prev = perms[i - 2];  // w^(i-1), in S_{i-1}
        const bool same = q.points_right(i - 2) == q.points_right(i - 1);
        std::vector<int> next(i);
        for (int x = 1; x <= i - 1; ++x)
            next[x - 1] = same ? prev[x - 1] : prev[(i - x) - 1];  // w_0^{(i-1)}(x) = i - x
        next[i - 1] = i;
        perms.push_back(std::move(next));
    }
    return PermSeq(std::move(perms));
}

long long euler_form(const OrientationWord& q, const DimVector& d1, const DimVector& d2) {
    const int n = q.n();
    if (static_cast<int>(d1.size()) != n || static_cast<int>(d2.size()) != n)
        throw DimensionMismatch("euler_form: dimension vectors must have length " +
                                std::to_string(n));
    long long total = 0;
    for (int x = 1; x <= n; ++x) total += static_cast<long long>(d1[x - 1]) * d2[x - 1];
    for (int i = 1; i <= n - 1; ++i)
        total -= static_cast<long long>(d1[q.tail(i) - 1]) * d2[q.head(i) - 1];
    return total;
}

namespace {

/*
 * A representation described by a lace class, in a strand-instance basis: the
 * space at column c has one basis vector per strand instance covering c, and
 * each arrow's structure map sends a basis vector to the instance's vector at
 * the neighbouring column when the strand covers both columns, and to zero
 * otherwise. Every structure map is therefore a partial permutation matrix.
 */
struct StrandBasis {
    std::vector<Interval> instances;
    // position[c-1][s] = basis index of instance s at column c, or -1.
    std::vector<std::vector<int>> position;
    DimVector dims;

    explicit StrandBasis(const LaceClass& eta) : dims(eta.n, 0) {
        for (const auto& [interval, count] : eta.mult)
            for (int copy = 0; copy < count; ++copy) instances.push_back(interval);
        position.assign(eta.n, std::vector<int>(instances.size(), -1));
        for (std::size_t s = 0; s < instances.size(); ++s)
            for (int c = instances[s].start; c <= instances[s].end; ++c)
                position[c - 1][s] = dims[c - 1]++;
    }
};

int rank_fraction_free(std::vector<std::vector<Integer>>& matrix) {
    if (matrix.empty()) return 0;
    const int rows = static_cast<int>(matrix.size());
    const int cols = static_cast<int>(matrix[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (matrix[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(matrix[rank], matrix[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (matrix[r][col] == 0) continue;
            const Integer f_pivot = matrix[rank][col];
            const Integer f_row = matrix[r][col];
            for (int c = col; c < cols; ++c)
                matrix[r][c] = f_pivot * matrix[r][c] - f_row * matrix[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

long long hom_dim(const OrientationWord& q, const LaceClass& eta1, const LaceClass& eta2) {
    const int n = q.n();
    if (eta1.n != n || eta2.n != n)
        throw DimensionMismatch("hom_dim: classes must live on " + std::to_string(n) +
                                " columns");
    const StrandBasis v(eta1);
    const StrandBasis w(eta2);

    // Unknowns: entries of T_x, a dims_w(x) x dims_v(x) matrix per column.
    std::vector<int> offset(n + 1, 0);
    for (int x = 1; x <= n; ++x) offset[x] = offset[x - 1] + w.dims[x - 1] * v.dims[x - 1];
    const int variables = offset[n];
    auto var_id = [&](int x, int row, int col) {
        return offset[x - 1] + row * v.dims[x - 1] + col;
    };

    // One scalar equation per arrow a and per entry of T_{h(a)} V_a - W_a T_{t(a)}.
    std::vector<std::vector<Integer>> rows;
    for (int i = 1; i <= n - 1; ++i) {
        const int t = q.tail(i);
        const int h = q.head(i);
        // to_head[c] = row of V_a hit from tail position c (-1 if V_a kills it);
        // from_head[r] = tail position of W_a mapping onto head position r.
        std::vector<int> to_head(v.dims[t - 1], -1);
        for (std::size_t s = 0; s < v.instances.size(); ++s)
            if (v.position[t - 1][s] >= 0 && v.position[h - 1][s] >= 0)
                to_head[v.position[t - 1][s]] = v.position[h - 1][s];
        std::vector<int> from_head(w.dims[h - 1], -1);
        for (std::size_t s = 0; s < w.instances.size(); ++s)
            if (w.position[t - 1][s] >= 0 && w.position[h - 1][s] >= 0)
                from_head[w.position[h - 1][s]] = w.position[t - 1][s];

        for (int p = 0; p < w.dims[h - 1]; ++p)
            for (int c = 0; c < v.dims[t - 1]; ++c) {
                std::vector<Integer> row(variables);
                bool nonzero = false;
                if (to_head[c] >= 0) {
                    row[var_id(h, p, to_head[c])] += 1;
                    nonzero = true;
                }
                if (from_head[p] >= 0) {
                    row[var_id(t, from_head[p], c)] -= 1;
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    return variables - rank_fraction_free(rows);
}

long long ext_dim(const OrientationWord& q, const LaceClass& eta1, const LaceClass& eta2) {
    const long long hom = hom_dim(q, eta1, eta2);
    const long long ext = hom - euler_form(q, dim_vector(eta1), dim_vector(eta2));
    if (ext < 0)
        throw NegativeExt("ext_dim computed " + std::to_string(ext) + " for Hom=" +
                          std::to_string(hom));
    return ext;
}

bool is_condition_strand(const OrientationWord& q, const Interval& i, const Interval& j) {
    const int n = q.n();
    auto check = [n](const Interval& interval) {
        if (interval.start < 1 || interval.start > interval.end || interval.end > n)
            throw IndexOutOfRange("interval " + to_string(interval) + " outside 1.." +
                                  std::to_string(n));
    };
    check(i);
    check(j);

    // Type (I): J starts right after I ends.
    if (j.start == i.end + 1) return true;
    // Type (II): I=[w,y], J=[x,z], w < x <= y < z, arrows a_{x-1} and a_y parallel.
    if (i.start < j.start && j.start <= i.end && i.end < j.end &&
        q.points_right(j.start - 1) == q.points_right(i.end))
        return true;
    // Type (III): I=[x,y] strictly inside J=[w,z], arrows a_{x-1} and a_y antiparallel.
    if (j.start < i.start && i.end < j.end &&
        q.points_right(i.start - 1) != q.points_right(i.end))
        return true;
    return false;
}

std::set<IntervalPair> box_strands(const PermSeq& w, int n) {
    if (w.n() != n)
        throw std::invalid_argument("box_strands: permutation tuple must have length n");
    std::set<IntervalPair> out;
    for (int k = 2; k <= n; ++k)
        for (int l = k; l <= n; ++l)
            for (int j = 2; j <= k; ++j)
                for (int i = 1; i < j; ++i)
                    out.insert({Interval{w.apply(k, i), k - 1}, Interval{w.apply(k, j), l}});
    return out;
}

std::set<IntervalPair> condition_strands(const OrientationWord& q) {
    const int n = q.n();
    std::set<IntervalPair> out;
    for (int i1 = 1; i1 <= n; ++i1)
        for (int i2 = i1; i2 <= n; ++i2)
            for (int j1 = 1; j1 <= n; ++j1)
                for (int j2 = j1; j2 <= n; ++j2) {
                    const Interval i{i1, i2};
                    const Interval j{j1, j2};
                    if (is_condition_strand(q, i, j)) out.insert({i, j});
                }
    return out;
}

long long codim_condition(const OrientationWord& q, const LaceClass& eta) {
    if (eta.n != q.n())
        throw DimensionMismatch("codim_condition: class must live on " +
                                std::to_string(q.n()) + " columns");
    long long total = 0;
    for (const auto& [i, mi] : eta.mult)
        for (const auto& [j, mj] : eta.mult)
            if (is_condition_strand(q, i, j)) total += static_cast<long long>(mi) * mj;
    return total;
}

long long codim_oracle(const OrientationWord& q, const LaceClass& eta) {
    return ext_dim(q, eta, eta);
}

}  // namespace laceq
