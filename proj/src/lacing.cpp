#include "laceq/lacing.hpp"

#include <algorithm>
#include <charconv>

namespace laceq {

LaceClass::LaceClass(int columns, std::map<Interval, int> m) : n(columns) {
    if (n < 0) throw std::invalid_argument("column count must be nonnegative");
    for (auto& [interval, count] : m) {
        if (interval.start < 1 || interval.start > interval.end || interval.end > n)
            throw std::invalid_argument("strand interval outside 1.." + std::to_string(n));
        if (count < 0) throw std::invalid_argument("strand multiplicity must be nonnegative");
        if (count > 0) mult.emplace(interval, count);
    }
}

PermSeq::PermSeq(std::vector<std::vector<int>> one_line) : perms(std::move(one_line)) {
    for (std::size_t k = 1; k <= perms.size(); ++k) {
        const auto& p = perms[k - 1];
        if (p.size() != k)
            throw std::invalid_argument("w^(" + std::to_string(k) + ") must lie in S_" +
                                        std::to_string(k));
        std::vector<bool> seen(k + 1, false);
        for (int v : p) {
            if (v < 1 || v > static_cast<int>(k) || seen[v])
                throw std::invalid_argument("w^(" + std::to_string(k) +
                                            ") is not a permutation of 1.." + std::to_string(k));
            seen[v] = true;
        }
        if (p.back() != static_cast<int>(k))
            throw std::invalid_argument("w^(" + std::to_string(k) + ") must fix " +
                                        std::to_string(k));
    }
}

PermSeq PermSeq::identity(int n) {
    if (n < 0) throw std::invalid_argument("permutation count must be nonnegative");
    std::vector<std::vector<int>> perms(n);
    for (int k = 1; k <= n; ++k) {
        perms[k - 1].resize(k);
        for (int i = 1; i <= k; ++i) perms[k - 1][i - 1] = i;
    }
    return PermSeq(std::move(perms));
}

int PermSeq::apply(int k, int i) const {
    if (k < 1 || k > n() || i < 1 || i > k)
        throw IndexOutOfRange("permutation index (k=" + std::to_string(k) +
                              ", i=" + std::to_string(i) + ") out of range");
    return perms[k - 1][i - 1];
}

DimVector dim_vector(const LaceClass& eta) {
    DimVector d(eta.n, 0);
    for (const auto& [interval, count] : eta.mult)
        for (int c = interval.start; c <= interval.end; ++c) d[c - 1] += count;
    return d;
}

int s_stat(const LaceClass& eta, int i, int k) {
    if (!(1 <= i && i < k && k <= eta.n))
        throw IndexOutOfRange("s_stat requires 1 <= i < k <= n, got i=" + std::to_string(i) +
                              " k=" + std::to_string(k));
    return eta.multiplicity({i, k - 1});
}

int t_stat(const LaceClass& eta, int j, int k) {
    if (!(1 <= j && j <= k && k <= eta.n))
        throw IndexOutOfRange("t_stat requires 1 <= j <= k <= n, got j=" + std::to_string(j) +
                              " k=" + std::to_string(k));
    int total = 0;
    for (int l = k; l <= eta.n; ++l) total += eta.multiplicity({j, l});
    return total;
}

int leftstrands(const LaceClass& eta, int j) {
    if (j < 0 || j >= eta.n)
        throw IndexOutOfRange("leftstrands requires 0 <= j <= n-1, got j=" + std::to_string(j));
    int total = 0;
    for (int i = 1; i <= j; ++i) total += eta.multiplicity({i, j});
    return total;
}

long long durfee_statistic(const LaceClass& eta, const PermSeq& w) {
    if (w.n() != eta.n)
        throw std::invalid_argument("permutation tuple length does not match column count");
    long long total = 0;
    for (int k = 2; k <= eta.n; ++k)
        for (int j = 2; j <= k; ++j)
            for (int i = 1; i < j; ++i)
                total += static_cast<long long>(s_stat(eta, w.apply(k, i), k)) *
                         t_stat(eta, w.apply(k, j), k);
    return total;
}

namespace {

// Depth-first enumeration over intervals in (start, end) order, multiplicity
// chosen from the largest feasible value downward so the output is sorted by
// decreasing lexicographic multiplicity vector. The last interval of each
// start group, [i, n], must absorb the remaining capacity of column i since
// no later interval covers it.
void enumerate_rec(int n, int start, int end, std::vector<int>& capacity,
                   std::map<Interval, int>& chosen, std::vector<LaceClass>& out) {
    if (start > n) {
        out.push_back(LaceClass(n, chosen));
        return;
    }
    const int next_start = (end == n) ? start + 1 : start;
    const int next_end = (end == n) ? start + 1 : end + 1;

    int limit = capacity[start - 1];
    for (int c = start; c <= end; ++c) limit = std::min(limit, capacity[c - 1]);

    const bool forced = (end == n);
    const int low = forced ? capacity[start - 1] : 0;
    if (forced && low > limit) return;  // column `start` cannot be filled

    for (int m = limit; m >= low; --m) {
        for (int c = start; c <= end; ++c) capacity[c - 1] -= m;
        if (m > 0) chosen[{start, end}] = m;
        enumerate_rec(n, next_start, next_end, capacity, chosen, out);
        if (m > 0) chosen.erase({start, end});
        for (int c = start; c <= end; ++c) capacity[c - 1] += m;
    }
}

}  // namespace

std::vector<LaceClass> enumerate_classes(const DimVector& d) {
    for (int entry : d)
        if (entry < 0) throw std::invalid_argument("dimension entries must be nonnegative");
    const int n = static_cast<int>(d.size());
    std::vector<LaceClass> out;
    if (n == 0) {
        out.push_back(LaceClass{});
        return out;
    }
    std::vector<int> capacity = d;
    std::map<Interval, int> chosen;
    enumerate_rec(n, 1, 1, capacity, chosen, out);
    return out;
}

LaceClass interval_class(int n, const Interval& interval) {
    return LaceClass(n, {{interval, 1}});
}

std::string to_string(const Interval& interval) {
    return "[" + std::to_string(interval.start) + "," + std::to_string(interval.end) + "]";
}

std::string to_string(const LaceClass& eta) {
    if (eta.mult.empty()) return "-";
    std::string out;
    for (const auto& [interval, count] : eta.mult) {
        if (!out.empty()) out += " + ";
        if (count != 1) out += std::to_string(count) + "*";
        out += to_string(interval);
    }
    return out;
}

std::string to_string(const PermSeq& w) {
    std::string out;
    for (int k = 1; k <= w.n(); ++k) {
        if (k > 1) out += "/";
        for (int i = 1; i <= k; ++i) {
            if (k > 9 && i > 1) out += ",";
            out += std::to_string(w.perms[k - 1][i - 1]);
        }
    }
    return out;
}

PermSeq parse_perm_seq(std::string_view text) {
    std::vector<std::vector<int>> perms;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('/', pos);
        if (next == std::string_view::npos) next = text.size();
        const std::string_view piece = text.substr(pos, next - pos);
        std::vector<int> one_line;
        if (piece.find(',') != std::string_view::npos) {
            std::size_t p = 0;
            while (p <= piece.size()) {
                std::size_t q = piece.find(',', p);
                if (q == std::string_view::npos) q = piece.size();
                int value = 0;
                const auto sub = piece.substr(p, q - p);
                const auto [ptr, ec] = std::from_chars(sub.data(), sub.data() + sub.size(), value);
                if (ec != std::errc() || ptr != sub.data() + sub.size())
                    throw std::invalid_argument("malformed permutation: '" + std::string(piece) +
                                                "'");
                one_line.push_back(value);
                p = q + 1;
                if (q == piece.size()) break;
            }
        } else {
            for (char ch : piece) {
                if (ch < '1' || ch > '9')
                    throw std::invalid_argument("malformed permutation: '" + std::string(piece) +
                                                "'");
                one_line.push_back(ch - '0');
            }
        }
        perms.push_back(std::move(one_line));
        pos = next + 1;
        if (next == text.size()) break;
    }
    return PermSeq(std::move(perms));
}

}  // namespace laceq
