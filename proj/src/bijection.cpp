#include "laceq/bijection.hpp"

#include <algorithm>
#include <string>

namespace laceq {

namespace {

std::string key_name(int i, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(k) + ")";
}
std::string key_name(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

}  // namespace

MultiPartition::MultiPartition(std::vector<Partition> parts, DimVector d)
    : lambdas(std::move(parts)), bound(std::move(d)) {
    if (lambdas.size() != bound.size())
        throw std::invalid_argument("multipartition needs one component per bound entry");
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        if (bound[k] < 0) throw std::invalid_argument("part bounds must be nonnegative");
        if (lambdas[k].part(1) > bound[k])
            throw std::invalid_argument("component " + std::to_string(k + 1) +
                                        " has a part exceeding its bound " +
                                        std::to_string(bound[k]));
    }
}

long long MultiPartition::weight() const {
    long long total = 0;
    for (const Partition& lambda : lambdas) total += lambda.size();
    return total;
}

long long CutData::weight() const {
    long long total = 0;
    for (const auto& [key, rect] : mus) total += rect.area();
    for (const auto& [key, nu] : nus) total += nu.size();
    return total;
}

PhiDetail phi_detail(const MultiPartition& lambda, const PermSeq& w) {
    const DimVector& d = lambda.bound;
    const int n = static_cast<int>(d.size());
    if (w.n() != n)
        throw std::invalid_argument("permutation tuple length does not match multipartition");

    PhiDetail detail;
    auto& t = detail.t;
    auto& s = detail.s;
    t.assign(n + 1, {});
    s.assign(n + 1, {});
    if (n >= 1) {
        t[1] = {0, d[0]};  // t_1^1 = d(1)
        s[1] = {0};
    }

    for (int k = 2; k <= n; ++k) {
        const Partition& lam_k = lambda.lambdas[k - 1];
        std::vector<int> a(k, 0), b(k, 0);  // delta_i^k = a_i x b_i, 1 <= i <= k-1
        int prev_prefix = 0;
        for (int i = 1; i <= k - 1; ++i) {
            prev_prefix += t[k - 1][w.apply(k, i)];
            const Rect delta = durfee_rect(lam_k, d[k - 1] - prev_prefix);
            detail.deltas[{i, k}] = delta;
            a[i] = delta.rows;
            b[i] = delta.cols;
        }
        t[k].assign(k + 1, 0);
        s[k].assign(k, 0);
        int cur_prefix = 0;
        for (int i = 1; i <= k - 1; ++i) {
            const int value = d[k - 1] - b[i] - cur_prefix;
            if (value < 0) throw std::logic_error("phi: negative t parameter");
            t[k][w.apply(k, i)] = value;
            cur_prefix += value;
        }
        t[k][k] = d[k - 1] - cur_prefix;
        if (t[k][k] < 0) throw std::logic_error("phi: negative t parameter");
        for (int i = 1; i <= k - 1; ++i) {
            const int value = a[i] - a[i - 1];
            if (value < 0) throw std::logic_error("phi: negative s parameter");
            s[k][w.apply(k, i)] = value;
        }
    }

    // Lace class: strands i -> j with multiplicity s_i^{j+1}, strands i -> n
    // with multiplicity t_i^n.
    std::map<Interval, int> mult;
    for (int j = 1; j <= n - 1; ++j)
        for (int i = 1; i <= j; ++i)
            if (s[j + 1][i] > 0) mult[{i, j}] += s[j + 1][i];
    for (int i = 1; i <= n; ++i)
        if (n >= 1 && t[n][i] > 0) mult[{i, n}] += t[n][i];
    detail.cut.eta = LaceClass(n, mult);

    // Cut each diagram into bands: band i holds the rectangles mu_{i,j}^k and
    // the leftover nu_i^k; the rows below every band form nu_k^k.
    for (int k = 1; k <= n; ++k) {
        const Partition& lam_k = lambda.lambdas[k - 1];
        int band_top = 0;  // rows consumed so far
        for (int i = 1; i <= k - 1; ++i) {
            const int height = s[k][w.apply(k, i)];
            int base = 0;
            for (int j = i + 1; j <= k; ++j) base += t[k][w.apply(k, j)];
            std::vector<int> rows;
            for (int r = band_top + 1; r <= band_top + height; ++r) {
                const int rest = lam_k.part(r) - base;
                if (rest < 0 || rest > t[k][w.apply(k, i)])
                    throw std::logic_error("phi: band row escapes its box");
                if (rest > 0) rows.push_back(rest);
            }
            detail.cut.nus[{i, k}] = Partition(std::move(rows));
            for (int j = i + 1; j <= k; ++j)
                detail.cut.mus[{i, j, k}] = Rect{height, t[k][w.apply(k, j)]};
            band_top += height;
        }
        std::vector<int> tail_rows;
        for (int r = band_top + 1; r <= lam_k.length(); ++r) {
            if (lam_k.part(r) > t[k][k]) throw std::logic_error("phi: tail row escapes t_k^k");
            tail_rows.push_back(lam_k.part(r));
        }
        detail.cut.nus[{k, k}] = Partition(std::move(tail_rows));
    }
    return detail;
}

CutData phi(const MultiPartition& lambda, const PermSeq& w) {
    return phi_detail(lambda, w).cut;
}

MultiPartition psi(const CutData& cut, const PermSeq& w) {
    const LaceClass& eta = cut.eta;
    const int n = eta.n;
    if (w.n() != n)
        throw std::invalid_argument("permutation tuple length does not match lace class");
    const DimVector d = dim_vector(eta);

    // Everything below is driven by the strand statistics of eta.
    std::vector<std::vector<int>> t(n + 1), s(n + 1);
    for (int k = 1; k <= n; ++k) {
        t[k].assign(k + 1, 0);
        s[k].assign(k, 0);
        for (int i = 1; i <= k; ++i) t[k][i] = t_stat(eta, i, k);
        for (int i = 1; i <= k - 1; ++i) s[k][i] = s_stat(eta, i, k);
    }

    // Validate the rectangle list and the nu boxes before gluing.
    std::size_t expected_mus = 0;
    for (int k = 1; k <= n; ++k)
        for (int j = 2; j <= k; ++j)
            for (int i = 1; i < j; ++i) {
                ++expected_mus;
                const auto it = cut.mus.find({i, j, k});
                if (it == cut.mus.end())
                    throw MalformedCutData("missing rectangle mu" + key_name(i, j, k));
                const Rect expected{s[k][w.apply(k, i)], t[k][w.apply(k, j)]};
                if (!(it->second == expected))
                    throw MalformedCutData("rectangle mu" + key_name(i, j, k) + " must be " +
                                           to_string(expected) + ", got " +
                                           to_string(it->second));
            }
    if (cut.mus.size() != expected_mus)
        throw MalformedCutData("unexpected rectangle keys in cut data");

    std::size_t expected_nus = 0;
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= k; ++i) {
            ++expected_nus;
            const auto it = cut.nus.find({i, k});
            if (it == cut.nus.end())
                throw MalformedCutData("missing partition nu" + key_name(i, k));
            const Partition& nu = it->second;
            if (i < k) {
                if (nu.length() > s[k][w.apply(k, i)] || nu.part(1) > t[k][w.apply(k, i)])
                    throw MalformedCutData("nu" + key_name(i, k) + " overflows its " +
                                           std::to_string(s[k][w.apply(k, i)]) + "x" +
                                           std::to_string(t[k][w.apply(k, i)]) + " box");
            } else if (nu.part(1) > t[k][k]) {
                throw MalformedCutData("nu" + key_name(k, k) + " has parts exceeding " +
                                       std::to_string(t[k][k]));
            }
        }
    if (cut.nus.size() != expected_nus)
        throw MalformedCutData("unexpected partition keys in cut data");

    std::vector<Partition> lambdas;
    lambdas.reserve(n);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> rows;
        for (int i = 1; i <= k - 1; ++i) {
            int base = 0;
            for (int j = i + 1; j <= k; ++j) base += t[k][w.apply(k, j)];
            const int height = s[k][w.apply(k, i)];
            const Partition& nu = cut.nus.at({i, k});
            for (int r = 1; r <= height; ++r) {
                const int row = base + nu.part(r);
                if (row > 0) rows.push_back(row);
            }
        }
        const Partition& tail = cut.nus.at({k, k});
        for (int r = 1; r <= tail.length(); ++r) rows.push_back(tail.part(r));
        lambdas.push_back(Partition(std::move(rows)));
    }
    return MultiPartition(std::move(lambdas), d);
}

bool roundtrip_check(const MultiPartition& lambda, const PermSeq& w) {
    const CutData cut = phi(lambda, w);
    return psi(cut, w) == lambda && cut.weight() == lambda.weight();
}

bool roundtrip_check(const CutData& cut, const PermSeq& w) {
    const MultiPartition lambda = psi(cut, w);
    return phi(lambda, w) == cut && lambda.weight() == cut.weight();
}

namespace {

void multipartition_rec(const DimVector& d, const std::vector<std::vector<Partition>>& choices,
                        std::size_t k, int budget, std::vector<Partition>& current,
                        std::vector<MultiPartition>& out) {
    if (k == d.size()) {
        out.push_back(MultiPartition(current, d));
        return;
    }
    for (const Partition& lambda : choices[k]) {
        if (lambda.size() > budget) break;  // choices are ordered by size
        current.push_back(lambda);
        multipartition_rec(d, choices, k + 1, budget - static_cast<int>(lambda.size()), current,
                           out);
        current.pop_back();
    }
}

}  // namespace

std::vector<MultiPartition> enumerate_multipartitions(const DimVector& d, int max_total) {
    if (max_total < 0) throw std::invalid_argument("weight bound must be nonnegative");
    std::vector<std::vector<Partition>> choices;
    choices.reserve(d.size());
    for (int bound : d) choices.push_back(enumerate_bounded(bound, max_total));
    std::vector<MultiPartition> out;
    std::vector<Partition> current;
    multipartition_rec(d, choices, 0, max_total, current, out);
    return out;
}

std::vector<CutData> enumerate_cut_data(const LaceClass& eta, const PermSeq& w, int max_weight) {
    if (max_weight < 0) throw std::invalid_argument("weight bound must be nonnegative");
    const int n = eta.n;
    if (w.n() != n)
        throw std::invalid_argument("permutation tuple length does not match lace class");

    CutData base;
    base.eta = eta;
    long long fixed = 0;
    std::vector<std::pair<int, int>> slots;  // nu keys in (k, i) order
    std::vector<std::vector<Partition>> choices;
    for (int k = 1; k <= n; ++k) {
        for (int i = 1; i <= k - 1; ++i) {
            const int height = s_stat(eta, w.apply(k, i), k);
            for (int j = i + 1; j <= k; ++j) {
                const Rect rect{height, t_stat(eta, w.apply(k, j), k)};
                base.mus[{i, j, k}] = rect;
                fixed += rect.area();
            }
            slots.push_back({i, k});
            choices.push_back(enumerate_in_box(height, t_stat(eta, w.apply(k, i), k)));
        }
        slots.push_back({k, k});
        choices.push_back(enumerate_bounded(t_stat(eta, k, k), max_weight));
    }

    std::vector<CutData> out;
    if (fixed > max_weight) return out;

    // Depth-first product over the nu slots with the remaining weight budget.
    std::vector<const Partition*> picked(slots.size(), nullptr);
    auto rec = [&](auto&& self, std::size_t slot, long long budget) -> void {
        if (slot == slots.size()) {
            CutData cut = base;
            for (std::size_t idx = 0; idx < slots.size(); ++idx)
                cut.nus[slots[idx]] = *picked[idx];
            out.push_back(std::move(cut));
            return;
        }
        for (const Partition& nu : choices[slot]) {
            if (nu.size() > budget) break;
            picked[slot] = &nu;
            self(self, slot + 1, budget - nu.size());
        }
    };
    rec(rec, 0, max_weight - fixed);
    return out;
}

std::string to_string(const MultiPartition& lambda) {
    std::string out;
    for (std::size_t k = 0; k < lambda.lambdas.size(); ++k) {
        if (k) out += " / ";
        out += to_string(lambda.lambdas[k]);
    }
    return out;
}

MultiPartition parse_multipartition(std::string_view text, const DimVector& bound) {
    std::vector<Partition> lambdas;
    std::size_t pos = 0;
    if (!text.empty()) {
        while (pos <= text.size()) {
            std::size_t next = text.find('/', pos);
            if (next == std::string_view::npos) next = text.size();
            lambdas.push_back(parse_partition(text.substr(pos, next - pos)));
            pos = next + 1;
            if (next == text.size()) break;
        }
    }
    // A single all-empty component list may be written as the empty string.
    if (lambdas.empty()) lambdas.assign(bound.size(), Partition{});
    if (lambdas.size() != bound.size())
        throw std::invalid_argument("expected " + std::to_string(bound.size()) +
                                    " components, got " + std::to_string(lambdas.size()));
    return MultiPartition(std::move(lambdas), bound);
}

}  // namespace laceq
