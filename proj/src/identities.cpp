#include "laceq/identities.hpp"

#include <map>
#include <utility>

namespace laceq {

namespace {

// Per-call cache of the series building blocks; the same inverted Pochhammer
// and binomial factors recur across the class sum.
struct Blocks {
    int trunc_q;
    int trunc_z;
    std::map<int, TruncatedSeries> inv_poch;
    std::map<int, TruncatedSeries> inv_zpoch;
    std::map<std::pair<int, int>, TruncatedSeries> binom;

    Blocks(int tq, int tz) : trunc_q(tq), trunc_z(tz) {}

    const TruncatedSeries& inverse_pochhammer(int m) {
        auto it = inv_poch.find(m);
        if (it == inv_poch.end())
            it = inv_poch.emplace(m, invert(q_pochhammer(m, trunc_q, trunc_z))).first;
        return it->second;
    }
    const TruncatedSeries& inverse_zq_pochhammer(int m) {
        auto it = inv_zpoch.find(m);
        if (it == inv_zpoch.end())
            it = inv_zpoch.emplace(m, invert(zq_pochhammer(m, trunc_q, trunc_z))).first;
        return it->second;
    }
    const TruncatedSeries& gauss(int k, int j) {
        auto it = binom.find({k, j});
        if (it == binom.end())
            it = binom.emplace(std::make_pair(k, j), gauss_binom(k, j, trunc_q, trunc_z)).first;
        return it->second;
    }
    const TruncatedSeries& box(int rows, int cols) {
        auto it = boxes.find({rows, cols});
        if (it == boxes.end())
            it = boxes.emplace(std::make_pair(rows, cols),
                               box_series(rows, cols, trunc_q, trunc_z))
                     .first;
        return it->second;
    }
    std::map<std::pair<int, int>, TruncatedSeries> boxes;
};

TruncatedSeries main_summand(const LaceClass& eta, const PermSeq& w, Blocks& blocks) {
    const long long exponent = durfee_statistic(eta, w);
    if (exponent > blocks.trunc_q) return TruncatedSeries::zero(blocks.trunc_z, blocks.trunc_q);
    TruncatedSeries acc = TruncatedSeries::monomial(1, 0, static_cast<int>(exponent),
                                                    blocks.trunc_z, blocks.trunc_q);
    for (int k = 1; k <= eta.n; ++k) {
        acc = mul(acc, blocks.inverse_pochhammer(t_stat(eta, k, k)));
        for (int i = 1; i <= k - 1; ++i) {
            const int t = t_stat(eta, i, k);
            const int s = s_stat(eta, i, k);
            acc = mul(acc, blocks.gauss(t + s, s));
        }
    }
    return acc;
}

TruncatedSeries pochhammer_product_summand(const LaceClass& eta, long long exponent,
                                           Blocks& blocks) {
    if (exponent > blocks.trunc_q) return TruncatedSeries::zero(blocks.trunc_z, blocks.trunc_q);
    TruncatedSeries acc = TruncatedSeries::monomial(1, 0, static_cast<int>(exponent),
                                                    blocks.trunc_z, blocks.trunc_q);
    for (const auto& [interval, count] : eta.mult)
        acc = mul(acc, blocks.inverse_pochhammer(count));
    return acc;
}

TruncatedSeries enriched_summand(const LaceClass& eta, const PermSeq& w, Blocks& blocks) {
    const long long exponent = durfee_statistic(eta, w);
    if (exponent > blocks.trunc_q) return TruncatedSeries::zero(blocks.trunc_z, blocks.trunc_q);
    TruncatedSeries acc = TruncatedSeries::monomial(1, 0, static_cast<int>(exponent),
                                                    blocks.trunc_z, blocks.trunc_q);
    for (int k = 1; k <= eta.n; ++k) {
        acc = mul(acc, blocks.inverse_zq_pochhammer(t_stat(eta, k, k)));
        // Bands from the bottom up, tracking the total width of the columns
        // to each band's right; a band over empty columns only contributes the
        // rows its own partition provides.
        int base = t_stat(eta, k, k);
        for (int i = k - 1; i >= 1; --i) {
            const int wi = w.apply(k, i);
            const int t = t_stat(eta, wi, k);
            const int s = s_stat(eta, wi, k);
            if (base > 0)
                acc = mul(acc, mul(TruncatedSeries::monomial(1, s, 0, blocks.trunc_z,
                                                             blocks.trunc_q),
                                   blocks.gauss(t + s, s)));
            else
                acc = mul(acc, blocks.box(s, t));
            base += t;
        }
        if (acc.is_zero()) break;
    }
    return acc;
}

IdentityReport make_report(std::string name, const DimVector& d, std::string w_text,
                           std::string orientation, int trunc_q, int trunc_z,
                           TruncatedSeries lhs, TruncatedSeries rhs, long long class_count) {
    IdentityReport report;
    report.identity = std::move(name);
    report.dims = d;
    report.w_text = std::move(w_text);
    report.orientation = std::move(orientation);
    report.trunc_q = trunc_q;
    report.trunc_z = trunc_z;
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    report.first_mismatch = first_mismatch(report.lhs, report.rhs);
    report.equal = !report.first_mismatch.has_value();
    report.class_count = class_count;
    return report;
}

void require_matching_length(const DimVector& d, const PermSeq& w) {
    if (w.n() != static_cast<int>(d.size()))
        throw std::invalid_argument("permutation tuple length does not match dims");
}

}  // namespace

TruncatedSeries lhs_product(const DimVector& d, int trunc_q) {
    Blocks blocks(trunc_q, 0);
    TruncatedSeries acc = TruncatedSeries::constant(1, 0, trunc_q);
    for (int entry : d) acc = mul(acc, blocks.inverse_pochhammer(entry));
    return acc;
}

TruncatedSeries lhs_product_enriched(const DimVector& d, int trunc_q, int trunc_z) {
    Blocks blocks(trunc_q, trunc_z);
    TruncatedSeries acc = TruncatedSeries::constant(1, trunc_z, trunc_q);
    for (int entry : d) acc = mul(acc, blocks.inverse_zq_pochhammer(entry));
    return acc;
}

TruncatedSeries rhs_main(const DimVector& d, const PermSeq& w, int trunc_q) {
    require_matching_length(d, w);
    Blocks blocks(trunc_q, 0);
    TruncatedSeries acc = TruncatedSeries::zero(0, trunc_q);
    for (const LaceClass& eta : enumerate_classes(d)) acc = add(acc, main_summand(eta, w, blocks));
    return acc;
}

TruncatedSeries rhs_main_summand(const LaceClass& eta, const PermSeq& w, int trunc_q) {
    Blocks blocks(trunc_q, 0);
    return main_summand(eta, w, blocks);
}

TruncatedSeries rhs_cancel(const DimVector& d, const PermSeq& w, int trunc_q) {
    require_matching_length(d, w);
    Blocks blocks(trunc_q, 0);
    TruncatedSeries acc = TruncatedSeries::zero(0, trunc_q);
    for (const LaceClass& eta : enumerate_classes(d))
        acc = add(acc, pochhammer_product_summand(eta, durfee_statistic(eta, w), blocks));
    return acc;
}

TruncatedSeries rhs_reineke(const DimVector& d, const OrientationWord& q, int trunc_q,
                            bool crosscheck_oracle) {
    if (q.n() != static_cast<int>(d.size()))
        throw std::invalid_argument("orientation length does not match dims");
    Blocks blocks(trunc_q, 0);
    TruncatedSeries acc = TruncatedSeries::zero(0, trunc_q);
    for (const LaceClass& eta : enumerate_classes(d)) {
        const long long codim = codim_condition(q, eta);
        if (crosscheck_oracle && codim != codim_oracle(q, eta))
            throw std::logic_error("codimension crosscheck failed for class " + to_string(eta) +
                                   " on " + q.arrows);
        acc = add(acc, pochhammer_product_summand(eta, codim, blocks));
    }
    return acc;
}

TruncatedSeries rhs_enriched(const DimVector& d, const PermSeq& w, int trunc_q, int trunc_z) {
    require_matching_length(d, w);
    Blocks blocks(trunc_q, trunc_z);
    TruncatedSeries acc = TruncatedSeries::zero(trunc_z, trunc_q);
    for (const LaceClass& eta : enumerate_classes(d))
        acc = add(acc, enriched_summand(eta, w, blocks));
    return acc;
}

std::optional<IdentityReport::Mismatch> first_mismatch(const TruncatedSeries& lhs,
                                                       const TruncatedSeries& rhs) {
    const int tz = std::min(lhs.trunc_z(), rhs.trunc_z());
    const int tq = std::min(lhs.trunc_q(), rhs.trunc_q());
    auto il = lhs.terms().begin();
    auto ir = rhs.terms().begin();
    const auto skip_outside = [tz, tq](auto& it, const auto& end) {
        while (it != end && (it->first.first > tz || it->first.second > tq)) ++it;
    };
    while (true) {
        skip_outside(il, lhs.terms().end());
        skip_outside(ir, rhs.terms().end());
        const bool l_done = il == lhs.terms().end();
        const bool r_done = ir == rhs.terms().end();
        if (l_done && r_done) return std::nullopt;
        // A key held by only one side differs from the other's implicit zero.
        if (!l_done && (r_done || il->first < ir->first))
            return IdentityReport::Mismatch{il->first.first, il->first.second, il->second, 0};
        if (!r_done && (l_done || ir->first < il->first))
            return IdentityReport::Mismatch{ir->first.first, ir->first.second, 0, ir->second};
        if (il->second != ir->second)
            return IdentityReport::Mismatch{il->first.first, il->first.second, il->second,
                                            ir->second};
        ++il;
        ++ir;
    }
}

IdentityReport verify_main(const DimVector& d, const PermSeq& w, int trunc_q) {
    const long long classes = static_cast<long long>(enumerate_classes(d).size());
    return make_report("main", d, to_string(w), "", trunc_q, 0, lhs_product(d, trunc_q),
                       rhs_main(d, w, trunc_q), classes);
}

IdentityReport verify_cancel(const DimVector& d, const PermSeq& w, int trunc_q) {
    const long long classes = static_cast<long long>(enumerate_classes(d).size());
    return make_report("cancel", d, to_string(w), "", trunc_q, 0, lhs_product(d, trunc_q),
                       rhs_cancel(d, w, trunc_q), classes);
}

IdentityReport verify_reineke(const DimVector& d, const OrientationWord& q, int trunc_q,
                              bool crosscheck_oracle) {
    const long long classes = static_cast<long long>(enumerate_classes(d).size());
    return make_report("reineke", d, to_string(wq(q)), q.arrows, trunc_q, 0,
                       lhs_product(d, trunc_q), rhs_reineke(d, q, trunc_q, crosscheck_oracle),
                       classes);
}

IdentityReport verify_enriched(const DimVector& d, const PermSeq& w, int trunc_q, int trunc_z) {
    const long long classes = static_cast<long long>(enumerate_classes(d).size());
    return make_report("enriched", d, to_string(w), "", trunc_q, trunc_z,
                       lhs_product_enriched(d, trunc_q, trunc_z),
                       rhs_enriched(d, w, trunc_q, trunc_z), classes);
}

IdentityReport verify_identity(const std::string& name, const DimVector& d,
                               const std::optional<PermSeq>& w,
                               const std::optional<OrientationWord>& orientation, int trunc_q,
                               int trunc_z) {
    const auto weight_tuple = [&]() -> PermSeq {
        if (w) return *w;
        if (orientation) return wq(*orientation);
        throw std::invalid_argument(name + " needs a permutation tuple or an orientation");
    };
    const auto with_orientation = [&](IdentityReport report) {
        if (orientation) report.orientation = orientation->arrows;
        return report;
    };
    if (name == "main") return with_orientation(verify_main(d, weight_tuple(), trunc_q));
    if (name == "cancel") return with_orientation(verify_cancel(d, weight_tuple(), trunc_q));
    if (name == "enriched")
        return with_orientation(verify_enriched(d, weight_tuple(), trunc_q, trunc_z));
    if (name == "reineke") {
        if (w) throw std::invalid_argument("reineke takes an orientation, not a tuple");
        if (!orientation) throw std::invalid_argument("reineke needs an orientation");
        return verify_reineke(d, *orientation, trunc_q);
    }
    throw std::invalid_argument("unknown identity '" + name +
                                "' (expected main, cancel, reineke or enriched)");
}

}  // namespace laceq
