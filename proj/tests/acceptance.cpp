// Acceptance suite: drives every top-level requirement end to end and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "laceq/bijection.hpp"
#include "laceq/cli.hpp"
#include "laceq/identities.hpp"
#include "laceq/quiver.hpp"
#include "oracles.hpp"

using namespace laceq;

namespace {

int cli_quiet(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    return run_cli(args, out, err);
}

std::string cli_stdout(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    run_cli(args, out, err);
    return out.str();
}

std::vector<OrientationWord> all_orientations(int n) {
    std::vector<OrientationWord> out;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::string word(n - 1, 'R');
        for (int i = 0; i < n - 1; ++i)
            if (mask & (1 << i)) word[i] = 'L';
        out.push_back(OrientationWord(word));
    }
    return out;
}

std::vector<DimVector> all_dims(int n, int max_entry) {
    std::vector<DimVector> out{DimVector{}};
    for (int col = 0; col < n; ++col) {
        std::vector<DimVector> next;
        for (const DimVector& d : out)
            for (int entry = 0; entry <= max_entry; ++entry) {
                DimVector extended = d;
                extended.push_back(entry);
                next.push_back(std::move(extended));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<PermSeq> all_weight_tuples(int n) {
    std::vector<std::vector<std::vector<int>>> partial{{}};
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<std::vector<int>>> next;
        std::vector<int> base(k);
        for (int i = 0; i < k - 1; ++i) base[i] = i + 1;
        base[k - 1] = k;
        do {
            for (const auto& prefix : partial) {
                auto extended = prefix;
                extended.push_back(base);
                next.push_back(std::move(extended));
            }
        } while (std::next_permutation(base.begin(), base.end() - 1));
        partial = std::move(next);
    }
    std::vector<PermSeq> out;
    out.reserve(partial.size());
    for (auto& tuple : partial) out.push_back(PermSeq(std::move(tuple)));
    return out;
}

bool criterion_1(std::string& detail) {
    const DimVector d{1, 2, 1};
    const PermSeq w = PermSeq::identity(3);
    const auto classes = enumerate_classes(d);
    if (classes.size() != 5) {
        detail = "expected 5 classes, got " + std::to_string(classes.size());
        return false;
    }
    const std::vector<long long> stats{4, 2, 2, 1, 0};
    for (std::size_t idx = 0; idx < 5; ++idx)
        if (durfee_statistic(classes[idx], w) != stats[idx]) {
            detail = "Durfee statistic mismatch at class " + std::to_string(idx + 1);
            return false;
        }
    const int N = 30;
    const auto ip = [N](int k) { return invert(q_pochhammer(k, N)); };
    const auto qp = [N](int e) { return TruncatedSeries::monomial(1, 0, e, 0, N); };
    const std::vector<TruncatedSeries> table = {
        mul(qp(4), mul(mul(ip(1), ip(2)), ip(1))),  // q^4/((1-q)^3(1-q^2))
        mul(qp(2), mul(mul(ip(1), ip(1)), ip(1))),  // q^2/(1-q)^3
        mul(qp(2), mul(mul(ip(1), ip(1)), ip(1))),  // q^2/(1-q)^3
        mul(qp(1), mul(ip(1), ip(1))),              // q/(1-q)^2
        mul(ip(1), ip(1)),                          // 1/(1-q)^2
    };
    for (std::size_t idx = 0; idx < 5; ++idx)
        if (!(rhs_main_summand(classes[idx], w, N) == table[idx])) {
            detail = "summand mismatch at class " + std::to_string(idx + 1);
            return false;
        }
    if (cli_quiet({"verify", "main", "--dims", "1,2,1", "--w", "1/12/123", "--N", "30"}) != 0) {
        detail = "verify main exited nonzero";
        return false;
    }
    return true;
}

bool criterion_2(std::string& detail) {
    const int N = 40;
    for (int k = 1; k <= 6; ++k) {
        const std::string dims = std::to_string(k) + "," + std::to_string(k);
        if (cli_quiet({"verify", "main", "--dims", dims, "--w", "1/12", "--N", "40"}) != 0) {
            detail = "verify main failed for k=" + std::to_string(k);
            return false;
        }
        const TruncatedSeries rhs = rhs_main({k, k}, PermSeq::identity(2), N);
        TruncatedSeries reduced(0, N);
        for (int j = 0; j <= k; ++j)
            reduced = add(reduced, mul(TruncatedSeries::monomial(1, 0, j * j, 0, N),
                                       mul(gauss_binom(k, j, N),
                                           invert(q_pochhammer(j, N)))));
        if (!(mul(q_pochhammer(k, N), rhs) == reduced)) {
            detail = "structural reduction failed for k=" + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool criterion_3(std::string& detail) {
    int runs = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const DimVector& d : all_dims(n, 3)) {
            std::string dims;
            for (std::size_t i = 0; i < d.size(); ++i)
                dims += (i ? "," : "") + std::to_string(d[i]);
            for (const OrientationWord& q : all_orientations(n)) {
                ++runs;
                if (cli_quiet({"verify", "reineke", "--dims", dims, "--orientation", q.arrows,
                               "--N", "25"}) != 0) {
                    detail = "verify reineke failed for dims " + dims + ", orientation " +
                             q.arrows;
                    return false;
                }
            }
        }
    }
    detail = std::to_string(runs) + " verifications";
    return true;
}

bool criterion_4(std::string& detail) {
    long long checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (const DimVector& d : all_dims(n, 3))
            for (const OrientationWord& q : all_orientations(n)) {
                const PermSeq w = wq(q);
                for (const LaceClass& eta : enumerate_classes(d)) {
                    const long long statistic = durfee_statistic(eta, w);
                    const long long condition = codim_condition(q, eta);
                    const long long oracle = codim_oracle(q, eta);
                    ++checked;
                    if (statistic != condition || condition != oracle) {
                        detail = "disagreement (" + std::to_string(statistic) + ", " +
                                 std::to_string(condition) + ", " + std::to_string(oracle) +
                                 ") at " + to_string(eta) + " on " + q.arrows;
                        return false;
                    }
                }
            }
    detail = std::to_string(checked) + " class/orientation pairs";
    return true;
}

bool criterion_5(std::string& detail) {
    int compared = 0;
    for (int n = 1; n <= 6; ++n)
        for (const OrientationWord& q : all_orientations(n)) {
            ++compared;
            if (box_strands(wq(q), n) != condition_strands(q)) {
                detail = "set mismatch for orientation " + q.arrows;
                return false;
            }
        }
    detail = std::to_string(compared) + " orientations";
    return true;
}

bool criterion_6(std::string& detail) {
    long long forward = 0, backward = 0;
    for (int n = 1; n <= 3; ++n) {
        const auto tuples = all_weight_tuples(n);
        for (const DimVector& d : all_dims(n, 3)) {
            for (const PermSeq& w : tuples) {
                for (const MultiPartition& lambda : enumerate_multipartitions(d, 10)) {
                    ++forward;
                    if (!roundtrip_check(lambda, w)) {
                        detail = "phi/psi failed at " + to_string(lambda);
                        return false;
                    }
                }
                for (const LaceClass& eta : enumerate_classes(d)) {
                    for (const CutData& cut : enumerate_cut_data(eta, w, 8)) {
                        ++backward;
                        if (!roundtrip_check(cut, w)) {
                            detail = "psi/phi failed at class " + to_string(eta);
                            return false;
                        }
                    }
                }
            }
        }
    }
    detail = std::to_string(forward) + " multipartitions, " + std::to_string(backward) +
             " cut data";
    return true;
}

bool criterion_7(std::string& detail) {
    const MultiPartition lambda(
        {Partition({2, 1}), Partition({5, 1}), Partition({3, 3, 2, 1, 1})}, {3, 6, 5});

    const PhiDetail straight = phi_detail(lambda, wq(OrientationWord("RR")));
    const bool straight_ok =
        straight.deltas.at({1, 2}) == Rect{1, 4} && straight.deltas.at({1, 3}) == Rect{0, 3} &&
        straight.deltas.at({2, 3}) == Rect{3, 2} &&
        straight.t[2] == std::vector<int>{0, 2, 4} &&
        straight.t[3] == std::vector<int>{0, 2, 1, 2} &&
        straight.cut.eta ==
            LaceClass(3, {{{1, 1}, 1}, {{1, 3}, 2}, {{2, 2}, 3}, {{2, 3}, 1}, {{3, 3}, 2}});
    if (!straight_ok) {
        detail = "equioriented cut disagrees";
        return false;
    }

    const PhiDetail alternating = phi_detail(lambda, wq(OrientationWord("RL")));
    const bool alternating_ok =
        alternating.deltas.at({1, 2}) == Rect{1, 4} &&
        alternating.deltas.at({1, 3}) == Rect{2, 3} &&
        alternating.deltas.at({2, 3}) == Rect{3, 2} &&
        alternating.t[2] == std::vector<int>{0, 2, 4} &&
        alternating.t[3] == std::vector<int>{0, 1, 2, 2} &&
        alternating.cut.eta == LaceClass(3, {{{1, 1}, 1},
                                             {{1, 2}, 1},
                                             {{1, 3}, 1},
                                             {{2, 2}, 2},
                                             {{2, 3}, 2},
                                             {{3, 3}, 2}});
    if (!alternating_ok) {
        detail = "bipartite cut disagrees";
        return false;
    }
    return true;
}

bool criterion_8(std::string& detail) {
    for (const char* orientation : {"RR", "RL", "LR", "LL"})
        if (cli_quiet({"verify", "enriched", "--dims", "1,2,1", "--orientation", orientation,
                       "--N", "20", "--Nz", "10"}) != 0) {
            detail = std::string("verify enriched failed for 1,2,1 / ") + orientation;
            return false;
        }
    for (const char* orientation : {"R", "L"})
        if (cli_quiet({"verify", "enriched", "--dims", "2,2", "--orientation", orientation,
                       "--N", "20", "--Nz", "10"}) != 0) {
            detail = std::string("verify enriched failed for 2,2 / ") + orientation;
            return false;
        }
    return true;
}

bool criterion_9(std::string& detail) {
    const int N = 25;
    long long checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (const DimVector& d : all_dims(n, 4)) {
            const TruncatedSeries lhs = lhs_product(d, N);
            const auto counts = testoracle::multipartition_counts(d, N);
            for (int r = 0; r <= N; ++r) {
                ++checked;
                if (coeff(lhs, 0, r) != to_integer(counts[r])) {
                    detail = "coefficient mismatch at r=" + std::to_string(r);
                    return false;
                }
            }
        }
    detail = std::to_string(checked) + " coefficients";
    return true;
}

bool criterion_10(std::string& detail) {
    const std::string out = cli_stdout({"wq", "RRLLR"});
    if (out != "1/12/123/3214/32145/541236\n") {
        detail = "got '" + out + "'";
        return false;
    }
    return true;
}

struct Criterion {
    int id;
    const char* label;
    double time_limit_seconds;  // 0 = untimed
    std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "five-class table reproduction and verify main at N=30", 1.0, criterion_1},
        {2, "classical Durfee square identity, k=1..6 at N=40", 5.0, criterion_2},
        {3, "Reineke identity sweep, n<=4, entries<=3, all orientations at N=25", 600.0,
         criterion_3},
        {4, "Durfee statistic = condition formula = Ext oracle, n<=4, entries<=3", 0.0,
         criterion_4},
        {5, "box strands match condition strands, n<=6, all orientations", 0.0, criterion_5},
        {6, "bijection round trips, n<=3, entries<=3, weights<=10/8", 0.0, criterion_6},
        {7, "worked three-column cut golden values", 0.0, criterion_7},
        {8, "enriched identity at bidegree (20,10)", 30.0, criterion_8},
        {9, "multipartition count oracle, n<=4, entries<=4, r<=25", 0.0, criterion_9},
        {10, "orientation-to-permutation golden value", 0.0, criterion_10},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criterion.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && criterion.time_limit_seconds > 0 && seconds > criterion.time_limit_seconds) {
            ok = false;
            detail = "time limit " + std::to_string(criterion.time_limit_seconds) +
                     "s exceeded";
        }
        std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", criterion.id,
                    criterion.label, seconds, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    return failures;
}
