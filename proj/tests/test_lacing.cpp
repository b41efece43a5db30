#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "laceq/lacing.hpp"

using namespace laceq;

namespace {

// The five classes with dimension vector (1,2,1), in the canonical
// (decreasing lexicographic) order the library enumerates them.
std::vector<LaceClass> classes_121() {
    return {
        LaceClass(3, {{{1, 1}, 1}, {{2, 2}, 2}, {{3, 3}, 1}}),
        LaceClass(3, {{{1, 1}, 1}, {{2, 2}, 1}, {{2, 3}, 1}}),
        LaceClass(3, {{{1, 2}, 1}, {{2, 2}, 1}, {{3, 3}, 1}}),
        LaceClass(3, {{{1, 2}, 1}, {{2, 3}, 1}}),
        LaceClass(3, {{{1, 3}, 1}, {{2, 2}, 1}}),
    };
}

}  // namespace

TEST_CASE("LaceClass validation and basics") {
    CHECK_THROWS_AS(LaceClass(2, {{{1, 3}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(LaceClass(2, {{{2, 1}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(LaceClass(2, {{{1, 1}, -1}}), std::invalid_argument);

    // Zero multiplicities are dropped.
    const LaceClass eta(2, {{{1, 1}, 0}, {{1, 2}, 2}});
    CHECK(eta.mult.size() == 1);
    CHECK(eta.multiplicity({1, 2}) == 2);
    CHECK(eta.multiplicity({1, 1}) == 0);
}

TEST_CASE("dim_vector") {
    const LaceClass example22(
        3, {{{1, 3}, 2}, {{2, 3}, 1}, {{2, 2}, 3}, {{3, 3}, 2}, {{1, 1}, 1}});
    CHECK(dim_vector(example22) == DimVector{3, 6, 5});

    CHECK(dim_vector(LaceClass(4, {})) == DimVector{0, 0, 0, 0});
    CHECK(dim_vector(LaceClass(3, {{{1, 2}, 1}, {{2, 3}, 1}})) == DimVector{1, 2, 1});
}

TEST_CASE("s_stat and t_stat") {
    const LaceClass fifth(3, {{{1, 3}, 1}, {{2, 2}, 1}});
    CHECK(s_stat(fifth, 2, 3) == 1);
    CHECK(t_stat(fifth, 1, 3) == 1);

    const LaceClass fourth(3, {{{1, 2}, 1}, {{2, 3}, 1}});
    CHECK(s_stat(fourth, 1, 3) == 1);
    CHECK(t_stat(fourth, 2, 3) == 1);

    const LaceClass empty(3, {});
    for (int k = 2; k <= 3; ++k)
        for (int i = 1; i < k; ++i) CHECK(s_stat(empty, i, k) == 0);

    CHECK_THROWS_AS(s_stat(fifth, 2, 2), IndexOutOfRange);
    CHECK_THROWS_AS(s_stat(fifth, 0, 2), IndexOutOfRange);
    CHECK_THROWS_AS(t_stat(fifth, 3, 2), IndexOutOfRange);
    CHECK_THROWS_AS(t_stat(fifth, 1, 4), IndexOutOfRange);
}

TEST_CASE("t_stat at the first column counts everything through it") {
    for (const LaceClass& eta : enumerate_classes({2, 3, 1}))
        CHECK(t_stat(eta, 1, 1) == dim_vector(eta)[0]);
}

TEST_CASE("leftstrands") {
    CHECK(leftstrands(LaceClass(3, {{{1, 2}, 1}, {{2, 3}, 1}}), 0) == 0);
    CHECK(leftstrands(LaceClass(3, {{{1, 2}, 1}, {{2, 3}, 1}}), 2) == 1);
    CHECK(leftstrands(LaceClass(2, {{{1, 1}, 4}}), 1) == 4);
    CHECK_THROWS_AS(leftstrands(LaceClass(2, {}), 2), IndexOutOfRange);
}

TEST_CASE("durfee_statistic on the two-column family") {
    // With d = (k,k) the class with j strands [1,1] has r_w = j^2.
    for (int k = 1; k <= 5; ++k) {
        const PermSeq w = PermSeq::identity(2);
        for (int j = 0; j <= k; ++j) {
            std::map<Interval, int> mult;
            if (j > 0) mult[{1, 1}] = j;
            if (k - j > 0) mult[{1, 2}] = k - j;
            if (j > 0) mult[{2, 2}] = j;
            const LaceClass eta(2, mult);
            CHECK(dim_vector(eta) == DimVector{k, k});
            CHECK(durfee_statistic(eta, w) == static_cast<long long>(j) * j);
        }
    }
}

TEST_CASE("durfee_statistic on the (1,2,1) table") {
    const PermSeq w = PermSeq::identity(3);
    const auto expected = std::vector<long long>{4, 2, 2, 1, 0};
    const auto classes = classes_121();
    for (std::size_t idx = 0; idx < classes.size(); ++idx)
        CHECK(durfee_statistic(classes[idx], w) == expected[idx]);

    CHECK(durfee_statistic(LaceClass(3, {}), w) == 0);
}

TEST_CASE("enumerate_classes") {
    const auto classes = enumerate_classes({1, 2, 1});
    REQUIRE(classes.size() == 5);
    CHECK(classes == classes_121());

    for (int k = 0; k <= 5; ++k)
        CHECK(enumerate_classes({k, k}).size() == static_cast<std::size_t>(k) + 1);

    const auto empty_dim = enumerate_classes({0, 0, 0});
    REQUIRE(empty_dim.size() == 1);
    CHECK(empty_dim[0].mult.empty());

    CHECK_THROWS_AS(enumerate_classes({-1}), std::invalid_argument);
}

TEST_CASE("enumerate_classes is exact and canonically ordered") {
    const DimVector d{2, 3, 2};
    const auto classes = enumerate_classes(d);
    std::set<std::string> seen;
    for (const LaceClass& eta : classes) {
        CHECK(dim_vector(eta) == d);
        CHECK(seen.insert(to_string(eta)).second);  // no duplicates
    }
    // Decreasing lexicographic multiplicity vectors over sorted intervals.
    auto mult_vector = [&](const LaceClass& eta) {
        std::vector<int> v;
        for (int i = 1; i <= eta.n; ++i)
            for (int j = i; j <= eta.n; ++j) v.push_back(eta.multiplicity({i, j}));
        return v;
    };
    for (std::size_t i = 1; i < classes.size(); ++i)
        CHECK(mult_vector(classes[i - 1]) > mult_vector(classes[i]));
}

TEST_CASE("statistic recursion and column count across enumerated classes") {
    for (const DimVector& d : {DimVector{1, 2, 1}, DimVector{2, 2, 2}, DimVector{3, 1, 2}}) {
        for (const LaceClass& eta : enumerate_classes(d)) {
            const int n = eta.n;
            // t_i^k + s_i^k = t_i^{k-1}
            for (int k = 2; k <= n; ++k)
                for (int i = 1; i < k; ++i)
                    CHECK(t_stat(eta, i, k) + s_stat(eta, i, k) == t_stat(eta, i, k - 1));
            // column count: sum_i t_i^k = d(k)
            for (int k = 1; k <= n; ++k) {
                int total = 0;
                for (int i = 1; i <= k; ++i) total += t_stat(eta, i, k);
                CHECK(total == d[k - 1]);
            }
            // boundary identifications
            for (int k = 2; k <= n; ++k)
                for (int i = 1; i < k; ++i)
                    CHECK(s_stat(eta, i, k) == eta.multiplicity({i, k - 1}));
            for (int i = 1; i <= n; ++i)
                CHECK(t_stat(eta, i, n) == eta.multiplicity({i, n}));
        }
    }
}

TEST_CASE("PermSeq validation") {
    CHECK_NOTHROW(PermSeq({{1}, {1, 2}, {1, 2, 3}}));
    CHECK_NOTHROW(PermSeq({{1}, {1, 2}, {2, 1, 3}}));
    // w^(2)(2) != 2
    CHECK_THROWS_AS(PermSeq({{1}, {2, 1}}), std::invalid_argument);
    // not a permutation
    CHECK_THROWS_AS(PermSeq({{1}, {2, 2}}), std::invalid_argument);
    // wrong component size
    CHECK_THROWS_AS(PermSeq({{1}, {1, 2, 3}}), std::invalid_argument);

    const PermSeq w({{1}, {1, 2}, {2, 1, 3}});
    CHECK(w.apply(3, 1) == 2);
    CHECK(w.apply(3, 3) == 3);
    CHECK_THROWS_AS(w.apply(4, 1), IndexOutOfRange);
    CHECK_THROWS_AS(w.apply(2, 3), IndexOutOfRange);

    CHECK(PermSeq::identity(3) == PermSeq({{1}, {1, 2}, {1, 2, 3}}));
}

TEST_CASE("perm seq text forms") {
    CHECK(to_string(PermSeq({{1}, {1, 2}, {2, 1, 3}})) == "1/12/213");
    CHECK(parse_perm_seq("1/12/213") == PermSeq({{1}, {1, 2}, {2, 1, 3}}));
    CHECK(parse_perm_seq("1") == PermSeq::identity(1));
    CHECK_THROWS_AS(parse_perm_seq("1/21"), std::invalid_argument);
    CHECK_THROWS_AS(parse_perm_seq("1/1x"), std::invalid_argument);

    // Past S_9 the one-line form switches to commas.
    const PermSeq big = PermSeq::identity(10);
    const std::string text = to_string(big);
    CHECK(text.substr(text.rfind('/') + 1) == "1,2,3,4,5,6,7,8,9,10");
    CHECK(parse_perm_seq(text) == big);
}

TEST_CASE("lace class text form") {
    const LaceClass eta(3, {{{1, 3}, 2}, {{2, 3}, 1}, {{2, 2}, 3}, {{3, 3}, 2}, {{1, 1}, 1}});
    CHECK(to_string(eta) == "[1,1] + 2*[1,3] + 3*[2,2] + [2,3] + 2*[3,3]");
    CHECK(to_string(LaceClass(3, {})) == "-");
}
