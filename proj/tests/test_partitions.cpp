#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "partition.hpp"
#include "qseries.hpp"

using namespace qtc;

namespace {

// classical partition-count oracle p(n) by Euler recurrence-free DP
long partition_count(int n) {
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) p[m] += p[m - k];
    return p[n];
}

} // namespace

TEST_CASE("enumerate_partitions order and counts") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());

    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));

    CHECK(partitions_of(6).size() == 11);
    for (int n = 0; n <= 10; ++n)
        CHECK((long)partitions_of(n).size() == partition_count(n));
}

TEST_CASE("cell statistics") {
    CHECK(cell_stats(Partition({1}), 1, 1).arm == 0);
    CHECK(cell_stats(Partition({1}), 1, 1).leg == 0);
    CHECK(cell_stats(Partition({1}), 1, 1).coarm == 0);
    CHECK(cell_stats(Partition({1}), 1, 1).coleg == 0);

    auto s = cell_stats(Partition({2, 1}), 1, 1);
    CHECK(s.arm == 1);
    CHECK(s.leg == 1);
    CHECK(s.coarm == 0);
    CHECK(s.coleg == 0);

    s = cell_stats(Partition({3, 2}), 2, 1);
    CHECK(s.arm == 1);
    CHECK(s.leg == 1);
    CHECK(s.coarm == 1);
    CHECK(s.coleg == 0);

    CHECK_THROWS_AS(cell_stats(Partition({2, 1}), 2, 2), std::invalid_argument);
}

TEST_CASE("conjugation involutions and stat swap") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& mu : partitions_of(n)) {
            CHECK(mu.conjugate().conjugate() == mu);
            // conjugation swaps (arm,leg) and (coarm,coleg)
            for (int row = 1; row <= mu.length(); ++row) {
                for (int col = 1; col <= mu.parts()[row - 1]; ++col) {
                    auto a = cell_stats(mu, col, row);
                    auto b = cell_stats(mu.conjugate(), row, col);
                    CHECK(a.arm == b.leg);
                    CHECK(a.leg == b.arm);
                    CHECK(a.coarm == b.coleg);
                    CHECK(a.coleg == b.coarm);
                }
            }
        }
    }
}

TEST_CASE("partition constants: small closed forms") {
    {
        const auto& d = partition_constants(Partition({1}));
        CHECK(d.B == QTRat(1));
        CHECK(d.T == QTRat(1));
        CHECK(d.Pi == QTRat(1));
        QTRat M = (QTRat(1) - QTRat::q()) * (QTRat(1) - QTRat::t());
        CHECK(d.D == M - QTRat(1));
    }
    {
        const auto& d = partition_constants(Partition({2, 1}));
        CHECK(d.B == QTRat(1) + QTRat::q() + QTRat::t());
        CHECK(d.T == QTRat::q() * QTRat::t());
    }
    for (int n = 1; n <= 6; ++n) {
        const auto& d = partition_constants(Partition({n}));
        CHECK(d.B == QTRat(q_int(n)));
        CHECK(d.T == QTRat(QTPoly::q((int)choose2(n))));
    }
    // Pi of the empty partition is 1 by convention
    CHECK(partition_constants(Partition()).Pi == QTRat(1));
    CHECK(partition_constants(Partition()).B == QTRat(0));
}

TEST_CASE("constants under conjugation: B and w swap q,t") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& mu : partitions_of(n)) {
            const auto& d = partition_constants(mu);
            const auto& dc = partition_constants(mu.conjugate());
            CHECK(dc.B == d.B.swapped_qt());
            CHECK(dc.w == d.w.swapped_qt());
            CHECK(dc.T == d.T.swapped_qt());
            CHECK_FALSE(d.w.is_zero());
        }
    }
}

TEST_CASE("z_mu from multiplicities") {
    CHECK(Partition({2}).z() == Rational(2));
    CHECK(Partition({1, 1}).z() == Rational(2));
    CHECK(Partition({2, 1}).z() == Rational(2));
    CHECK(Partition({3, 2, 2, 1, 1, 1}).z() == Rational(3 * 2 * 2 * 2 * 1 * 6));
}

TEST_CASE("dominance order sanity") {
    CHECK(dominated_by(Partition({1, 1, 1}), Partition({3})));
    CHECK(dominated_by(Partition({2, 1}), Partition({3})));
    CHECK_FALSE(dominated_by(Partition({3}), Partition({2, 1})));
    CHECK(dominated_by(Partition({2, 2}), Partition({3, 1})));
}
