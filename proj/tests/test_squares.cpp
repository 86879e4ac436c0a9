#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "squares.hpp"

using namespace qtc;

namespace {

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

SquarePath sq_figure() {
    // the worked labelled square path ending east, n = 11
    SquarePath p;
    p.n = 11;
    p.ends_east = true;
    p.w = {0, 1, 0, -4, -3, -3, -2, -1, 0, -1, 0};
    p.labels = {4, 6, 11, 7, 10, 1, 2, 5, 8, 3, 9};
    return p;
}

} // namespace

TEST_CASE("worked example: the labelled square path figure") {
    SquarePath p = sq_figure();
    auto s = square_statistics(p);
    CHECK(s.c == 4);
    CHECK(s.j == 3);
    CHECK(s.area == 24);
}

TEST_CASE("worked example: square bounce figure") {
    SquarePath p = sq_figure();
    p.labels.clear();
    auto s = square_statistics(p);
    CHECK(s.bounce == 15);
}

TEST_CASE("Dyck paths as square paths keep the Dyck statistics") {
    SquarePath p;
    p.n = 2;
    p.ends_east = true;
    p.w = {0, 1};
    auto s = square_statistics(p);
    CHECK(s.c == 0);
    CHECK(s.j == 0);
    CHECK(s.area == 1);
    CHECK(s.bounce == 0);
}

TEST_CASE("counts: |SQ^E(1)| = 1 and total = binom(2n, n)") {
    long cnt = 0;
    generate_squares(1, true, false, [&](const SquarePath&) { ++cnt; });
    CHECK(cnt == 1);
    for (int n = 1; n <= 6; ++n) {
        long tot = 0;
        generate_squares(n, true, false, [&](const SquarePath&) { ++tot; });
        generate_squares(n, false, false, [&](const SquarePath&) { ++tot; });
        CHECK(tot == binom(2 * n, n));
    }
}

TEST_CASE("area and dinv are nonnegative, n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (bool east : {true, false})
            generate_squares(n, east, false, [&](const SquarePath& p) {
                auto s = square_statistics(p);
                CHECK(s.area >= 0);
                CHECK(s.dinv >= 0);
                CHECK(s.bounce >= 0);
            });
}

TEST_CASE("dinv reading word of a small labelled square") {
    SquarePath p;
    p.n = 2;
    p.ends_east = true;
    p.w = {-1, 0};
    p.labels = {1, 2};
    CHECK(square_dinv_word(p) == std::vector<int>({1, 2}));
    CHECK(square_reverse_dinv_word(p) == std::vector<int>({2, 1}));
}
