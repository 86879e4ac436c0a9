#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polyomino.hpp"

using namespace qtc;

namespace {

Polyomino lpp_figure() {
    // the worked 12 x 7 labelled parallelogram polyomino
    Polyomino p;
    p.kind = PolyKind::Parallelogram;
    p.m = 12;
    p.n = 7;
    p.red = "NNNEEENEENEEENNEEEE";
    p.green = "EEENEENNEENEEENEENN";
    p.labels = {2, 4, 5, 3, 1, 2, 6};
    return p;
}

Polyomino reduced_figure() {
    // the 6 x 11 reduced polyomino with area word 0 0b 1 1b 2 1b 1b 1 0b 0b 1 0b 0b 0b 1 1 1b 1b
    Polyomino p;
    p.kind = PolyKind::Reduced;
    p.m = 6;
    p.n = 11;
    p.red = "NNENNEENNENNNENNE";
    p.green = "EENNNENNENNNEENNN";
    return p;
}

std::vector<BarredLetter> letters(const std::string& s) {
    // encode as "0 0b 1 ..." with 'b' marking bars
    std::vector<BarredLetter> out;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ') { ++i; continue; }
        int v = 0;
        while (i < s.size() && isdigit(s[i])) v = v * 10 + (s[i++] - '0');
        bool bar = (i < s.size() && s[i] == 'b');
        if (bar) ++i;
        out.push_back({v, bar});
    }
    return out;
}

long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

} // namespace

TEST_CASE("area words of the two worked figures") {
    Polyomino p = lpp_figure();
    p.labels.clear();
    auto w = area_word(p);
    CHECK(w == letters("0b 1 1b 2 2b 3 2 2 2b 1 1b 2 1 1 1b 2 2b 2 2"));

    Polyomino r = reduced_figure();
    auto wr = area_word(r);
    CHECK(wr == letters("0 0b 1 1b 2 1b 1b 1 0b 0b 1 0b 0b 0b 1 1 1b 1b"));

    // 1x1 parallelogram polyomino: area word 0b 1
    Polyomino one;
    one.kind = PolyKind::Parallelogram;
    one.m = 1;
    one.n = 1;
    one.red = "NE";
    one.green = "EN";
    CHECK(area_word(one) == letters("0b 1"));
}

TEST_CASE("area word round trip") {
    Polyomino p = lpp_figure();
    p.labels.clear();
    Polyomino q = polyomino_from_area_word(PolyKind::Parallelogram, area_word(p));
    CHECK(q.red == p.red);
    CHECK(q.green == p.green);
    Polyomino r = reduced_figure();
    Polyomino q2 = polyomino_from_area_word(PolyKind::Reduced, area_word(r));
    CHECK(q2.red == r.red);
    CHECK(q2.green == r.green);
}

TEST_CASE("worked example: statistics of the labelled figure") {
    Polyomino p = lpp_figure();
    auto s = polyomino_statistics(p);
    CHECK(s.area == 30);
    CHECK(s.bounce == 41);
    CHECK(s.dinv == 35);
    CHECK(s.parking_word ==
          std::vector<int>({5, 4, 2, 0, 0, 0, 0, 3, 1, 0, 0, 0, 0, 0, 6, 2, 0, 0}));
    CHECK(s.pmaj == 33);
}

TEST_CASE("bounce words of the worked figures") {
    Polyomino p = lpp_figure();
    p.labels.clear();
    CHECK(polyomino_bounce_word(p) ==
          letters("0b 1 1 1 1b 1b 1b 1b 2 2b 2b 3 3b 3b 3b 4 4 4b 4b"));
    Polyomino r = reduced_figure();
    CHECK(polyomino_bounce_word(r) ==
          letters("0 0 0b 0b 0b 0b 1 1b 1b 2 2b 2b 2b 3 3 3b 3b"));
}

TEST_CASE("counts: PP(2,2), PP(1,n), reduced vs Catalan") {
    long c = 0;
    generate_polyominoes(PolyKind::Parallelogram, 2, 2, [&](const Polyomino&) { ++c; });
    CHECK(c == 3);
    for (int n = 1; n <= 5; ++n) {
        long c1 = 0;
        generate_polyominoes(PolyKind::Parallelogram, 1, n,
                             [&](const Polyomino&) { ++c1; });
        CHECK(c1 == 1);
    }
    // reduced polyominoes with semi-perimeter s <-> Dyck paths of size s+1
    for (int s = 0; s <= 6; ++s) {
        long tot = 0;
        for (int m = 0; m <= s; ++m)
            generate_polyominoes(PolyKind::Reduced, m, s - m,
                                 [&](const Polyomino&) { ++tot; });
        CHECK(tot == catalan(s + 1));
    }
}

TEST_CASE("statistics bounds area, bounce, dinv >= m+n-1 (parallelogram)") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            generate_polyominoes(PolyKind::Parallelogram, m, n, [&](const Polyomino& p) {
                CHECK(polyomino_area(p) >= m + n - 1);
                CHECK(polyomino_bounce(p) >= m + n - 1);
                CHECK(polyomino_dinv(p) >= m + n - 1);
            });
}

TEST_CASE("newdinv of the bijection figure") {
    Polyomino p;
    p.kind = PolyKind::Parallelogram;
    p.m = 7;
    p.n = 6;
    p.red = "NNNEEENNENEEE";
    p.green = "EEENENEEENNNN";
    p.labels = {1, 2, 5, 4, 6, 3};
    CHECK(newdinv(p, true) == 4);
    CHECK(newdinv(p, false) == 6);
    auto inv = newdinv_inversions(p, true);
    std::set<std::pair<int, int>> got(inv.begin(), inv.end());
    std::set<std::pair<int, int>> expect{{3, 6}, {7, 4}, {7, 5}, {8, 9}};
    CHECK(got == expect);
    // 1x1 polyomino
    Polyomino one;
    one.kind = PolyKind::Parallelogram;
    one.m = 1;
    one.n = 1;
    one.red = "NE";
    one.green = "EN";
    CHECK(newdinv(one, false) == 0);
}

TEST_CASE("pmaj <= bounce on labelled parallelogram polyominoes") {
    // exhaustive for small sizes with permutation labels
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            generate_polyominoes(PolyKind::Parallelogram, m, n, [&](const Polyomino& base) {
                // label rows 1..n in increasing order: pmaj == bounce
                Polyomino p = base;
                p.labels.resize(n);
                for (int i = 0; i < n; ++i) p.labels[i] = i + 1;
                CHECK(polyomino_pmaj(p) == polyomino_bounce(p));
                // all permutation labelings: pmaj <= bounce
                std::vector<int> perm(n);
                for (int i = 0; i < n; ++i) perm[i] = i + 1;
                do {
                    Polyomino q = base;
                    q.labels = perm;
                    try {
                        q.validate();
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    CHECK(polyomino_pmaj(q) <= polyomino_bounce(q));
                } while (std::next_permutation(perm.begin(), perm.end()));
            });
}
