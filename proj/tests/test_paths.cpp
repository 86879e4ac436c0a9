#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "paths.hpp"

using namespace qtc;

namespace {

PathObject ldp_figure() {
    // the worked labelled Dyck path: area word 01212011, labels 2,4,5,1,3,2,6,1
    PathObject d;
    d.n = 8;
    d.area_word = {0, 1, 2, 1, 2, 0, 1, 1};
    d.labels = {2, 4, 5, 1, 3, 2, 6, 1};
    return d;
}

long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

} // namespace

TEST_CASE("worked example: the labelled Dyck path figure") {
    PathObject d = ldp_figure();
    d.validate();
    auto s = statistics(d);
    CHECK(s.area == 8);
    CHECK(s.dinv == 6);
    CHECK(s.parking_word == std::vector<int>({5, 4, 3, 2, 1, 6, 2, 1}));
    CHECK(s.pmaj == 3);
    CHECK(s.bounce_word == std::vector<int>({0, 0, 0, 1, 1, 2, 2, 3}));
    CHECK(s.bounce == 9);
    auto w = reading_words(d);
    CHECK(w.dinv_word == std::vector<int>({2, 2, 4, 1, 6, 1, 5, 3}));
    CHECK(w.pmaj_word == std::vector<int>({2, 4, 5, 1, 3, 2, 6, 1}));
}

TEST_CASE("worked example: pbounce of the leaning-stack figure") {
    PathObject d;
    d.n = 11;
    d.area_word = {0, 1, 1, 1, 2, 3, 3, 4, 5, 4, 3};
    d.dpeak = {6, 10};
    d.validate();
    auto s = statistics(d);
    CHECK(s.pbounce_word == std::vector<int>({0, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2}));
    CHECK(s.pbounce == 11);
}

TEST_CASE("single row: all statistics vanish") {
    PathObject d;
    d.n = 1;
    d.area_word = {0};
    d.labels = {1};
    auto s = statistics(d);
    CHECK(s.area == 0);
    CHECK(s.dinv == 0);
    CHECK(s.bounce == 0);
    CHECK(s.pmaj == 0);
}

TEST_CASE("decorated example from the zeta figure pair") {
    // D in DDd(8)^{o2,*3}: area word 01223101, DRise={2,5,8}, DPeak={6,8}
    PathObject d;
    d.n = 8;
    d.area_word = {0, 1, 2, 2, 3, 1, 0, 1};
    d.drise = {2, 5, 8};
    d.dpeak = {6, 8};
    d.validate();
    CHECK(area_stat(d) == 10 - 1 - 3 - 1);
    CHECK(bounce_stat(d) == 0 + 0 + 0 + 1 + 1 + 3); // drops b_6=2, b_8=3
    // dinv: primary (1,7),(2,6),(2,8),(3,4); secondary (2,7),(6,7)
    CHECK(dinv_stat(d) == 6);
}

TEST_CASE("generate: Catalan counts and labelled counts") {
    for (int n = 1; n <= 8; ++n)
        CHECK((long)dyck_area_words(n).size() == catalan(n));
    // PF^2(0,n): an all-ones labelling needs column-distinct rows, so only
    // the staircase survives
    for (int n = 1; n <= 5; ++n) {
        long count = 0;
        generate_labelled(n, LabelRegime::TwoCar, 2, 0, [&](const PathObject& d) {
            bool all_ones = true;
            for (int l : d.labels) all_ones &= (l == 1);
            if (all_ones) ++count;
        });
        CHECK(count == 1);
    }
    // |PF^2(1,1)| = 3, matching <Delta'_{e_1} e_2, h_1 h_1> at q = t = 1
    long c11 = 0;
    generate_labelled(2, LabelRegime::TwoCar, 2, 0, [&](const PathObject& d) {
        if (std::count(d.labels.begin(), d.labels.end(), 1) == 1) ++c11;
    });
    CHECK(c11 == 3);
}

TEST_CASE("rise-fall correspondence is a bijection, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& a : dyck_area_words(n)) {
            auto corr = rise_fall_correspondence(a);
            CHECK(corr.size() == rises(a).size());
            std::set<int> cols;
            for (auto& [r, c] : corr) {
                CHECK(cols.insert(c).second);
                // the matched east step must be a fall: not the last in its run
                CHECK(rise_of_fall(a, c) == r);
            }
        }
    }
}

TEST_CASE("reading words and standardization figure") {
    PathObject d;
    d.n = 8;
    d.area_word = {0, 1, 2, 1, 2, 0, 1, 1};
    d.labels = {2, 3, 5, 1, 3, 2, 3, 1};
    d.drise = {5};
    auto w = reading_words(d);
    CHECK(w.reverse_dinv_word == std::vector<int>({3, 5, 1, 3, 1, 3, 2, 2}));
    PathObject s = standardize(d);
    CHECK(s.labels == std::vector<int>({4, 7, 8, 2, 5, 3, 6, 1}));
    CHECK(dinv_stat(s) == dinv_stat(d));
    CHECK(area_stat(s) == area_stat(d));
    // already standard path maps to itself
    PathObject e = standardize(s);
    CHECK(e == s);
}

TEST_CASE("standardization preserves dinv exhaustively, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        generate_labelled(n, LabelRegime::Positive, n, 0, [&](const PathObject& d) {
            PathObject s = standardize(d);
            CHECK(dinv_stat(s) == dinv_stat(d));
            auto rw = reading_words(s);
            std::vector<int> mu;
            for (int v = 1; v <= n; ++v) {
                int c = (int)std::count(d.labels.begin(), d.labels.end(), v);
                if (c) mu.push_back(c);
                else if (std::count(d.labels.begin(), d.labels.end(), v) == 0)
                    mu.push_back(0);
            }
            std::vector<int> mu2;
            for (int v : mu)
                if (v) mu2.push_back(v);
            // blocks follow label values in increasing order (a composition)
            CHECK(is_mu_shuffle(rw.reverse_dinv_word, mu2));
        });
    }
}

TEST_CASE("is_shuffle spec examples") {
    CHECK(is_mu_shuffle({1, 2, 3, 4}, {2, 2}));
    CHECK(is_mu_shuffle({1, 3, 2, 4}, {2, 2}));
    CHECK(is_mu_shuffle({3, 1, 2, 4}, {2, 2}));
    CHECK_FALSE(is_mu_shuffle({2, 1, 3, 4}, {2, 2}));
    // 65748321 as a shuffle of decreasing 54321 and increasing 678
    ShuffleBlock dec{{1, 2, 3, 4, 5}, false}, inc{{6, 7, 8}, true};
    CHECK(is_shuffle({6, 5, 7, 4, 8, 3, 2, 1}, {dec, inc}));
    CHECK_FALSE(is_shuffle({6, 5, 7, 4, 8, 3, 1, 2}, {dec, inc}));
    CHECK_THROWS_AS(is_shuffle({1, 2}, {ShuffleBlock{{1, 3}, true}}),
                    std::invalid_argument);
}

TEST_CASE("pmaj <= bounce; equality for increasing labels (n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        generate_labelled(n, LabelRegime::Positive, n, 0, [&](const PathObject& d) {
            long pm = pmaj_stat(d);
            long bo = bounce_stat(d);
            CHECK(pm <= bo);
            bool increasing = true;
            for (int i = 1; i < n; ++i) increasing &= (d.labels[i] > d.labels[i - 1]);
            if (increasing) CHECK(pm == bo);
        });
    }
}

TEST_CASE("special peaks leave statistics unchanged (n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& a : dyck_area_words(n)) {
            PathObject plain;
            plain.n = n;
            plain.area_word = a;
            auto pk = peaks(a);
            // rightmost highest peak
            int best = -1;
            for (int i : pk)
                if (best < 0 || a[i - 1] >= a[best - 1]) best = i;
            PathObject d = plain;
            d.dpeak.insert(best);
            CHECK(dinv_stat(d) == dinv_stat(plain));
            CHECK(area_stat(d) == area_stat(plain));
            // first peak: bounce unchanged
            PathObject f = plain;
            f.dpeak.insert(pk.front());
            CHECK(bounce_stat(f) == bounce_stat(plain));
            CHECK(area_stat(f) == area_stat(plain));
            // last peak: pbounce unchanged
            PathObject l = plain;
            l.dpeak.insert(n);
            CHECK(pbounce_stat(l) == pbounce_stat(plain));
        }
    }
}

TEST_CASE("valley dinv is nonnegative (n <= 5)") {
    for (int n = 1; n <= 5; ++n) {
        generate_labelled(n, LabelRegime::Positive, n, 0, [&](const PathObject& base) {
            PathObject d = base;
            auto vs = valleys(d);
            for (int v : vs) {
                d.dval = {v};
                CHECK(dinv_stat(d) >= 0);
                d.dval.clear();
            }
        });
    }
}
