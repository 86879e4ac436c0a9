#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qseries.hpp"
#include "qtrat.hpp"

#include <random>

using namespace qtc;

namespace {

std::mt19937 rng(20260810);

QTPoly random_poly() {
    std::uniform_int_distribution<int> nterms(0, 5), expo(-3, 4), coefn(-6, 6);
    QTPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int den = 1 + std::uniform_int_distribution<int>(0, 3)(rng);
        p.add_term(expo(rng), expo(rng), rational_of(coefn(rng), den));
    }
    return p;
}

QTRat random_rat() {
    QTPoly den;
    while (den.is_zero()) den = random_poly();
    return QTRat(random_poly(), den);
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Independent oracle for the Gaussian binomial: expand
// [n]_q!/([k]_q![n-k]_q!) by counting partitions in a k x (n-k) box.
QTPoly qbinom_oracle(int n, int k) {
    if (k < 0 || k > n) return QTPoly();
    // coefficient of q^m = number of partitions of m with at most k parts,
    // each part at most n-k
    QTPoly r;
    std::function<void(int, int, int)> rec = [&](int rem_parts, int maxp, int total) {
        r.add_term(total, 0, 1);
        if (rem_parts == 0) return;
        for (int p = 1; p <= maxp; ++p) rec(rem_parts - 1, p, total + p);
    };
    // enumerate weakly decreasing sequences with <= k parts, parts <= n-k
    std::function<void(int, int, int)> gen = [&](int parts_left, int maxp, int tot) {
        r.add_term(tot, 0, 1);
        if (parts_left == 0) return;
        for (int p = maxp; p >= 1; --p) gen(parts_left - 1, p, tot + p);
    };
    gen(k, n - k, 0);
    return r;
}

} // namespace

TEST_CASE("q_binomial spec examples") {
    CHECK(q_binomial(3, 0) == QTPoly(1));
    CHECK(q_binomial(2, 3).is_zero());
    // (n=4,k=2) -> 1+q+2q^2+q^3+q^4
    QTPoly expect;
    expect.add_term(0, 0, 1);
    expect.add_term(1, 0, 1);
    expect.add_term(2, 0, 2);
    expect.add_term(3, 0, 1);
    expect.add_term(4, 0, 1);
    CHECK(q_binomial(4, 2) == expect);
    CHECK(q_int(3) == QTPoly(1) + QTPoly::q() + QTPoly::q(2));
    CHECK(q_factorial(3) == q_int(1) * q_int(2) * q_int(3));
}

TEST_CASE("q_binomial against box-partition oracle") {
    for (int n = 0; n <= 9; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k) == qbinom_oracle(n, k));
}

TEST_CASE("q_binomial recursions and q=1 evaluation") {
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k) ==
                  q_binomial(n - 1, k).shifted(k, 0) + q_binomial(n - 1, k - 1));
            CHECK(q_binomial(n, k) ==
                  q_binomial(n - 1, k) + q_binomial(n - 1, k - 1).shifted(n - k, 0));
            CHECK(q_binomial(n, k).eval(1, 1) == Rational(binom(n, k)));
        }
    }
}

TEST_CASE("q_rising examples") {
    CHECK(q_rising(QTRat::q(), 1) == QTRat(QTPoly(1) - QTPoly::q()));
    CHECK(q_rising(QTRat(1), 2).is_zero());
    QTRat expect = QTRat(QTPoly(1) - QTPoly::q(2)) * QTRat(QTPoly(1) - QTPoly::q(3));
    CHECK(q_rising(QTRat::q(2), 2) == expect);
}

TEST_CASE("ring axioms on random triples") {
    for (int trial = 0; trial < 60; ++trial) {
        QTPoly a = random_poly(), b = random_poly(), c = random_poly();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("field axioms and reduction on random rationals") {
    for (int trial = 0; trial < 40; ++trial) {
        QTRat a = random_rat(), b = random_rat(), c = random_rat();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(QTRat::equal_cross(a + b, b + a));
        if (!b.is_zero()) {
            QTRat d = a / b;
            CHECK(d * b == a);
        }
        // reduced form: gcd of num and den is a unit
        QTPoly g = QTPoly::gcd(a.num(), a.den());
        CHECK(g.is_one());
    }
}

TEST_CASE("specialize t -> 1/q") {
    // (qt, t->1/q) -> 1
    QTRat qt = QTRat::q() * QTRat::t();
    CHECK(qt.substitute_t(1, -1) == QTRat(1));
    // (q+t, t->1/q) -> q + q^-1
    QTRat s = QTRat::q() + QTRat::t();
    QTRat expect = QTRat::q() + QTRat(QTPoly::q(-1));
    CHECK(s.substitute_t(1, -1) == expect);
    // B_{(2,1)} = 1+q+t -> 1+q+q^-1
    QTRat B = QTRat(1) + QTRat::q() + QTRat::t();
    CHECK(B.substitute_t(1, -1) == QTRat(1) + QTRat::q() + QTRat(QTPoly::q(-1)));
    // denominator vanishing: 1/(1-qt) at t->1/q
    QTRat bad = QTRat(QTPoly(1), QTPoly(1) - QTPoly::q() * QTPoly::t());
    CHECK_THROWS_AS(bad.substitute_t(1, -1), std::domain_error);
}

TEST_CASE("specialize is multiplicative on random pairs") {
    for (int trial = 0; trial < 30; ++trial) {
        QTRat a = random_rat(), b = random_rat();
        try {
            QTRat lhs = (a * b).substitute_t(1, -1);
            QTRat rhs = a.substitute_t(1, -1) * b.substitute_t(1, -1);
            CHECK(lhs == rhs);
        } catch (const std::domain_error&) {
            // substitution annihilated a denominator; skip
        }
    }
}

TEST_CASE("exact division round trip") {
    for (int trial = 0; trial < 40; ++trial) {
        QTPoly a = random_poly(), b = random_poly();
        if (b.is_zero()) continue;
        QTPoly prod = a * b;
        CHECK(prod.divide_exact(b) == a);
    }
}

TEST_CASE("gcd divides and is monomial-free") {
    for (int trial = 0; trial < 25; ++trial) {
        QTPoly a = random_poly(), b = random_poly(), m = random_poly();
        QTPoly am = a * m, bm = b * m;
        if (am.is_zero() || bm.is_zero()) continue;
        QTPoly g = QTPoly::gcd(am, bm);
        CHECK_FALSE(g.is_zero());
        CHECK(am.divide_exact(g) * g == am);
        CHECK(bm.divide_exact(g) * g == bm);
        if (!m.is_zero()) {
            // the primitive part of m must divide the gcd exactly
            QTPoly mp = QTPoly::gcd(m, m);
            QTPoly quo = g.divide_exact(mp);
            CHECK(quo * mp == g);
        }
    }
}
