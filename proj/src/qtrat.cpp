#include "qtrat.hpp"

namespace qtc {

QTRat::QTRat(QTPoly num, QTPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QTRat: zero denominator");
    normalize();
}

void QTRat::normalize() {
    if (num_.is_zero()) {
        den_ = QTPoly(1);
        return;
    }
    if (num_.terms().size() > 1 && den_.terms().size() > 1) {
        QTPoly g = QTPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
    }
    // move monomial content of the denominator into the numerator
    int dq = den_.min_qexp(), dt = den_.min_texp();
    if (dq != 0 || dt != 0) {
        den_ = den_.shifted(-dq, -dt);
        num_ = num_.shifted(-dq, -dt);
    }
    // also cancel common monomial factors of num and den (gcd is monomial-free)
    // scale so den is integer-primitive with positive lex-leading coefficient
    Integer lcm(1), gnum(0);
    for (const auto& [e, c] : den_.terms())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [e, c] : den_.terms()) {
        Rational scaled = c * Rational(lcm);
        Integer n = scaled.get_num();
        mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale = Rational(lcm) / Rational(gnum);
    auto last = std::prev(den_.terms().end());
    if (last->second < 0) scale = -scale;
    if (scale != 1) {
        num_ = num_.scaled(scale);
        den_ = den_.scaled(scale);
    }
}

const QTPoly& QTRat::as_poly() const {
    if (!den_.is_one()) throw std::domain_error("QTRat: not a polynomial: " + str());
    return num_;
}

QTRat QTRat::operator-() const {
    QTRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QTRat operator+(const QTRat& a, const QTRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return QTRat(a.num_ + b.num_, a.den_);
    QTPoly g = QTPoly::gcd(a.den_, b.den_);
    if (g.is_one())
        return QTRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    QTPoly da = a.den_.divide_exact(g), db = b.den_.divide_exact(g);
    return QTRat(a.num_ * db + b.num_ * da, a.den_ * db);
}

QTRat operator-(const QTRat& a, const QTRat& b) {
    return a + (-b);
}

QTRat operator*(const QTRat& a, const QTRat& b) {
    if (a.is_zero() || b.is_zero()) return QTRat();
    // reduce cross-wise first to keep the final gcd small
    QTPoly an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
    QTPoly g1 = QTPoly::gcd(an, bd);
    if (!g1.is_one()) {
        an = an.divide_exact(g1);
        bd = bd.divide_exact(g1);
    }
    QTPoly g2 = QTPoly::gcd(bn, ad);
    if (!g2.is_one()) {
        bn = bn.divide_exact(g2);
        ad = ad.divide_exact(g2);
    }
    return QTRat(an * bn, ad * bd);
}

QTRat operator/(const QTRat& a, const QTRat& b) {
    if (b.is_zero()) throw std::domain_error("QTRat: division by zero");
    if (a.is_zero()) return QTRat();
    return QTRat(a.num_ * b.den_, a.den_ * b.num_);
}

QTRat QTRat::pow(int e) const {
    if (e == 0) return QTRat(1);
    QTRat base = *this;
    if (e < 0) {
        base = QTRat(1) / base;
        e = -e;
    }
    QTRat r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

QTRat QTRat::frobenius(int k) const {
    QTRat r;
    r.num_ = num_.frobenius(k);
    r.den_ = den_.frobenius(k);
    // frobenius preserves reducedness and the canonical form for k >= 1
    if (k < 0) return QTRat(r.num_, r.den_);
    return r;
}

QTRat QTRat::substitute_t(const Rational& c, int e) const {
    QTPoly d = den_.substitute_t(c, e);
    if (d.is_zero()) throw std::domain_error("DenominatorVanishes");
    return QTRat(num_.substitute_t(c, e), d);
}

QTRat QTRat::swapped_qt() const {
    return QTRat(num_.swapped_qt(), den_.swapped_qt());
}

Rational QTRat::eval(const Rational& qv, const Rational& tv) const {
    Rational d = den_.eval(qv, tv);
    if (d == 0) throw std::domain_error("QTRat: denominator vanishes at evaluation point");
    return num_.eval(qv, tv) / d;
}

std::string QTRat::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

} // namespace qtc
