#pragma once

#include "qtpoly.hpp"

namespace qtc {

/// Exact rational function in q,t, kept reduced.
///
/// Canonical form: gcd(num, den) is a unit, the denominator is a genuine
/// polynomial (minimal exponents zero) that is integer-primitive with a
/// positive lexicographically-leading coefficient. Equality is structural.
class QTRat {
public:
    QTRat() : num_(), den_(1) {}
    QTRat(long c) : num_(c), den_(1) {}
    QTRat(const Rational& c) : num_(c), den_(1) {}
    QTRat(const QTPoly& p) : num_(p), den_(1) {}
    QTRat(QTPoly num, QTPoly den);

    static QTRat q(int e = 1) { return QTRat(QTPoly::q(e)); }
    static QTRat t(int e = 1) { return QTRat(QTPoly::t(e)); }

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// Throws unless the denominator is 1 (after reduction).
    const QTPoly& as_poly() const;

    QTRat operator-() const;
    friend QTRat operator+(const QTRat& a, const QTRat& b);
    friend QTRat operator-(const QTRat& a, const QTRat& b);
    friend QTRat operator*(const QTRat& a, const QTRat& b);
    friend QTRat operator/(const QTRat& a, const QTRat& b);
    QTRat& operator+=(const QTRat& o) { *this = *this + o; return *this; }
    QTRat& operator-=(const QTRat& o) { *this = *this - o; return *this; }
    QTRat& operator*=(const QTRat& o) { *this = *this * o; return *this; }
    QTRat& operator/=(const QTRat& o) { *this = *this / o; return *this; }

    friend bool operator==(const QTRat& a, const QTRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QTRat& a, const QTRat& b) { return !(a == b); }
    bool operator<(const QTRat& o) const {
        if (num_ < o.num_) return true;
        if (o.num_ < num_) return false;
        return den_ < o.den_;
    }

    /// Equality by cross-multiplication, with no gcd reduction involved.
    static bool equal_cross(const QTRat& a, const QTRat& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    QTRat pow(int e) const;
    /// q -> q^k, t -> t^k.
    QTRat frobenius(int k) const;
    /// t -> c*q^e; throws std::domain_error("DenominatorVanishes") if the
    /// substitution annihilates the denominator.
    QTRat substitute_t(const Rational& c, int e) const;
    /// t -> 1/t.
    QTRat inverted_t() const { return QTRat(num_.inverted_t(), den_.inverted_t()); }
    QTRat swapped_qt() const;
    Rational eval(const Rational& qv, const Rational& tv) const;

    std::string str() const;

private:
    void normalize();
    QTPoly num_, den_;
};

} // namespace qtc
