#pragma once

#include "rational.hpp"

#include <map>
#include <utility>
#include <vector>
#include <stdexcept>
#include <string>

namespace qtc {

/// Exact Laurent polynomial in q and t over the rationals.
///
/// Terms are kept in a map ordered lexicographically on the exponent pair
/// (qexp, texp); zero coefficients are never stored, so two values are equal
/// iff their term maps coincide.
class QTPoly {
public:
    using Expo = std::pair<int, int>; // (qexp, texp), possibly negative
    using TermMap = std::map<Expo, Rational>;

    QTPoly() = default;
    QTPoly(long c) { if (c != 0) terms_[{0, 0}] = rational_of(c); }
    QTPoly(const Rational& c) { if (c != 0) terms_[{0, 0}] = c; }

    static QTPoly monomial(const Rational& c, int qe, int te) {
        QTPoly p;
        if (c != 0) p.terms_[{qe, te}] = c;
        return p;
    }
    static QTPoly q(int e = 1) { return monomial(1, e, 0); }
    static QTPoly t(int e = 1) { return monomial(1, 0, e); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Expo{0, 0} &&
               terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Expo{0, 0});
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("QTPoly: not a constant");
        return terms_.begin()->second;
    }

    Rational coeff(int qe, int te) const {
        auto it = terms_.find({qe, te});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(int qe, int te, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace({qe, te}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int min_qexp() const;
    int max_qexp() const;
    int min_texp() const;
    int max_texp() const;

    QTPoly operator-() const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    QTPoly& operator*=(const QTPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const QTPoly& a, const QTPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QTPoly& a, const QTPoly& b) { return !(a == b); }
    bool operator<(const QTPoly& o) const { return terms_ < o.terms_; }

    QTPoly scaled(const Rational& c) const;
    /// Multiply by the monomial c * q^qe * t^te.
    QTPoly shifted(int qe, int te, const Rational& c = 1) const;
    QTPoly pow(unsigned e) const;

    /// Exact substitution q -> q^k, t -> t^k (plethystic power map).
    QTPoly frobenius(int k) const;
    /// Substitute t -> c * q^e; result lives in q alone.
    QTPoly substitute_t(const Rational& c, int e) const;
    /// Substitute t -> 1/t (Laurent support makes this exact).
    QTPoly inverted_t() const;
    /// Swap the roles of q and t.
    QTPoly swapped_qt() const;
    Rational eval(const Rational& qv, const Rational& tv) const;

    /// Exact division; throws if the division leaves a remainder.
    QTPoly divide_exact(const QTPoly& g) const;

    /// Monic-free gcd: integer-primitive with positive lex-leading
    /// coefficient and exponents shifted so both minima are zero.
    static QTPoly gcd(const QTPoly& a, const QTPoly& b);

    std::string str() const;

private:
    TermMap terms_;
};

QTPoly binom_qt(long n, long k); // plain binomial as constant poly

} // namespace qtc
