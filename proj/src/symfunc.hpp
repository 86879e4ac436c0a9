#pragma once

#include "partition.hpp"

#include <map>
#include <optional>

namespace qtc {

/// Global degree bound for the heavy engines; QTCOMB_MAX_DEGREE overrides.
int max_degree();

enum class Basis { Monomial, Elementary, Homogeneous, Power, Schur, Macdonald };

std::string basis_name(Basis b);
std::optional<Basis> basis_from_name(const std::string& s);

/// Formal alphabet c0 + c1*X for plethystic substitution. Both
/// coefficients substitute through their power-sum images
/// p_k[c] = c(q^k, t^k); an epsilon flag adds the sign (-1)^k.
struct AlphabetExpr {
    QTRat main;          // coefficient of X
    bool main_eps = false;
    QTRat constant;      // constant alphabet, as a rational function of q,t
    bool const_eps = false;

    static AlphabetExpr X() { return {QTRat(1), false, QTRat(0), false}; }
    static AlphabetExpr scaled(const QTRat& c) { return {c, false, QTRat(0), false}; }
    static AlphabetExpr constant_alphabet(const QTRat& c) {
        return {QTRat(0), false, c, false};
    }

    // p_k multipliers
    QTRat main_at(int k) const;
    QTRat const_at(int k) const;
};

/// Degree-homogeneous symmetric function over Q(q,t).
class SymFunc {
public:
    using CoeffMap = std::map<Partition, QTRat>;

    SymFunc() : degree_(0), basis_(Basis::Monomial) {}
    SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {}
    SymFunc(int degree, Basis basis, CoeffMap coeffs);

    static SymFunc zero(int degree, Basis b = Basis::Monomial) { return SymFunc(degree, b); }
    static SymFunc e(int n);
    static SymFunc h(int n);
    static SymFunc p(int n);
    static SymFunc s(const Partition& mu);
    static SymFunc e(const Partition& mu);
    static SymFunc h(const Partition& mu);
    static SymFunc one() { return e(0); }

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    QTRat coeff(const Partition& mu) const;
    void set_coeff(const Partition& mu, const QTRat& c);

    SymFunc to_basis(Basis target) const;

    SymFunc operator-() const;
    friend SymFunc operator+(const SymFunc& a, const SymFunc& b);
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b);
    /// Product; degrees add. Result in the monomial basis.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    SymFunc scaled(const QTRat& c) const;

    /// Basis-independent equality.
    friend bool operator==(const SymFunc& a, const SymFunc& b);
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    std::string str() const;

private:
    int degree_;
    Basis basis_;
    CoeffMap coeffs_; // keys are partitions of degree_; no zero values
};

/// Hall scalar product (Schur orthonormal). Zero when degrees differ.
QTRat hall_scalar(const SymFunc& f, const SymFunc& g);
/// Star scalar product <f,g>_* = <omega phi f, g>.
QTRat star_scalar(const SymFunc& f, const SymFunc& g);

/// omega involution.
SymFunc omega(const SymFunc& f);
/// phi f = f[MX] with M = (1-q)(1-t).
SymFunc phi_M(const SymFunc& f);
/// f^* = f[X/M].
SymFunc star_transform(const SymFunc& f);

/// Plethysm f[c0 + c1 X]; requires c1 != 0.
SymFunc plethysm(const SymFunc& f, const AlphabetExpr& a);
/// Plethysm at a constant alphabet (c1 = 0): a rational function of q,t.
QTRat plethysm_scalar(const SymFunc& f, const AlphabetExpr& a);
inline QTRat eval_at(const SymFunc& f, const QTRat& c0) {
    return plethysm_scalar(f, AlphabetExpr::constant_alphabet(c0));
}

/// g^perp f, the Hall adjoint of multiplication by g.
SymFunc skew(const SymFunc& g, const SymFunc& f);
/// h_k^perp f (skew by a complete homogeneous).
SymFunc skew_h(int k, const SymFunc& f);
/// e_k^perp f.
SymFunc skew_e(int k, const SymFunc& f);

/// Specialize t -> c*q^e in every coefficient.
SymFunc specialize_t(const SymFunc& f, const Rational& c, int e);

} // namespace qtc
