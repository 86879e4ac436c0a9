#pragma once

#include "qtrat.hpp"

namespace qtc {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
QTPoly q_int(int n);
/// [n]_q!
QTPoly q_factorial(int n);
/// Gaussian binomial in q alone; 0 when k < 0 or k > n.
QTPoly q_binomial(int n, int k);
/// (a;q)_s = (1-a)(1-qa)...(1-q^{s-1}a).
QTRat q_rising(const QTRat& a, int s);

/// binom(n,2) etc. as long, guarding the n<2 cases to 0.
inline long choose2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

inline QTPoly q_pow(long e) { return QTPoly::q((int)e); }
inline QTPoly t_pow(long e) { return QTPoly::t((int)e); }

} // namespace qtc
