#pragma once

#include "symfunc.hpp"

namespace qtc {

/// Modified Macdonald polynomial in the Schur basis (cached).
const SymFunc& macdonald_H(const Partition& mu);

/// Expansion coefficients of f in the Htilde basis, via star orthogonality.
std::map<Partition, QTRat> htilde_expansion(const SymFunc& f);

/// Eigenoperators in the Htilde basis; the result comes back in the
/// caller's basis.
SymFunc nabla(const SymFunc& f);
SymFunc nabla_inv(const SymFunc& f);
SymFunc delta_op(const SymFunc& g, const SymFunc& f);        // Delta_g, eigenvalue g[B_mu]
SymFunc delta_prime_op(const SymFunc& g, const SymFunc& f);  // Delta'_g, eigenvalue g[B_mu - 1]
SymFunc pi_op(const SymFunc& f);
SymFunc pi_inv_op(const SymFunc& f);

/// Delta_{e_k} / Delta'_{e_k} with the e_{<0} = 0 convention.
SymFunc delta_e(int k, const SymFunc& f);
SymFunc delta_prime_e(int k, const SymFunc& f);
SymFunc delta_h(int k, const SymFunc& f);

/// tau_{-eps} f = f[X - eps] = sum_r e_r^perp f, graded by degree.
std::map<int, SymFunc> tau_minus_eps(const SymFunc& f);
/// tau_z f = f[X + z] = sum_r z^r h_r^perp f for a single variable z.
std::map<int, SymFunc> tau_z(const QTRat& z, const SymFunc& f);

/// Pieri coefficients: h_k^perp Ht_mu = sum_nu c^{(k)}_{mu nu} Ht_nu and
/// e_k[X/M] Ht_nu = sum_mu d^{(k)}_{mu nu} Ht_mu.
std::map<Partition, QTRat> pieri_c(const Partition& mu, int k);
std::map<Partition, QTRat> pieri_d(const Partition& mu, int k);

/// E_{n,k} of Garsia-Haglund, via the triangular system at z = q^j.
const SymFunc& E_nk(int n, int k);

/// e_n[X (1-q^r)/(1-q)] expanded in the monomial basis.
SymFunc e_n_bracket_qr(int n, int r);

} // namespace qtc
