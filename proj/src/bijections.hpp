#pragma once

#include "paths.hpp"
#include "polyomino.hpp"
#include "squares.hpp"

namespace qtc {

/// Haglund's sweep map on decorated Dyck paths:
/// DDd(n)^{circ a, * b} -> DDb(n)^{circ b, * a}, (dinv, area) -> (area, bounce).
PathObject zeta_dyck(const PathObject& d);
PathObject zeta_dyck_inverse(const PathObject& d);

/// The peak/fall exchange on DDp(n): an involution preserving (area, pbounce).
PathObject psi(const PathObject& d);
/// One transformation step per entry: ('f', column) applies psi0 to a
/// decorated fall, ('p', row) applies psi0 inverse to a decorated peak.
/// Exposed so the order sensitivity is testable.
PathObject psi_with_order(const PathObject& d,
                          const std::vector<std::pair<char, int>>& worklist);

/// reduce: PP(m,n) -> RP(n-1,m-1), statistics drop by m+n-1.
Polyomino reduce_polyomino(const Polyomino& p);
Polyomino unreduce_polyomino(const Polyomino& r);

/// zeta on parallelogram polyominoes: PP(n,m)^{circ k} -> PP(m,n)^{* k},
/// (area, bounce) -> (dinv, area).
Polyomino zeta_poly(const Polyomino& p);
Polyomino zeta_poly_inverse(const Polyomino& p);
/// zeta-bar on reduced polyominoes: RP(m,n)^{circ k} -> RP(m,n)^{* k}.
Polyomino zeta_reduced(const Polyomino& p);
Polyomino zeta_reduced_inverse(const Polyomino& p);

/// phi: RP(m\r,n)^{*k} -> PF^2(m\r,n)^{*k}; barred -> label 1, unbarred -> 2.
PathObject phi_map(const Polyomino& p);
Polyomino phi_inverse(const PathObject& d);

/// eta: PLD(m-1,n)^{* n-1} -> LPP(m,n); pmaj preserved, area shifts.
Polyomino eta_map(const PathObject& d);
PathObject eta_inverse(const Polyomino& p);

/// gamma maps between square paths and (decorated) Dyck paths.
PathObject gamma_E(const SquarePath& p); // labels kept when present
SquarePath gamma_E_inverse(const PathObject& d);
PathObject gamma_N(const SquarePath& p);
SquarePath gamma_N_inverse(const PathObject& d);

/// alpha: labelled decorated paths whose reverse dinv word shuffles
/// decreasing (a..1) with increasing (a+1..a+b) -> DD(a+b)^{circ b, * k}.
PathObject alpha_map(const PathObject& d, int a, int b);
PathObject alpha_inverse(const PathObject& d, int a, int b);

} // namespace qtc
