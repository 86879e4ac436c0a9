#include "macdonald.hpp"

#include "qseries.hpp"

#include <mutex>

namespace qtc {

namespace {

// (q,t)-deformed Hall scalar product on the power basis:
// <p_la, p_la>_{q,t} = z_la prod_i (1-q^{la_i})/(1-t^{la_i}).
QTRat qt_scalar(const SymFunc& f, const SymFunc& g) {
    SymFunc pf = f.to_basis(Basis::Power), pg = g.to_basis(Basis::Power);
    QTRat acc(0);
    for (const auto& [mu, c] : pf.coeffs()) {
        auto it = pg.coeffs().find(mu);
        if (it == pg.coeffs().end()) continue;
        QTRat factor(mu.z());
        for (int part : mu.parts())
            factor *= QTRat(QTPoly(1) - QTPoly::q(part), QTPoly(1) - QTPoly::t(part));
        acc += c * it->second * factor;
    }
    return acc;
}

// Macdonald P_mu for all mu |- n: Gram-Schmidt over a linear extension of
// dominance (the canonical partition order), monic on m_mu.
const std::vector<SymFunc>& macdonald_P_all(int n) {
    static std::map<int, std::vector<SymFunc>> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    const auto& parts = partitions_of(n);
    int N = (int)parts.size();
    std::vector<SymFunc> P;
    std::vector<QTRat> norms;
    P.reserve(N);
    // process smallest in the order first: canonical order has (n) first,
    // (1^n) last; dominance-smallest must come first, so iterate backwards
    for (int idx = N - 1; idx >= 0; --idx) {
        SymFunc m(parts[idx].size(), Basis::Monomial);
        m.set_coeff(parts[idx], QTRat(1));
        SymFunc v = m;
        for (size_t j = 0; j < P.size(); ++j) {
            QTRat c = qt_scalar(m, P[j]) / norms[j];
            if (!c.is_zero()) v = v - P[j].scaled(c);
        }
        norms.push_back(qt_scalar(v, v));
        P.push_back(v);
    }
    std::vector<SymFunc> out(N);
    for (int i = 0; i < N; ++i) out[i] = P[N - 1 - i];
    return memo.emplace(n, std::move(out)).first->second;
}

} // namespace

const SymFunc& macdonald_H(const Partition& mu) {
    static std::map<Partition, SymFunc> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;

    int n = mu.size();
    const auto& parts = partitions_of(n);
    const auto& Ps = macdonald_P_all(n);
    int idx = -1;
    for (int i = 0; i < (int)parts.size(); ++i)
        if (parts[i] == mu) { idx = i; break; }
    const SymFunc& P = Ps[idx];

    // integral form J_mu = c_mu P_mu with c_mu = prod (1 - q^arm t^{leg+1})
    QTRat cmu(1);
    for (int row = 1; row <= mu.length(); ++row)
        for (int col = 1; col <= mu.parts()[row - 1]; ++col) {
            CellStats s = cell_stats(mu, col, row);
            QTPoly f(1);
            f.add_term(s.arm, s.leg + 1, -1);
            cmu *= QTRat(f);
        }

    // Htilde_mu[X;q,t] = t^{n(mu)} J_mu[X/(1-t); q, t] |_{t -> 1/t}
    SymFunc Jp = P.scaled(cmu).to_basis(Basis::Power);
    SymFunc Hp(n, Basis::Power);
    long nstat = mu.n_stat();
    for (const auto& [la, c] : Jp.coeffs()) {
        QTRat v = c;
        for (int part : la.parts())
            v /= QTRat(QTPoly(1) - QTPoly::t(part));
        v = v.inverted_t();
        v *= QTRat(QTPoly::t((int)nstat));
        Hp.set_coeff(la, v);
    }
    SymFunc H = Hp.to_basis(Basis::Schur);
    return memo.emplace(mu, std::move(H)).first->second;
}

std::map<Partition, QTRat> htilde_expansion(const SymFunc& f) {
    std::map<Partition, QTRat> out;
    if (f.is_zero()) return out;
    SymFunc fm = f.to_basis(Basis::Monomial);
    for (const auto& mu : partitions_of(f.degree())) {
        QTRat c = star_scalar(fm, macdonald_H(mu)) / partition_constants(mu).w;
        if (!c.is_zero()) out[mu] = c;
    }
    return out;
}

SymFunc macdonald_to_ht_basis(const SymFunc& f) {
    auto exp = htilde_expansion(f);
    SymFunc r(f.degree(), Basis::Macdonald);
    for (auto& [mu, c] : exp) r.set_coeff(mu, c);
    return r;
}

SymFunc macdonald_from_ht_basis(const SymFunc& f) {
    SymFunc r(f.degree(), Basis::Schur);
    for (const auto& [mu, c] : f.coeffs()) r = r + macdonald_H(mu).scaled(c);
    return r;
}

namespace {

template <typename Eigen>
SymFunc apply_eigen(const SymFunc& f, Eigen&& eigenvalue) {
    if (f.is_zero()) return f;
    auto exp = htilde_expansion(f);
    SymFunc r(f.degree(), Basis::Schur);
    for (const auto& [mu, c] : exp) {
        QTRat ev = eigenvalue(mu);
        if (ev.is_zero()) continue;
        r = r + macdonald_H(mu).scaled(c * ev);
    }
    Basis target = f.basis() == Basis::Macdonald ? Basis::Schur : f.basis();
    return r.to_basis(target);
}

} // namespace

SymFunc nabla(const SymFunc& f) {
    return apply_eigen(f, [](const Partition& mu) { return partition_constants(mu).T; });
}

SymFunc nabla_inv(const SymFunc& f) {
    return apply_eigen(f, [](const Partition& mu) {
        return QTRat(1) / partition_constants(mu).T;
    });
}

SymFunc delta_op(const SymFunc& g, const SymFunc& f) {
    return apply_eigen(f, [&](const Partition& mu) {
        return eval_at(g, partition_constants(mu).B);
    });
}

SymFunc delta_prime_op(const SymFunc& g, const SymFunc& f) {
    return apply_eigen(f, [&](const Partition& mu) {
        return eval_at(g, partition_constants(mu).B - QTRat(1));
    });
}

SymFunc pi_op(const SymFunc& f) {
    return apply_eigen(f, [](const Partition& mu) { return partition_constants(mu).Pi; });
}

SymFunc pi_inv_op(const SymFunc& f) {
    return apply_eigen(f, [](const Partition& mu) {
        const QTRat& pi = partition_constants(mu).Pi;
        if (pi.is_zero()) throw std::domain_error("pi_inv: Pi_mu vanishes");
        return QTRat(1) / pi;
    });
}

SymFunc delta_e(int k, const SymFunc& f) {
    if (k < 0) return SymFunc::zero(f.degree());
    if (k == 0) return f;
    return delta_op(SymFunc::e(k), f);
}

SymFunc delta_prime_e(int k, const SymFunc& f) {
    if (k < 0) return SymFunc::zero(f.degree());
    if (k == 0) return f;
    return delta_prime_op(SymFunc::e(k), f);
}

SymFunc delta_h(int k, const SymFunc& f) {
    if (k < 0) return SymFunc::zero(f.degree());
    if (k == 0) return f;
    return delta_op(SymFunc::h(k), f);
}

std::map<int, SymFunc> tau_minus_eps(const SymFunc& f) {
    // f[X - eps] = sum_lambda (s_lambda^perp f) s_lambda[-eps], and
    // s_lambda[-eps] = 1 exactly on single columns, so tau_{-eps} = sum_r e_r^perp
    std::map<int, SymFunc> out;
    for (int r = 0; r <= f.degree(); ++r) {
        SymFunc g = skew_e(r, f);
        if (!g.is_zero()) out[f.degree() - r] = g;
    }
    return out;
}

std::map<int, SymFunc> tau_z(const QTRat& z, const SymFunc& f) {
    std::map<int, SymFunc> out;
    QTRat zp(1);
    for (int r = 0; r <= f.degree(); ++r) {
        SymFunc g = skew_h(r, f).scaled(zp);
        if (!g.is_zero()) out[f.degree() - r] = g;
        zp *= z;
    }
    return out;
}

std::map<Partition, QTRat> pieri_c(const Partition& mu, int k) {
    if (k < 1 || k > mu.size()) throw std::domain_error("pieri_c: need 1 <= k <= |mu|");
    SymFunc skewed = skew_h(k, macdonald_H(mu));
    return htilde_expansion(skewed);
}

std::map<Partition, QTRat> pieri_d(const Partition& mu, int k) {
    auto c = pieri_c(mu, k);
    const QTRat& wmu = partition_constants(mu).w;
    std::map<Partition, QTRat> d;
    for (auto& [nu, v] : c) d[nu] = v * partition_constants(nu).w / wmu;
    return d;
}

SymFunc e_n_bracket_qr(int n, int r) {
    // e_n[X (1-q^r)/(1-q)] = e_n[X [r]_q]
    if (n == 0) return SymFunc::one();
    QTRat scale(q_int(r));
    return plethysm(SymFunc::e(n), AlphabetExpr::scaled(scale)).to_basis(Basis::Monomial);
}

const SymFunc& E_nk(int n, int k) {
    if (k < 1 || k > n) throw std::domain_error("E_nk: need 1 <= k <= n");
    static std::map<int, std::vector<SymFunc>> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = memo.find(n);
    if (it == memo.end()) {
        // solve sum_k qbinom(k+j-1, k) E_{n,k} = e_n[X [j]_q], j = 1..n
        std::vector<SymFunc> rhs(n);
        for (int j = 1; j <= n; ++j) rhs[j - 1] = e_n_bracket_qr(n, j);
        std::vector<std::vector<QTRat>> A(n, std::vector<QTRat>(n));
        for (int j = 1; j <= n; ++j)
            for (int kk = 1; kk <= n; ++kk)
                A[j - 1][kk - 1] = QTRat(q_binomial(kk + j - 1, kk));
        // Gaussian elimination over Q(q,t) on the augmented system
        std::vector<SymFunc> sol(rhs);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int row = col; row < n; ++row)
                if (!A[row][col].is_zero()) { piv = row; break; }
            if (piv < 0) throw std::logic_error("E_nk: singular system");
            std::swap(A[col], A[piv]);
            std::swap(sol[col], sol[piv]);
            QTRat d = A[col][col];
            for (int j = col; j < n; ++j) A[col][j] /= d;
            sol[col] = sol[col].scaled(QTRat(1) / d);
            for (int row = 0; row < n; ++row) {
                if (row == col || A[row][col].is_zero()) continue;
                QTRat f = A[row][col];
                for (int j = col; j < n; ++j) A[row][j] -= f * A[col][j];
                sol[row] = sol[row] - sol[col].scaled(f);
            }
        }
        it = memo.emplace(n, std::move(sol)).first;
    }
    return it->second[k - 1];
}

} // namespace qtc
