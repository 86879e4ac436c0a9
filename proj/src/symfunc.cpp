#include "symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>

namespace qtc {

// implemented in macdonald.cpp
SymFunc macdonald_to_ht_basis(const SymFunc& f);
SymFunc macdonald_from_ht_basis(const SymFunc& f);

int max_degree() {
    static int bound = [] {
        if (const char* env = std::getenv("QTCOMB_MAX_DEGREE")) {
            int v = std::atoi(env);
            if (v > 0) return v;
        }
        return 10;
    }();
    return bound;
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::Monomial: return "m";
        case Basis::Elementary: return "e";
        case Basis::Homogeneous: return "h";
        case Basis::Power: return "p";
        case Basis::Schur: return "s";
        case Basis::Macdonald: return "H";
    }
    return "?";
}

std::optional<Basis> basis_from_name(const std::string& s) {
    if (s == "m") return Basis::Monomial;
    if (s == "e") return Basis::Elementary;
    if (s == "h") return Basis::Homogeneous;
    if (s == "p") return Basis::Power;
    if (s == "s") return Basis::Schur;
    if (s == "H" || s == "Htilde") return Basis::Macdonald;
    return std::nullopt;
}

QTRat AlphabetExpr::main_at(int k) const {
    QTRat v = main.frobenius(k);
    if (main_eps && (k % 2)) v = -v;
    return v;
}

QTRat AlphabetExpr::const_at(int k) const {
    QTRat v = constant.frobenius(k);
    if (const_eps && (k % 2)) v = -v;
    return v;
}

namespace {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>; // column j = expansion of basis elt j in m

// ---- classical transition matrices, cached per degree -------------------

// coefficient map over Q in the monomial basis
using MMap = std::map<Partition, Rational>;

// m_lambda * m_mu over Q
MMap m_mult(const Partition& la, const Partition& mu) {
    MMap out;
    int n = la.size() + mu.size();
    for (const auto& nu : partitions_of(n)) {
        int L = nu.length();
        if (la.length() > L || mu.length() > L) continue;
        // padded multiset of la
        std::vector<int> alpha(la.parts());
        alpha.resize(L, 0);
        std::sort(alpha.begin(), alpha.end());
        std::vector<int> muPadded(mu.parts());
        muPadded.resize(L, 0);
        std::sort(muPadded.begin(), muPadded.end());
        long count = 0;
        do {
            std::vector<int> beta(L);
            bool ok = true;
            for (int i = 0; i < L; ++i) {
                beta[i] = nu.parts()[i] - alpha[i];
                if (beta[i] < 0) { ok = false; break; }
            }
            if (!ok) continue;
            std::sort(beta.begin(), beta.end());
            if (beta == muPadded) ++count;
        } while (std::next_permutation(alpha.begin(), alpha.end()));
        if (count) out[nu] = Rational((long)count);
    }
    return out;
}

MMap m_mult(const MMap& f, const Partition& mu) {
    MMap out;
    for (const auto& [la, c] : f) {
        MMap prod = m_mult(la, mu);
        for (const auto& [nu, k] : prod) {
            out[nu] += c * k;
            if (out[nu] == 0) out.erase(nu);
        }
    }
    return out;
}

// Kostka number: SSYT of shape la, content mu (mu a partition)
long kostka(const Partition& la, const Partition& mu);

long kostka_impl(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) return 0;
    if (la.size() == 0) return 1;
    if (!dominated_by(mu, la)) return 0;
    // remove a horizontal strip of size mu_last using the largest entry
    int last = mu.parts().back();
    std::vector<int> muRest(mu.parts());
    muRest.pop_back();
    Partition mu2(muRest);
    long total = 0;
    // enumerate nu contained in la with la/nu horizontal strip of size `last`
    std::function<void(int, std::vector<int>&, int)> rec = [&](int row, std::vector<int>& nu,
                                                               int removed) {
        if (row == la.length()) {
            if (removed != last) return;
            std::vector<int> parts;
            for (int p : nu)
                if (p > 0) parts.push_back(p);
            total += kostka(Partition(parts), mu2);
            return;
        }
        int lo = (row + 1 < la.length()) ? la.parts()[row + 1] : 0; // nu_row >= la_{row+1}
        int hi = la.parts()[row];
        if (row > 0) lo = std::max(lo, 0);
        for (int v = hi; v >= lo; --v) {
            // horizontal strip: nu_row >= la_{row+1} ensures at most one cell
            // per column is removed
            if (row + 1 < la.length() && v < la.parts()[row + 1]) break;
            if (row > 0 && v > la.parts()[row - 1]) continue;
            int rem = removed + (hi - v);
            if (rem > last) continue;
            nu[row] = v;
            rec(row + 1, nu, rem);
        }
        nu[row] = la.parts()[row];
    };
    std::vector<int> nu(la.parts());
    rec(0, nu, 0);
    return total;
}

long kostka(const Partition& la, const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, long> memo;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lock(mx);
        auto it = memo.find({la, mu});
        if (it != memo.end()) return it->second;
    }
    long v = kostka_impl(la, mu);
    std::lock_guard<std::mutex> lock(mx);
    memo.emplace(std::make_pair(la, mu), v);
    return v;
}

struct DegreeTables {
    std::vector<Partition> parts;              // canonical order
    std::map<Partition, int> index;
    // to_m[basis][j] = m-expansion (as dense column) of basis element j
    std::map<Basis, RatMatrix> to_m;
    std::map<Basis, RatMatrix> from_m;
};

RatMatrix invert(const RatMatrix& A) {
    int n = (int)A.size();
    RatMatrix M(n, RatRow(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M[i][j] = A[i][j];
        M[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (M[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("transition matrix is singular");
        std::swap(M[col], M[piv]);
        Rational d = M[col][col];
        for (int j = 0; j < 2 * n; ++j) M[col][j] /= d;
        for (int r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rational f = M[r][col];
            for (int j = 0; j < 2 * n; ++j) M[r][j] -= f * M[col][j];
        }
    }
    RatMatrix inv(n, RatRow(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = M[i][n + j];
    return inv;
}

const DegreeTables& degree_tables(int n) {
    static std::map<int, DegreeTables> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    if (n > max_degree())
        throw std::domain_error("DegreeBound: degree " + std::to_string(n) +
                                " exceeds the configured bound");

    DegreeTables tbl;
    tbl.parts = partitions_of(n);
    int N = (int)tbl.parts.size();
    for (int i = 0; i < N; ++i) tbl.index[tbl.parts[i]] = i;

    auto column_from_mmap = [&](const MMap& f) {
        RatRow col(N, Rational(0));
        for (const auto& [nu, c] : f) col[tbl.index.at(nu)] = c;
        return col;
    };

    auto product_expansion = [&](const Partition& la, auto single) {
        MMap acc;
        acc[Partition()] = 1;
        for (int part : la.parts()) {
            MMap next;
            MMap factor = single(part);
            for (const auto& [al, c] : acc) {
                for (const auto& [be, d] : factor) {
                    MMap prod = m_mult(al, be);
                    for (const auto& [nu, k] : prod) {
                        next[nu] += c * d * k;
                        if (next[nu] == 0) next.erase(nu);
                    }
                }
            }
            acc = std::move(next);
        }
        return acc;
    };

    auto e_single = [](int k) {
        MMap f;
        std::vector<int> ones(k, 1);
        f[Partition(ones)] = 1;
        return f;
    };
    auto h_single = [](int k) {
        MMap f;
        for (const auto& la : partitions_of(k)) f[la] = 1;
        return f;
    };
    auto p_single = [](int k) {
        MMap f;
        f[Partition({k})] = 1;
        return f;
    };

    RatMatrix Em(N), Hm(N), Pm(N), Sm(N);
    for (int j = 0; j < N; ++j) {
        const Partition& la = tbl.parts[j];
        Em[j] = column_from_mmap(product_expansion(la, e_single));
        Hm[j] = column_from_mmap(product_expansion(la, h_single));
        Pm[j] = column_from_mmap(product_expansion(la, p_single));
        MMap s;
        for (const auto& mu : tbl.parts) {
            long k = kostka(la, mu);
            if (k) s[mu] = Rational(k);
        }
        Sm[j] = column_from_mmap(s);
    }
    tbl.to_m[Basis::Elementary] = Em;
    tbl.to_m[Basis::Homogeneous] = Hm;
    tbl.to_m[Basis::Power] = Pm;
    tbl.to_m[Basis::Schur] = Sm;

    // from_m = inverse of the (columns = expansions) matrix, i.e. invert
    // the matrix whose entry [row][col] is to_m[col][row]
    for (auto& [b, cols] : tbl.to_m) {
        RatMatrix A(N, RatRow(N));
        for (int j = 0; j < N; ++j)
            for (int i = 0; i < N; ++i) A[i][j] = cols[j][i];
        tbl.from_m[b] = invert(A);
    }
    return memo.emplace(n, std::move(tbl)).first->second;
}

} // namespace

SymFunc::SymFunc(int degree, Basis basis, CoeffMap coeffs)
    : degree_(degree), basis_(basis), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first.size() != degree_)
            throw std::invalid_argument("SymFunc: partition size != degree");
        if (it->second.is_zero()) it = coeffs_.erase(it);
        else ++it;
    }
}

SymFunc SymFunc::e(int n) {
    if (n < 0) return SymFunc(0, Basis::Elementary); // e_k = 0 for k < 0
    SymFunc f(n, Basis::Elementary);
    f.coeffs_[Partition(n ? std::vector<int>{n} : std::vector<int>{})] = QTRat(1);
    return f;
}
SymFunc SymFunc::h(int n) {
    if (n < 0) return SymFunc(0, Basis::Homogeneous);
    SymFunc f(n, Basis::Homogeneous);
    f.coeffs_[Partition(n ? std::vector<int>{n} : std::vector<int>{})] = QTRat(1);
    return f;
}
SymFunc SymFunc::p(int n) {
    SymFunc f(n, Basis::Power);
    f.coeffs_[Partition(n ? std::vector<int>{n} : std::vector<int>{})] = QTRat(1);
    return f;
}
SymFunc SymFunc::s(const Partition& mu) {
    SymFunc f(mu.size(), Basis::Schur);
    f.coeffs_[mu] = QTRat(1);
    return f;
}
SymFunc SymFunc::e(const Partition& mu) {
    SymFunc f(mu.size(), Basis::Elementary);
    f.coeffs_[mu] = QTRat(1);
    return f;
}
SymFunc SymFunc::h(const Partition& mu) {
    SymFunc f(mu.size(), Basis::Homogeneous);
    f.coeffs_[mu] = QTRat(1);
    return f;
}

QTRat SymFunc::coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? QTRat(0) : it->second;
}

void SymFunc::set_coeff(const Partition& mu, const QTRat& c) {
    if (mu.size() != degree_)
        throw std::invalid_argument("SymFunc: partition size != degree");
    if (c.is_zero()) coeffs_.erase(mu);
    else coeffs_[mu] = c;
}

SymFunc SymFunc::to_basis(Basis target) const {
    if (basis_ == target) return *this;
    if (basis_ == Basis::Macdonald) return macdonald_from_ht_basis(*this).to_basis(target);
    if (target == Basis::Macdonald) {
        SymFunc m = to_basis(Basis::Monomial);
        return macdonald_to_ht_basis(m);
    }
    const auto& tbl = degree_tables(degree_);
    int N = (int)tbl.parts.size();
    std::vector<QTRat> vec(N);
    for (const auto& [mu, c] : coeffs_) vec[tbl.index.at(mu)] = c;

    auto apply = [&](const RatMatrix& cols, const std::vector<QTRat>& v, bool columns) {
        std::vector<QTRat> out(N);
        if (columns) {
            // out = sum_j v[j] * cols[j]
            for (int j = 0; j < N; ++j) {
                if (v[j].is_zero()) continue;
                for (int i = 0; i < N; ++i)
                    if (cols[j][i] != 0) out[i] += v[j] * QTRat(Rational(cols[j][i]));
            }
        } else {
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j)
                    if (cols[i][j] != 0 && !v[j].is_zero())
                        out[i] += v[j] * QTRat(Rational(cols[i][j]));
        }
        return out;
    };

    std::vector<QTRat> mvec = vec;
    if (basis_ != Basis::Monomial) mvec = apply(tbl.to_m.at(basis_), vec, true);
    std::vector<QTRat> res = mvec;
    if (target != Basis::Monomial) res = apply(tbl.from_m.at(target), mvec, false);

    SymFunc out(degree_, target);
    for (int i = 0; i < N; ++i)
        if (!res[i].is_zero()) out.coeffs_[tbl.parts[i]] = res[i];
    return out;
}

SymFunc SymFunc::operator-() const {
    SymFunc r(degree_, basis_);
    for (const auto& [mu, c] : coeffs_) r.coeffs_[mu] = -c;
    return r;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree_ != b.degree_)
        throw std::invalid_argument("DegreeMismatch: adding different degrees");
    SymFunc bb = b.basis_ == a.basis_ ? b : b.to_basis(a.basis_);
    SymFunc r = a;
    for (const auto& [mu, c] : bb.coeffs_) {
        QTRat v = r.coeff(mu) + c;
        r.set_coeff(mu, v);
    }
    return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    if (a.is_zero() || b.is_zero()) return SymFunc::zero(a.degree_ + b.degree_);
    SymFunc pa = a.to_basis(Basis::Power), pb = b.to_basis(Basis::Power);
    SymFunc r(a.degree_ + b.degree_, Basis::Power);
    for (const auto& [la, c] : pa.coeffs_)
        for (const auto& [mu, d] : pb.coeffs_) {
            Partition nu = partition_union(la, mu);
            QTRat v = r.coeff(nu) + c * d;
            r.set_coeff(nu, v);
        }
    return r.to_basis(Basis::Monomial);
}

SymFunc SymFunc::scaled(const QTRat& c) const {
    SymFunc r(degree_, basis_);
    if (c.is_zero()) return r;
    for (const auto& [mu, x] : coeffs_) r.coeffs_[mu] = x * c;
    return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.degree_ != b.degree_) return a.is_zero() && b.is_zero();
    if (a.basis_ == b.basis_) return a.coeffs_ == b.coeffs_;
    return a.to_basis(Basis::Monomial).coeffs_ == b.to_basis(Basis::Monomial).coeffs_;
}

std::string SymFunc::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << basis_name(basis_) << mu.str();
    }
    return os.str();
}

QTRat hall_scalar(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) return QTRat(0);
    SymFunc pf = f.to_basis(Basis::Power), pg = g.to_basis(Basis::Power);
    QTRat acc(0);
    for (const auto& [mu, c] : pf.coeffs()) {
        auto it = pg.coeffs().find(mu);
        if (it == pg.coeffs().end()) continue;
        acc += c * it->second * QTRat(mu.z());
    }
    return acc;
}

SymFunc omega(const SymFunc& f) {
    SymFunc pf = f.to_basis(Basis::Power);
    SymFunc r(f.degree(), Basis::Power);
    for (const auto& [mu, c] : pf.coeffs()) {
        int sign = ((mu.size() - mu.length()) % 2) ? -1 : 1;
        r.set_coeff(mu, sign > 0 ? c : -c);
    }
    return r.to_basis(f.basis() == Basis::Macdonald ? Basis::Monomial : f.basis());
}

SymFunc phi_M(const SymFunc& f) {
    SymFunc pf = f.to_basis(Basis::Power);
    SymFunc r(f.degree(), Basis::Power);
    for (const auto& [mu, c] : pf.coeffs()) {
        QTRat factor(1);
        for (int part : mu.parts()) {
            QTPoly Mk = (QTPoly(1) - QTPoly::q(part)) * (QTPoly(1) - QTPoly::t(part));
            factor *= QTRat(Mk);
        }
        r.set_coeff(mu, c * factor);
    }
    return r;
}

SymFunc star_transform(const SymFunc& f) {
    SymFunc pf = f.to_basis(Basis::Power);
    SymFunc r(f.degree(), Basis::Power);
    for (const auto& [mu, c] : pf.coeffs()) {
        QTRat factor(1);
        for (int part : mu.parts()) {
            QTPoly Mk = (QTPoly(1) - QTPoly::q(part)) * (QTPoly(1) - QTPoly::t(part));
            factor /= QTRat(Mk);
        }
        r.set_coeff(mu, c * factor);
    }
    return r;
}

QTRat star_scalar(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree()) return QTRat(0);
    return hall_scalar(phi_M(omega(f)), g);
}

SymFunc plethysm(const SymFunc& f, const AlphabetExpr& a) {
    if (a.main.is_zero())
        throw std::invalid_argument("UnsupportedAlphabet: main coefficient is zero; use plethysm_scalar");
    SymFunc pf = f.to_basis(Basis::Power);
    // p_la [c0 + c1 X] expands over sub-multisets of parts
    std::map<int, SymFunc> graded; // degree -> accumulated p-basis result
    for (const auto& [la, c] : pf.coeffs()) {
        int L = la.length();
        std::vector<QTRat> s0(L), s1(L);
        for (int i = 0; i < L; ++i) {
            s0[i] = a.const_at(la.parts()[i]);
            s1[i] = a.main_at(la.parts()[i]);
        }
        for (unsigned mask = 0; mask < (1u << L); ++mask) {
            QTRat coeff = c;
            std::vector<int> kept;
            for (int i = 0; i < L; ++i) {
                if (mask & (1u << i)) {
                    coeff *= s1[i];
                    kept.push_back(la.parts()[i]);
                } else {
                    coeff *= s0[i];
                }
                if (coeff.is_zero()) break;
            }
            if (coeff.is_zero()) continue;
            std::sort(kept.begin(), kept.end(), std::greater<int>());
            Partition nu(kept);
            auto [it, fresh] = graded.try_emplace(nu.size(), SymFunc(nu.size(), Basis::Power));
            it->second.set_coeff(nu, it->second.coeff(nu) + coeff);
        }
    }
    // the constant alphabet contributes only to lower degrees; callers of
    // plethysm on a homogeneous f with a pure-scale alphabet get the same
    // degree back, otherwise we require the result to be homogeneous
    SymFunc out;
    bool found = false;
    for (auto& [d, g] : graded) {
        if (g.is_zero()) continue;
        if (found) throw std::invalid_argument("UnsupportedAlphabet: plethysm result is not homogeneous");
        out = g;
        found = true;
    }
    if (!found) return SymFunc::zero(f.degree(), Basis::Power);
    return out;
}

QTRat plethysm_scalar(const SymFunc& f, const AlphabetExpr& a) {
    if (!a.main.is_zero())
        throw std::invalid_argument("UnsupportedAlphabet: alphabet has an X part");
    SymFunc pf = f.to_basis(Basis::Power);
    QTRat acc(0);
    for (const auto& [la, c] : pf.coeffs()) {
        QTRat term = c;
        for (int part : la.parts()) {
            term *= a.const_at(part);
            if (term.is_zero()) break;
        }
        acc += term;
    }
    return acc;
}

SymFunc skew(const SymFunc& g, const SymFunc& f) {
    int k = g.degree();
    if (k > f.degree()) return SymFunc::zero(0);
    if (k == 0) return f.scaled(eval_at(g, QTRat(0))); // degree-0 g is a scalar
    SymFunc pg = g.to_basis(Basis::Power);
    SymFunc pf = f.to_basis(Basis::Power);
    SymFunc r(f.degree() - k, Basis::Power);
    for (const auto& [nu, gc] : pg.coeffs()) {
        for (const auto& [la, c] : pf.coeffs()) {
            // p_nu^perp acts as a weighted part removal
            std::vector<int> rest(la.parts());
            QTRat factor = c * gc;
            bool ok = true;
            for (int part : nu.parts()) {
                auto it = std::find(rest.begin(), rest.end(), part);
                if (it == rest.end()) { ok = false; break; }
                int mult = (int)std::count(rest.begin(), rest.end(), part);
                factor *= QTRat(Rational(part) * mult);
                rest.erase(it);
            }
            if (!ok) continue;
            Partition target(rest);
            r.set_coeff(target, r.coeff(target) + factor);
        }
    }
    return r;
}

SymFunc skew_h(int k, const SymFunc& f) {
    if (k < 0 || k > f.degree()) return SymFunc::zero(std::max(0, f.degree() - k));
    if (k == 0) return f;
    return skew(SymFunc::h(k), f);
}

SymFunc skew_e(int k, const SymFunc& f) {
    if (k < 0 || k > f.degree()) return SymFunc::zero(std::max(0, f.degree() - k));
    if (k == 0) return f;
    return skew(SymFunc::e(k), f);
}

SymFunc specialize_t(const SymFunc& f, const Rational& c, int e) {
    SymFunc r(f.degree(), f.basis());
    for (const auto& [mu, co] : f.coeffs()) {
        QTRat v = co.substitute_t(c, e);
        if (!v.is_zero()) r.set_coeff(mu, v);
    }
    return r;
}

} // namespace qtc
