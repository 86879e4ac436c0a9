#include "qtpoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace qtc {

namespace {

// Dense univariate polynomial over Z, used only inside gcd.
struct ZPoly {
    std::vector<Integer> c; // c[i] = coefficient of x^i

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }
    const Integer& lc() const { return c.back(); }
};

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.zero() || b.zero()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Integer(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

ZPoly zp_scale(const ZPoly& a, const Integer& s) {
    if (s == 0) return {};
    ZPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Integer(0));
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

Integer zp_content(const ZPoly& a) {
    Integer g(0);
    for (const auto& x : a.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly zp_div_int(const ZPoly& a, const Integer& d) {
    ZPoly r = a;
    for (auto& x : r.c) {
        Integer qv, rem;
        mpz_tdiv_qr(qv.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
        if (rem != 0) throw std::logic_error("ZPoly: inexact integer division");
        x = qv;
    }
    return r;
}

ZPoly zp_primitive(const ZPoly& a) {
    if (a.zero()) return a;
    Integer g = zp_content(a);
    if (sgn(a.lc()) < 0) g = -g;
    return zp_div_int(a, g);
}

bool zp_divides(const ZPoly& d, const ZPoly& a) {
    if (a.zero()) return true;
    if (d.zero() || d.deg() > a.deg()) return false;
    ZPoly num = a;
    while (!num.zero() && num.deg() >= d.deg()) {
        int k = num.deg() - d.deg();
        Integer qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), num.lc().get_mpz_t(),
                    d.lc().get_mpz_t());
        if (rem != 0) return false;
        ZPoly s;
        s.c.assign(k + 1, Integer(0));
        s.c[k] = qc;
        num = zp_sub(num, zp_mul(s, d));
    }
    return num.zero();
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }
u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

const std::vector<u64>& gcd_primes() {
    static std::vector<u64> primes = [] {
        std::vector<u64> v;
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, 62);
        for (int i = 0; i < 200; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            v.push_back(mpz_get_ui(p.get_mpz_t()));
        }
        return v;
    }();
    return primes;
}

std::vector<u64> zp_mod(const ZPoly& a, u64 p) {
    std::vector<u64> r(a.c.size());
    Integer tmp;
    for (size_t i = 0; i < a.c.size(); ++i) {
        mpz_mod_ui(tmp.get_mpz_t(), a.c[i].get_mpz_t(), p);
        r[i] = mpz_get_ui(tmp.get_mpz_t());
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> mod_gcd_monic(std::vector<u64> a, std::vector<u64> b, u64 p) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        // a mod b
        u64 inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            u64 f = mulmod(a.back(), inv, p);
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                u64 sub = mulmod(f, b[i], p);
                a[off + i] = (a[off + i] + p - sub) % p;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = powmod(a.back(), p - 2, p);
        for (auto& x : a) x = mulmod(x, inv, p);
    }
    return a;
}

// Modular gcd over Z[x]: primitive-part gcd via small-prime CRT, checked
// by trial division; falls back cheaply since inputs here stay moderate.
ZPoly zp_gcd(ZPoly a, ZPoly b) {
    if (a.zero()) return zp_primitive(b);
    if (b.zero()) return zp_primitive(a);
    Integer ca = zp_content(a), cb = zp_content(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = zp_primitive(a);
    b = zp_primitive(b);
    ZPoly cgp;
    cgp.c = {cg};
    if (a.deg() == 0 || b.deg() == 0) return cgp;

    Integer g0;
    mpz_gcd(g0.get_mpz_t(), a.lc().get_mpz_t(), b.lc().get_mpz_t());

    int best_deg = std::min(a.deg(), b.deg()) + 1;
    std::vector<Integer> H; // CRT accumulator, symmetric representatives
    Integer M(1);

    for (u64 p : gcd_primes()) {
        if (mpz_divisible_ui_p(a.lc().get_mpz_t(), p) ||
            mpz_divisible_ui_p(b.lc().get_mpz_t(), p))
            continue;
        auto gp = mod_gcd_monic(zp_mod(a, p), zp_mod(b, p), p);
        int dp = (int)gp.size() - 1;
        if (dp == 0) return cgp; // coprime
        if (dp > best_deg) continue; // unlucky prime
        Integer g0p;
        mpz_mod_ui(g0p.get_mpz_t(), g0.get_mpz_t(), p);
        u64 scale = mpz_get_ui(g0p.get_mpz_t());
        std::vector<Integer> hp(gp.size());
        for (size_t i = 0; i < gp.size(); ++i) hp[i] = Integer(mulmod(gp[i], scale, p));
        if (dp < best_deg) {
            best_deg = dp;
            H = hp;
            M = p;
        } else {
            // CRT combine H (mod M) with hp (mod p)
            Integer pI(p), Mnew = M * pI, Minv;
            mpz_invert(Minv.get_mpz_t(), M.get_mpz_t(), pI.get_mpz_t());
            bool stable = true;
            for (size_t i = 0; i < H.size(); ++i) {
                Integer diff = hp[i] - H[i];
                Integer k = (diff * Minv) % pI;
                if (k < 0) k += pI;
                Integer v = H[i] + k * M;
                // symmetric representative
                if (v * 2 > Mnew) v -= Mnew;
                if (v != H[i]) stable = false;
                H[i] = v;
            }
            M = Mnew;
            if (stable) {
                ZPoly cand;
                cand.c = H;
                cand.trim();
                if (!cand.zero()) {
                    cand = zp_primitive(cand);
                    if (zp_divides(cand, a) && zp_divides(cand, b))
                        return zp_mul(cand, cgp);
                }
            }
        }
        // first prime: also try immediately (gcd often reconstructible from one)
        if (M == Integer(p)) {
            std::vector<Integer> sym = H;
            for (auto& v : sym)
                if (v * 2 > M) v -= M;
            ZPoly cand;
            cand.c = sym;
            cand.trim();
            if (!cand.zero()) {
                cand = zp_primitive(cand);
                if (cand.deg() == best_deg && zp_divides(cand, a) && zp_divides(cand, b))
                    return zp_mul(cand, cgp);
            }
        }
    }
    throw std::logic_error("ZPoly: modular gcd did not stabilize");
}

// Bivariate polynomial as coefficients in t over Z[q] (dense in t).
using TPoly = std::vector<ZPoly>; // index = t-degree

void tp_trim(TPoly& a) {
    while (!a.empty() && a.back().zero()) a.pop_back();
}

TPoly tp_mul(const TPoly& a, const TPoly& b) {
    if (a.empty() || b.empty()) return {};
    TPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].zero()) continue;
            ZPoly p = zp_mul(a[i], b[j]);
            if (r[i + j].zero()) r[i + j] = p;
            else {
                ZPoly neg = zp_scale(p, Integer(-1));
                r[i + j] = zp_sub(r[i + j], neg);
            }
        }
    }
    tp_trim(r);
    return r;
}

TPoly tp_sub(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = zp_sub(r[i], b[i]);
    tp_trim(r);
    return r;
}

TPoly tp_scale_zp(const TPoly& a, const ZPoly& s) {
    TPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = zp_mul(a[i], s);
    tp_trim(r);
    return r;
}

ZPoly tp_content(const TPoly& a) {
    ZPoly g;
    for (const auto& x : a) {
        if (x.zero()) continue;
        g = zp_gcd(g, x);
        if (g.deg() == 0 && g.lc() == 1) break;
    }
    return g;
}

TPoly tp_div_zp(const TPoly& a, const ZPoly& d) {
    // exact division of every t-coefficient by d (univariate exact division)
    TPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].zero()) continue;
        // univariate exact division a[i] / d over Z (via Q then check)
        ZPoly num = a[i];
        ZPoly quo;
        quo.c.assign(std::max(0, num.deg() - d.deg() + 1), Integer(0));
        while (!num.zero() && num.deg() >= d.deg()) {
            int k = num.deg() - d.deg();
            Integer qc, rem;
            mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), num.lc().get_mpz_t(),
                        d.lc().get_mpz_t());
            if (rem != 0) throw std::logic_error("TPoly: inexact division");
            quo.c[k] = qc;
            ZPoly s;
            s.c.assign(k + 1, Integer(0));
            s.c[k] = qc;
            num = zp_sub(num, zp_mul(s, d));
        }
        if (!num.zero()) throw std::logic_error("TPoly: inexact division");
        quo.trim();
        r[i] = quo;
    }
    tp_trim(r);
    return r;
}

TPoly tp_prem(TPoly a, const TPoly& b) {
    int db = (int)b.size() - 1;
    while (!a.empty() && (int)a.size() - 1 >= db) {
        int k = (int)a.size() - 1 - db;
        ZPoly la = a.back();
        ZPoly g = zp_gcd(la, b.back());
        ZPoly mul_a = b.back(), mul_s = la;
        if (!(g.deg() == 0 && g.lc() == 1)) {
            mul_a = tp_div_zp(TPoly{mul_a}, g)[0];
            mul_s = tp_div_zp(TPoly{mul_s}, g)[0];
        }
        a = tp_scale_zp(a, mul_a);
        TPoly s(k + 1);
        s[k] = mul_s;
        a = tp_sub(a, tp_mul(s, b));
        tp_trim(a);
        // strip integer content to keep coefficient growth in check
        if (!a.empty()) {
            Integer c(0);
            for (const auto& zc : a)
                for (const auto& x : zc.c) {
                    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
                    if (c == 1) break;
                }
            if (c > 1)
                for (auto& zc : a) zc = zp_div_int(zc, c);
        }
    }
    return a;
}

TPoly tp_primitive(const TPoly& a) {
    if (a.empty()) return a;
    ZPoly g = tp_content(a);
    return tp_div_zp(a, g);
}

// Substitute an integer for q, leaving a univariate polynomial in t.
ZPoly tp_eval_q(const TPoly& a, long c) {
    ZPoly r;
    r.c.resize(a.size(), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
        Integer acc(0);
        for (int j = a[i].deg(); j >= 0; --j) acc = acc * c + a[i].c[j];
        r.c[i] = acc;
    }
    r.trim();
    return r;
}

TPoly tp_gcd(TPoly a, TPoly b) {
    tp_trim(a);
    tp_trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    ZPoly ca = tp_content(a), cb = tp_content(b);
    ZPoly cg = zp_gcd(ca, cb);
    a = tp_div_zp(a, ca);
    b = tp_div_zp(b, cb);
    TPoly cgp(1);
    cgp[0] = cg;

    // coprimality fast path: a degree-0 gcd at a specialized q makes the
    // primitive parts coprime in t
    for (long c : {2L, 3L, 5L, 7L}) {
        Integer la(0), lb(0);
        for (int j = a.back().deg(); j >= 0; --j) la = la * c + a.back().c[j];
        for (int j = b.back().deg(); j >= 0; --j) lb = lb * c + b.back().c[j];
        if (la == 0 || lb == 0) continue;
        ZPoly ga = tp_eval_q(a, c), gb = tp_eval_q(b, c);
        ZPoly g = zp_gcd(ga, gb);
        if (g.deg() == 0) return cgp;
        break;
    }

    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        TPoly r = tp_prem(a, b);
        a = b;
        b = tp_primitive(r);
    }
    TPoly g = tp_primitive(a);
    return tp_mul(g, cgp);
}

} // namespace

int QTPoly::min_qexp() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) m = std::min(m, e.first);
    return terms_.empty() ? 0 : m;
}
int QTPoly::max_qexp() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& [e, c] : terms_) m = std::max(m, e.first);
    return terms_.empty() ? 0 : m;
}
int QTPoly::min_texp() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) m = std::min(m, e.second);
    return terms_.empty() ? 0 : m;
}
int QTPoly::max_texp() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& [e, c] : terms_) m = std::max(m, e.second);
    return terms_.empty() ? 0 : m;
}

QTPoly QTPoly::operator-() const {
    QTPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

QTPoly QTPoly::scaled(const Rational& c) const {
    QTPoly r;
    if (c == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_[e] = x * c;
    return r;
}

QTPoly QTPoly::shifted(int qe, int te, const Rational& c) const {
    QTPoly r;
    if (c == 0) return r;
    for (const auto& [e, x] : terms_)
        r.terms_[{e.first + qe, e.second + te}] = x * c;
    return r;
}

QTPoly QTPoly::pow(unsigned e) const {
    QTPoly r(1);
    QTPoly base = *this;
    while (e) {
        if (e & 1) r *= base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

QTPoly QTPoly::frobenius(int k) const {
    QTPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.first * k, e.second * k}] = c;
    return r;
}

QTPoly QTPoly::substitute_t(const Rational& c, int e) const {
    QTPoly r;
    for (const auto& [ex, co] : terms_) {
        Rational f = co;
        int te = ex.second;
        if (te >= 0) f *= rational_pow(c, te);
        else {
            if (c == 0) throw std::domain_error("QTPoly: t -> 0 with negative t-exponent");
            f *= rational_pow(Rational(1) / c, -te);
        }
        r.add_term(ex.first + e * te, 0, f);
    }
    return r;
}

QTPoly QTPoly::inverted_t() const {
    QTPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.first, -e.second}] = c;
    return r;
}

QTPoly QTPoly::swapped_qt() const {
    QTPoly r;
    for (const auto& [e, c] : terms_) r.terms_[{e.second, e.first}] = c;
    return r;
}

Rational QTPoly::eval(const Rational& qv, const Rational& tv) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        auto powi = [](const Rational& b, int k) {
            if (k >= 0) return rational_pow(b, k);
            if (b == 0) throw std::domain_error("QTPoly: eval 0^negative");
            return rational_pow(Rational(1) / b, -k);
        };
        term *= powi(qv, e.first);
        term *= powi(tv, e.second);
        acc += term;
    }
    return acc;
}

QTPoly QTPoly::divide_exact(const QTPoly& g) const {
    if (g.is_zero()) throw std::domain_error("QTPoly: division by zero");
    if (is_zero()) return QTPoly();
    // Work with shifted copies so all exponents are nonnegative, divide in
    // lex order on (t,q), then shift back.
    int aq = min_qexp(), at = min_texp();
    int gq = g.min_qexp(), gt = g.min_texp();
    QTPoly num = shifted(-aq, -at);
    QTPoly den = g.shifted(-gq, -gt);

    auto lex_leading = [](const QTPoly& p) {
        // largest (texp, qexp) pair
        auto best = p.terms_.begin();
        for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it) {
            auto key = std::make_pair(it->first.second, it->first.first);
            auto bkey = std::make_pair(best->first.second, best->first.first);
            if (key > bkey) best = it;
        }
        return best;
    };

    QTPoly quo;
    auto dl = lex_leading(den);
    while (!num.is_zero()) {
        auto nl = lex_leading(num);
        int dq = nl->first.first - dl->first.first;
        int dt = nl->first.second - dl->first.second;
        if (dq < 0 || dt < 0) throw std::domain_error("QTPoly: inexact division");
        Rational c = nl->second / dl->second;
        quo.add_term(dq, dt, c);
        num -= den.shifted(dq, dt, c);
    }
    return quo.shifted(aq - gq, at - gt);
}

QTPoly QTPoly::gcd(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero() && b.is_zero()) return QTPoly();
    auto to_tpoly = [](const QTPoly& p) {
        // shift exponents to be >= 0, clear denominators
        QTPoly s = p.shifted(-p.min_qexp(), -p.min_texp());
        Integer lcm(1);
        for (const auto& [e, c] : s.terms())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        TPoly r(s.is_zero() ? 0 : s.max_texp() + 1);
        for (const auto& [e, c] : s.terms()) {
            Rational ci = c * Rational(lcm);
            ZPoly& zc = r[e.second];
            if ((int)zc.c.size() <= e.first) zc.c.resize(e.first + 1, Integer(0));
            zc.c[e.first] = ci.get_num();
        }
        for (auto& zc : r) zc.trim();
        tp_trim(r);
        return r;
    };

    if (a.is_zero() || b.is_zero()) {
        const QTPoly& nz = a.is_zero() ? b : a;
        TPoly g = to_tpoly(nz);
        g = tp_primitive(g);
        QTPoly r;
        for (size_t te = 0; te < g.size(); ++te)
            for (size_t qe = 0; qe < g[te].c.size(); ++qe)
                if (g[te].c[qe] != 0) r.add_term((int)qe, (int)te, Rational(g[te].c[qe]));
        return r;
    }

    // run the PRS in the variable with the smaller degree span
    int tspan = std::max(a.max_texp() - a.min_texp(), b.max_texp() - b.min_texp());
    int qspan = std::max(a.max_qexp() - a.min_qexp(), b.max_qexp() - b.min_qexp());
    if (tspan > qspan) return gcd(a.swapped_qt(), b.swapped_qt()).swapped_qt();

    if (a == b) {
        QTPoly s = a.shifted(-a.min_qexp(), -a.min_texp());
        Integer lcm(1), gnum(0);
        for (const auto& [e, c] : s.terms())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& [e, c] : s.terms()) {
            Rational sc = c * Rational(lcm);
            Integer nn = sc.get_num();
            mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), nn.get_mpz_t());
        }
        QTPoly r = s.scaled(Rational(lcm) / Rational(gnum));
        auto last = std::prev(r.terms_.end());
        if (last->second < 0) r = -r;
        return r;
    }

    // monomial operand: the gcd is a constant
    if (a.terms().size() == 1 || b.terms().size() == 1) return QTPoly(1);

    TPoly g = tp_gcd(to_tpoly(a), to_tpoly(b));
    QTPoly r;
    for (size_t te = 0; te < g.size(); ++te)
        for (size_t qe = 0; qe < g[te].c.size(); ++qe)
            if (g[te].c[qe] != 0) r.add_term((int)qe, (int)te, Rational(g[te].c[qe]));
    if (r.is_zero()) return r;
    // canonical sign: lex-leading coefficient positive
    auto last = std::prev(r.terms_.end());
    if (last->second < 0) r = -r;
    return r;
}

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational co = c;
        bool neg = co < 0;
        if (neg) co = -co;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        bool has_var = (e.first != 0 || e.second != 0);
        if (co != 1 || !has_var) factors.push_back(to_string(co));
        auto var = [&](const char* v, int ex) {
            if (ex == 0) return;
            std::string s = v;
            if (ex != 1) s += "^" + std::to_string(ex);
            factors.push_back(s);
        };
        var("q", e.first);
        var("t", e.second);
        for (size_t i = 0; i < factors.size(); ++i) {
            if (i) os << "*";
            os << factors[i];
        }
    }
    return os.str();
}

QTPoly binom_qt(long n, long k) {
    if (k < 0 || k > n) return QTPoly();
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return QTPoly(Rational(r));
}

} // namespace qtc
