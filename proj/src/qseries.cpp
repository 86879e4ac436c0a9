#include "qseries.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace qtc {

QTPoly q_int(int n) {
    QTPoly r;
    for (int i = 0; i < n; ++i) r.add_term(i, 0, 1);
    return r;
}

QTPoly q_factorial(int n) {
    QTPoly r(1);
    for (int i = 1; i <= n; ++i) r *= q_int(i);
    return r;
}

QTPoly q_binomial(int n, int k) {
    if (n < 0) throw std::domain_error("q_binomial: n must be nonnegative");
    if (k < 0 || k > n) return QTPoly();

    static std::map<std::pair<int, int>, QTPoly> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    QTPoly r;
    if (k == 0 || k == n) {
        r = QTPoly(1);
    } else {
        // [n k]_q = q^k [n-1 k]_q + [n-1 k-1]_q, computed without the lock
        // reentering: fetch sub-results through plain recursion on the memo.
        std::function<const QTPoly&(int, int)> get = [&](int a, int b) -> const QTPoly& {
            auto k2 = std::make_pair(a, b);
            auto it2 = memo.find(k2);
            if (it2 != memo.end()) return it2->second;
            QTPoly v;
            if (b == 0 || b == a) v = QTPoly(1);
            else if (b < 0 || b > a) v = QTPoly();
            else v = get(a - 1, b).shifted(b, 0) + get(a - 1, b - 1);
            return memo.emplace(k2, std::move(v)).first->second;
        };
        r = get(n, k);
    }
    return memo.emplace(key, std::move(r)).first->second;
}

QTRat q_rising(const QTRat& a, int s) {
    if (s < 0) throw std::domain_error("q_rising: s must be nonnegative");
    QTRat r(1);
    for (int i = 0; i < s; ++i)
        r *= QTRat(1) - QTRat(QTPoly::q(i)) * a;
    return r;
}

} // namespace qtc
