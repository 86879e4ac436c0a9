#include "partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qtc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[j]++;
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

int Partition::multiplicity(int v) const {
    return (int)std::count(parts_.begin(), parts_.end(), v);
}

Rational Partition::z() const {
    Rational r(1);
    int i = 0;
    while (i < (int)parts_.size()) {
        int j = i;
        while (j < (int)parts_.size() && parts_[j] == parts_[i]) ++j;
        int m = j - i;
        for (int k = 1; k <= m; ++k) r *= k;
        for (int k = 0; k < m; ++k) r *= parts_[i];
        i = j;
    }
    return r;
}

long Partition::n_stat() const {
    long s = 0;
    for (size_t i = 0; i < parts_.size(); ++i) s += (long)i * parts_[i];
    return s;
}

bool Partition::operator<(const Partition& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    // reverse-lex: (n) < (n-1,1) < ... < (1^n)
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                        parts_.begin(), parts_.end());
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of: n must be nonnegative");
    static std::map<int, std::vector<Partition>> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    std::vector<Partition> out;
    std::vector<int> cur;
    // generate in descending lex order: largest first part first
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return memo.emplace(n, std::move(out)).first->second;
}

Partition partition_union(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

bool dominated_by(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    long sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

CellStats cell_stats(const Partition& mu, int col, int row) {
    if (row < 1 || row > mu.length() || col < 1 || col > mu.parts()[row - 1])
        throw std::invalid_argument("CellOutOfShape");
    CellStats s;
    s.arm = mu.parts()[row - 1] - col;
    s.coarm = col - 1;
    s.coleg = row - 1;
    int leg = 0;
    for (int r = row; r < mu.length(); ++r)
        if (mu.parts()[r] >= col) ++leg;
    s.leg = leg;
    return s;
}

const PartitionData& partition_constants(const Partition& mu) {
    static std::map<Partition, PartitionData> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;

    QTPoly B, T(1), Pi(1), w(1);
    for (int row = 1; row <= mu.length(); ++row) {
        for (int col = 1; col <= mu.parts()[row - 1]; ++col) {
            CellStats s = cell_stats(mu, col, row);
            B.add_term(s.coarm, s.coleg, 1);
            T = T.shifted(s.coarm, s.coleg);
            if (!(col == 1 && row == 1)) {
                QTPoly f(1);
                f.add_term(s.coarm, s.coleg, -1);
                Pi *= f;
            }
            QTPoly f1, f2;
            f1.add_term(s.arm, 0, 1);
            f1.add_term(0, s.leg + 1, -1);
            f2.add_term(0, s.leg, 1);
            f2.add_term(s.arm + 1, 0, -1);
            w *= f1 * f2;
        }
    }
    PartitionData d;
    d.B = QTRat(B);
    d.T = QTRat(T);
    d.Pi = QTRat(Pi);
    d.w = QTRat(w);
    QTPoly M = (QTPoly(1) - QTPoly::q()) * (QTPoly(1) - QTPoly::t());
    d.D = QTRat(M * B - QTPoly(1));
    return memo.emplace(mu, std::move(d)).first->second;
}

} // namespace qtc
