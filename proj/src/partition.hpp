#pragma once

#include "qtrat.hpp"

#include <vector>

namespace qtc {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return (int)parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < (int)parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    /// True iff this - other is a horizontal strip (other ⊆ this,
    /// at most one cell removed per column).
    bool contains(const Partition& other) const;

    /// Multiplicity of part value v.
    int multiplicity(int v) const;
    /// z_mu = prod i^{m_i} m_i!.
    Rational z() const;
    /// n(mu) = sum_i (i-1) mu_i.
    long n_stat() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// Canonical order: reverse-lexicographic within a degree, so that
    /// (n) comes first and (1^n) last.
    bool operator<(const Partition& o) const;

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in canonical (reverse-lexicographic) order.
const std::vector<Partition>& partitions_of(int n);

/// Union of parts (multiset), sorted decreasing.
Partition partition_union(const Partition& a, const Partition& b);
/// Dominance order: a dominated-by-or-equal b.
bool dominated_by(const Partition& a, const Partition& b);

/// Arm, leg, co-arm, co-leg of a cell; cells are (col, row), 1-based.
struct CellStats {
    int arm, leg, coarm, coleg;
};
CellStats cell_stats(const Partition& mu, int col, int row);

/// The partition constants of the Macdonald toolkit.
struct PartitionData {
    QTRat B, T, Pi, w, D;
};
const PartitionData& partition_constants(const Partition& mu);

} // namespace qtc
