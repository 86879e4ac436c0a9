#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace qtc {

/// Letter of the barred alphabet 0 < 0bar < 1 < 1bar < 2 < ...;
/// rank = 2*value + (barred ? 1 : 0), so successor tests are rank + 1.
struct BarredLetter {
    int value = 0;
    bool barred = false;
    int rank() const { return 2 * value + (barred ? 1 : 0); }
    static BarredLetter from_rank(int r) { return {r / 2, (r % 2) != 0}; }
    bool operator==(const BarredLetter& o) const {
        return value == o.value && barred == o.barred;
    }
    std::string str() const {
        return std::to_string(value) + (barred ? "-" : "");
    }
};

enum class PolyKind { Parallelogram, Reduced };

/// Pair of N/E lattice paths from (0,0) to (m,n); red weakly/strictly above
/// green. Peaks carry decorations on the red path (parallelogram) or the
/// green path (reduced); rise decorations index the area word.
struct Polyomino {
    PolyKind kind = PolyKind::Parallelogram;
    int m = 0, n = 0;
    std::string red, green;   // strings over {'N','E'}
    std::vector<int> labels;  // optional; one label per red north step
    std::set<int> drise;      // 1-based indices into the area word
    std::set<int> dpeak;      // 1-based indices into the red (resp. green) steps

    bool labelled() const { return !labels.empty(); }
    void validate() const;

    bool operator<(const Polyomino& o) const {
        return std::tie(kind, m, n, red, green, labels, drise, dpeak) <
               std::tie(o.kind, o.m, o.n, o.red, o.green, o.labels, o.drise, o.dpeak);
    }
    bool operator==(const Polyomino& o) const {
        return kind == o.kind && m == o.m && n == o.n && red == o.red &&
               green == o.green && labels == o.labels && drise == o.drise &&
               dpeak == o.dpeak;
    }
};

/// Area word by the diagonal-length algorithm (the paper's first one).
std::vector<BarredLetter> area_word_diagonals(const Polyomino& p);
/// Area word through the interleaved Dyck path (the second algorithm).
std::vector<BarredLetter> area_word_interleave(const Polyomino& p);
/// Both must agree; returns the common word.
std::vector<BarredLetter> area_word(const Polyomino& p);

/// Rebuild the paths from an area word.
Polyomino polyomino_from_area_word(PolyKind kind, const std::vector<BarredLetter>& w);

/// Rise indices of the area word (parallelogram: i with |a_i| < |a_{i+1}|;
/// reduced: i with |a_i| > |a_{i-1}|).
std::vector<int> polyomino_rises(const Polyomino& p);
/// Decoratable peak step indices (red peaks resp. green peaks), excluding
/// the leftmost red peak in the parallelogram case.
std::vector<int> polyomino_peaks(const Polyomino& p);

struct PolyominoStats {
    long area = 0;
    long bounce = 0;
    long dinv = 0;
    long pmaj = 0;
    bool has_pmaj = false;
    std::vector<BarredLetter> bounce_word;
    std::vector<int> parking_word;
};

PolyominoStats polyomino_statistics(const Polyomino& p);

long polyomino_area(const Polyomino& p);
long polyomino_dinv(const Polyomino& p);
long polyomino_bounce(const Polyomino& p);
std::vector<BarredLetter> polyomino_bounce_word(const Polyomino& p);
std::vector<int> polyomino_parking_word(const Polyomino& p);
long polyomino_pmaj(const Polyomino& p);

/// newdinv on labelled parallelogram polyominoes (and the unlabelled
/// variant), through the colored word of the corresponding partially
/// labelled Dyck path.
long newdinv(const Polyomino& p, bool use_labels);
std::vector<std::pair<int, int>> newdinv_inversions(const Polyomino& p, bool use_labels);

/// Exhaustive generation by area words; labels/decorations are left empty.
void generate_polyominoes(PolyKind kind, int m, int n,
                          const std::function<void(const Polyomino&)>& fn);

} // namespace qtc
