#pragma once

#include "qtpoly.hpp"

#include <functional>
#include <set>
#include <vector>

namespace qtc {

/// Unified lattice-path record: Dyck paths with optional labels and
/// decorations on rises, peaks, or contractible valleys. The area word is
/// the canonical representation; the N/E step sequence is derived.
struct PathObject {
    int n = 0;
    std::vector<int> area_word;      // a_1..a_n, a_1 = 0, a_{i+1} <= a_i + 1
    std::vector<int> labels;         // empty, or l_1..l_n (0 = blank label)
    std::set<int> drise, dpeak, dval; // 1-based step indices

    bool labelled() const { return !labels.empty(); }
    void validate() const; // throws std::invalid_argument on malformed input

    /// x-coordinate of the i-th north step (1-based).
    int xcoord(int i) const { return i - 1 - area_word[i - 1]; }

    bool operator<(const PathObject& o) const;
    bool operator==(const PathObject& o) const;
};

/// Index sets per the paper's conventions (1-based step indices).
std::vector<int> rises(const std::vector<int>& area_word);
std::vector<int> peaks(const std::vector<int>& area_word);
/// Contractible valleys; requires labels when present to refine equality
/// steps.
std::vector<int> valleys(const PathObject& d);

/// The rise -> fall bijection: for each rise index, the east step (indexed
/// by its column, 1-based) of the first fall crossing the same diagonal.
/// Throws if matching fails (it cannot, for valid Dyck paths).
std::vector<std::pair<int, int>> rise_fall_correspondence(const std::vector<int>& area_word);
/// Column (1-based) of the fall matched to the given rise index.
int fall_of_rise(const std::vector<int>& area_word, int rise);
/// Inverse: rise index matched to the fall in the given column.
int rise_of_fall(const std::vector<int>& area_word, int fall_col);

struct PathStats {
    long area = 0;
    long dinv = 0;
    long bounce = 0;
    long pbounce = 0;
    long pmaj = 0;
    bool has_pbounce = false;
    bool has_pmaj = false;
    std::vector<int> bounce_word;
    std::vector<int> pbounce_word;
    std::vector<int> parking_word;
};

std::vector<int> bounce_word_of(const std::vector<int>& area_word);
std::vector<int> pbounce_word_of(const std::vector<int>& area_word, const std::set<int>& dpeak);
std::vector<int> parking_word_of(const PathObject& d);

long area_stat(const PathObject& d);
long dinv_stat(const PathObject& d);
long bounce_stat(const PathObject& d);
long pbounce_stat(const PathObject& d);
long pmaj_stat(const PathObject& d);
PathStats statistics(const PathObject& d);

struct ReadingWords {
    std::vector<int> dinv_word;
    std::vector<int> pmaj_word;
    std::vector<int> reverse_dinv_word;
};
ReadingWords reading_words(const PathObject& d);

/// Relabel so the reverse dinv reading word is a mu-shuffle; preserves
/// (dinv, area).
PathObject standardize(const PathObject& d);

/// One block of a shuffle condition.
struct ShuffleBlock {
    std::vector<int> values;
    bool increasing = true;
};
bool is_shuffle(const std::vector<int>& word, const std::vector<ShuffleBlock>& blocks);
/// mu-shuffle: blocks (1..mu_1), (mu_1+1..mu_1+mu_2), ... all increasing.
bool is_mu_shuffle(const std::vector<int>& word, const std::vector<int>& mu);

// ---- generators ----------------------------------------------------------

/// All Dyck area words of size n, lexicographically.
std::vector<std::vector<int>> dyck_area_words(int n);

/// Plain decorated Dyck paths DD(n)^{circ a, * b}; the callback receives
/// every path with every admissible decoration pair (a = |dpeak|,
/// b = |drise| range over all values).
void generate_decorated(int n, const std::function<void(const PathObject&)>& fn);

enum class LabelRegime {
    None,
    Positive,   // labels 1..bound, strictly increasing in columns
    Partial,    // labels 0..bound, 0 never in the first column
    TwoCar      // labels in {1,2}
};

/// Labelled (decorated-rise) paths; rises carry all admissible subsets of
/// decorations with size <= max_rise_decorations (-1 = no bound).
void generate_labelled(int n, LabelRegime regime, int label_bound,
                       int max_rise_decorations,
                       const std::function<void(const PathObject&)>& fn);

} // namespace qtc
