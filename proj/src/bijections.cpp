#include "bijections.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <stdexcept>

namespace qtc {

namespace {

// forward sweep bookkeeping: image steps with their sources
struct SweepImage {
    std::vector<char> steps;          // 'N' or 'E'
    std::vector<int> source;          // area-word position (1-based) per step
    std::vector<int> row_of_step;     // row index for N steps, 0 otherwise
    std::vector<int> col_of_step;     // column index for E steps, 0 otherwise
};

SweepImage sweep_steps(const std::vector<int>& a) {
    int n = (int)a.size();
    int maxv = 0;
    for (int v : a) maxv = std::max(maxv, v);
    SweepImage img;
    // first vertical stretch: the zeros
    for (int j = 1; j <= n; ++j)
        if (a[j - 1] == 0) {
            img.steps.push_back('N');
            img.source.push_back(j);
        }
    for (int i = 1; i <= maxv + 1; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (a[j - 1] == i - 1) {
                img.steps.push_back('E');
                img.source.push_back(j);
            } else if (a[j - 1] == i) {
                img.steps.push_back('N');
                img.source.push_back(j);
            }
        }
    }
    int row = 0, col = 0;
    for (size_t k = 0; k < img.steps.size(); ++k) {
        if (img.steps[k] == 'N') {
            img.row_of_step.push_back(++row);
            img.col_of_step.push_back(0);
        } else {
            img.row_of_step.push_back(0);
            img.col_of_step.push_back(++col);
        }
    }
    if (row != n || col != n) throw std::logic_error("zeta: malformed sweep image");
    return img;
}

std::vector<int> area_word_of_steps(const std::vector<char>& steps) {
    std::vector<int> a;
    int x = 0;
    for (char ch : steps) {
        if (ch == 'N') a.push_back((int)a.size() - x);
        else ++x;
    }
    return a;
}

// image N-step positions in the second and later sections appear once per
// source row; map: source row j -> image row of its N step (sections i>=1
// emit the N for rows with a_j = i; rows with a_j = 0 appear in the first
// stretch AND as E later, their N is in the first stretch)
std::map<int, int> sweep_row_map(const SweepImage& img, const std::vector<int>& a) {
    std::map<int, int> rowOf;
    for (size_t k = 0; k < img.steps.size(); ++k)
        if (img.steps[k] == 'N' && !rowOf.count(img.source[k]))
            rowOf[img.source[k]] = img.row_of_step[k];
    (void)a;
    return rowOf;
}

std::map<int, int> sweep_col_map(const SweepImage& img) {
    std::map<int, int> colOf; // source position -> image column of its E step
    for (size_t k = 0; k < img.steps.size(); ++k)
        if (img.steps[k] == 'E') colOf[img.source[k]] = img.col_of_step[k];
    return colOf;
}

int first_peak_at_or_after(const std::vector<int>& a, int row) {
    auto pk = peaks(a);
    for (int p : pk)
        if (p >= row) return p;
    throw std::logic_error("zeta: no peak after valley");
}

} // namespace

PathObject zeta_dyck(const PathObject& d) {
    d.validate();
    if (d.labelled()) throw std::invalid_argument("zeta_dyck: unlabelled paths only");
    const auto& a = d.area_word;
    // domain: rightmost highest peak undecorated
    {
        auto pk = peaks(a);
        int best = -1;
        for (int p : pk)
            if (best < 0 || a[p - 1] >= a[best - 1]) best = p;
        if (d.dpeak.count(best))
            throw std::invalid_argument("ForbiddenDecoration: rightmost highest peak");
    }
    SweepImage img = sweep_steps(a);
    PathObject out;
    out.n = d.n;
    out.area_word = area_word_of_steps(img.steps);

    auto rowOf = sweep_row_map(img, a);
    auto colOf = sweep_col_map(img);

    // decorated rises of D -> decorated peaks of the image
    for (int j : d.drise) {
        int r = rowOf.at(j);
        out.dpeak.insert(first_peak_at_or_after(out.area_word, r));
    }
    // decorated peaks of D -> decorated falls -> stored as rises of the image
    for (int j : d.dpeak) {
        int c = colOf.at(j);
        out.drise.insert(rise_of_fall(out.area_word, c));
    }
    out.validate();
    // image domain: first peak undecorated
    if (out.dpeak.count(peaks(out.area_word).front()))
        throw std::logic_error("zeta: image decorated its first peak");
    return out;
}

PathObject zeta_dyck_inverse(const PathObject& dprime) {
    dprime.validate();
    const auto& ap = dprime.area_word;
    int n = dprime.n;
    // letters of the preimage area word = bounce word of the image
    std::vector<int> b = bounce_word_of(ap);
    int maxv = b.empty() ? 0 : b.back();
    std::vector<int> cnt(maxv + 2, 0);
    for (int v : b) cnt[v]++;

    // section patterns: walk the image path; section i covers the steps
    // strictly between bounce peaks i and i+1 (plus the leading N stretch)
    std::vector<char> steps;
    {
        int x = 0;
        std::vector<int> xs(n + 1);
        for (int i = 1; i <= n; ++i) xs[i] = i - 1 - ap[i - 1];
        int row = 1;
        for (int i = 1; i <= n; ++i) {
            while (x < xs[i]) {
                steps.push_back('E');
                ++x;
            }
            steps.push_back('N');
            ++row;
        }
        while (x < n) {
            steps.push_back('E');
            ++x;
        }
    }
    // split: first cnt[0] N steps form the initial stretch; section i then
    // consists of cnt[i-1] E steps and cnt[i] N steps
    size_t pos = 0;
    for (int k = 0; k < cnt[0]; ++k) {
        if (steps[pos++] != 'N') throw std::invalid_argument("zeta inverse: malformed image");
    }
    // rebuild the preimage area word by merged insertion, smallest value first
    std::list<int> word; // values
    std::vector<std::list<int>::iterator> posOfValue0;
    // section 1..maxv+1
    // maintain word as list; and per-section, the source mapping:
    // we also keep, for each section, the association image-step -> word slot
    struct Emit {
        char step;
        std::list<int>::iterator it; // word position of the letter
    };
    std::vector<std::vector<Emit>> section_emits(maxv + 2);

    // seed: zeros in the order of section 1's E steps; but the word over the
    // value alphabet is built by scanning sections: place value-0 letters
    // when section 1 is scanned (their relative order *is* section 1's E order)
    for (int i = 1; i <= maxv + 1; ++i) {
        int ne = cnt[i - 1], nn = (i <= maxv) ? cnt[i] : 0;
        std::vector<char> pat;
        for (int k = 0; k < ne + nn; ++k) {
            if (pos >= steps.size()) throw std::invalid_argument("zeta inverse: short image");
            pat.push_back(steps[pos++]);
        }
        int seenE = 0, seenN = 0;
        for (char ch : pat)
            (ch == 'E' ? seenE : seenN)++;
        if (seenE != ne || seenN != nn)
            throw std::invalid_argument("zeta inverse: section mismatch");
        // merge: E = value i-1 (anchors, already in the word except i==1),
        // N = value i (inserted just before the next anchor / at the end)
        if (i == 1) {
            // all letters new: the pattern is the subword over {0,1}
            for (char ch : pat) {
                auto it = word.insert(word.end(), ch == 'E' ? 0 : 1);
                section_emits[i].push_back({ch, it});
            }
        } else {
            auto cursor = word.begin();
            auto next_anchor = [&](std::list<int>::iterator from) {
                while (from != word.end() && *from != i - 1) ++from;
                return from;
            };
            for (char ch : pat) {
                if (ch == 'E') {
                    auto anc = next_anchor(cursor);
                    if (anc == word.end())
                        throw std::invalid_argument("zeta inverse: anchor underflow");
                    section_emits[i].push_back({ch, anc});
                    cursor = std::next(anc);
                } else {
                    auto anc = next_anchor(cursor);
                    auto it = word.insert(anc, i);
                    section_emits[i].push_back({ch, it});
                    // cursor stays: inserted letters precede the anchor
                }
            }
        }
    }
    PathObject out;
    out.n = n;
    out.area_word.assign(word.begin(), word.end());
    out.validate();

    // positions: number the list
    std::map<const int*, int> slot;
    {
        int k = 1;
        for (auto it = word.begin(); it != word.end(); ++it, ++k) slot[&*it] = k;
    }

    // decorations: re-derive the forward bookkeeping positions
    // image N step in section i at image-row r <-> preimage rise; image E in
    // section i at column c <-> preimage peak (value i-1)
    // Build image row/col per emit by replaying steps
    {
        std::vector<int> rowAt(steps.size()), colAt(steps.size());
        int r = 0, c = 0;
        for (size_t k = 0; k < steps.size(); ++k) {
            if (steps[k] == 'N') rowAt[k] = ++r;
            else colAt[k] = ++c;
        }
        // map: image row -> word slot (for N emits), image col -> word slot
        std::map<int, int> rowSlot, colSlot;
        size_t k = cnt[0];
        // the initial N stretch: rows 1..cnt[0] carry the zero letters in
        // their section-1 E order? No: the zeros' N steps are the first
        // stretch, in the same left-to-right order as the zeros appear in
        // the preimage word, which section 1 fixes.
        // We map them after the loop using section 1's E emits.
        for (int i = 1; i <= maxv + 1; ++i) {
            for (const auto& e : section_emits[i]) {
                int idx = (int)(k++);
                if (e.step == 'N') rowSlot[rowAt[idx]] = slot.at(&*e.it);
                else colSlot[colAt[idx]] = slot.at(&*e.it);
            }
        }
        // initial stretch rows: the j-th N in the stretch is the j-th zero
        // of the preimage word
        {
            std::vector<int> zeroSlots;
            int s = 1;
            for (auto it = word.begin(); it != word.end(); ++it, ++s)
                if (*it == 0) zeroSlots.push_back(s);
            for (int r0 = 1; r0 <= cnt[0]; ++r0) rowSlot[r0] = zeroSlots[r0 - 1];
        }

        // image decorated peaks <- preimage rises: invert "first peak at or
        // after the valley's N row"
        for (int pk : dprime.dpeak) {
            // find the valley row v <= pk with no peak in [v, pk-1] whose
            // north step is preceded by an east step
            int v = -1;
            auto pks = peaks(ap);
            for (int row = pk; row >= 2; --row) {
                bool isPeakBefore =
                    std::find(pks.begin(), pks.end(), row) != pks.end() && row != pk;
                if (isPeakBefore) break;
                if (ap[row - 1] <= ap[row - 2]) { v = row; break; } // valley row
            }
            if (v < 0) throw std::invalid_argument("zeta inverse: no valley for peak");
            int s = rowSlot.at(v);
            out.drise.insert(s);
        }
        // image decorated rises (falls) <- preimage peaks
        for (int rr : dprime.drise) {
            int c2 = fall_of_rise(ap, rr);
            int s = colSlot.at(c2);
            out.dpeak.insert(s);
        }
    }
    out.validate();
    return out;
}

namespace {

struct StepPath {
    std::vector<char> steps;     // N/E
    std::set<int> dfall_cols;    // decorated falls by column
    std::set<int> dpeak_rows;    // decorated peaks by row
};

StepPath to_steps(const PathObject& d) {
    StepPath sp;
    int x = 0;
    for (int i = 1; i <= d.n; ++i) {
        int xs = i - 1 - d.area_word[i - 1];
        while (x < xs) {
            sp.steps.push_back('E');
            ++x;
        }
        sp.steps.push_back('N');
    }
    while (x < d.n) {
        sp.steps.push_back('E');
        ++x;
    }
    for (int r : d.drise) sp.dfall_cols.insert(fall_of_rise(d.area_word, r));
    sp.dpeak_rows = d.dpeak;
    return sp;
}

PathObject from_steps(int n, const StepPath& sp) {
    PathObject d;
    d.n = n;
    d.area_word = area_word_of_steps(sp.steps);
    for (int c : sp.dfall_cols) d.drise.insert(rise_of_fall(d.area_word, c));
    d.dpeak = sp.dpeak_rows;
    return d;
}

// apply psi0 to the decorated fall in the given column; returns the new
// decorated peak row
int psi0_forward(StepPath& sp, int n, int fall_col) {
    // locate the fall east step and its right endpoint (x0, y0)
    int x = 0, y = 0;
    int idx = -1, x0 = 0;
    for (size_t k = 0; k < sp.steps.size(); ++k) {
        if (sp.steps[k] == 'E') {
            ++x;
            if (x == fall_col) {
                idx = (int)k;
                x0 = x;
                break;
            }
        } else ++y;
    }
    if (idx < 0) throw std::logic_error("psi0: fall not found");
    sp.steps.erase(sp.steps.begin() + idx);
    // insert an east step right after north step #x0
    int count = 0;
    for (size_t k = 0; k < sp.steps.size(); ++k) {
        if (sp.steps[k] == 'N') {
            ++count;
            if (count == x0) {
                sp.steps.insert(sp.steps.begin() + k + 1, 'E');
                break;
            }
        }
    }
    // shifted fall columns: falls to the right of the removed step move
    // left by one; falls at columns <= new east's column shift right by one
    std::set<int> shifted;
    int newcol = 0;
    {
        int cc = 0, rr = 0;
        for (char ch : sp.steps) {
            if (ch == 'E') ++cc;
            else ++rr;
            if (ch == 'E' && rr == x0 && newcol == 0) newcol = cc;
        }
    }
    for (int c : sp.dfall_cols) {
        int c2 = c;
        if (c2 > fall_col) --c2;
        if (c2 >= newcol) ++c2;
        shifted.insert(c2);
    }
    sp.dfall_cols = shifted;
    return x0;
}

// inverse: remove the east following the decorated peak row, recreate the
// fall ending at column `row`; returns the new decorated fall column
int psi0_inverse(StepPath& sp, int n, int peak_row) {
    // delete the east step following north step #peak_row
    int count = 0;
    int removed_col = 0;
    for (size_t k = 0; k < sp.steps.size(); ++k) {
        if (sp.steps[k] == 'N') {
            ++count;
            if (count == peak_row) {
                if (k + 1 >= sp.steps.size() || sp.steps[k + 1] != 'E')
                    throw std::logic_error("psi0 inverse: not a peak");
                int cc = 0;
                for (size_t t = 0; t <= k + 1; ++t)
                    if (sp.steps[t] == 'E') ++cc;
                removed_col = cc;
                sp.steps.erase(sp.steps.begin() + k + 1);
                break;
            }
        }
    }
    // find the east step moving from column peak_row-1 to peak_row and
    // insert the new east right before it; if the path now has fewer than
    // peak_row columns... it cannot, since peak_row <= n
    int cc = 0;
    int insert_at = -1;
    for (size_t k = 0; k < sp.steps.size(); ++k) {
        if (sp.steps[k] == 'E') {
            ++cc;
            if (cc == peak_row) {
                insert_at = (int)k;
                break;
            }
        }
    }
    if (insert_at < 0) throw std::logic_error("psi0 inverse: no target column");
    sp.steps.insert(sp.steps.begin() + insert_at, 'E');
    int newfall = peak_row; // the inserted east ends at column peak_row
    std::set<int> shifted;
    for (int c : sp.dfall_cols) {
        int c2 = c;
        if (c2 > removed_col) --c2;
        if (c2 >= newfall) ++c2;
        shifted.insert(c2);
    }
    (void)n;
    sp.dfall_cols = shifted;
    return newfall;
}

} // namespace

PathObject psi_with_order(const PathObject& d,
                          const std::vector<std::pair<char, int>>& worklist) {
    d.validate();
    if (d.dpeak.count(d.n))
        throw std::invalid_argument("ForbiddenDecoration: last peak decorated");
    StepPath sp = to_steps(d);
    std::set<int> new_peaks, new_falls;
    for (auto& [kind, pos] : worklist) {
        if (kind == 'f') {
            if (!sp.dfall_cols.count(pos)) throw std::invalid_argument("psi: no such fall");
            sp.dfall_cols.erase(pos);
            new_peaks.insert(psi0_forward(sp, d.n, pos));
        } else {
            if (!sp.dpeak_rows.count(pos)) throw std::invalid_argument("psi: no such peak");
            sp.dpeak_rows.erase(pos);
            new_falls.insert(psi0_inverse(sp, d.n, pos));
        }
    }
    sp.dpeak_rows.insert(new_peaks.begin(), new_peaks.end());
    sp.dfall_cols.insert(new_falls.begin(), new_falls.end());
    PathObject out = from_steps(d.n, sp);
    out.validate();
    return out;
}

PathObject psi(const PathObject& d) {
    StepPath sp = to_steps(d);
    std::vector<std::pair<char, int>> work;
    for (int c : sp.dfall_cols) work.push_back({'f', c}); // left to right
    std::vector<int> pk(d.dpeak.begin(), d.dpeak.end());
    std::sort(pk.rbegin(), pk.rend()); // top to bottom
    for (int r : pk) work.push_back({'p', r});
    return psi_with_order(d, work);
}

// ---- polyominoes ----------------------------------------------------------

Polyomino reduce_polyomino(const Polyomino& p) {
    if (p.kind != PolyKind::Parallelogram)
        throw std::invalid_argument("reduce: parallelogram input required");
    // drop first and last step of both paths, reflect in x = y
    auto strip = [](const std::string& s) { return s.substr(1, s.size() - 2); };
    auto reflect = [](const std::string& s) {
        std::string r;
        for (char ch : s) r.push_back(ch == 'N' ? 'E' : 'N');
        return r;
    };
    Polyomino out;
    out.kind = PolyKind::Reduced;
    out.m = p.n - 1;
    out.n = p.m - 1;
    out.red = reflect(strip(p.green));
    out.green = reflect(strip(p.red));
    out.validate();
    return out;
}

Polyomino unreduce_polyomino(const Polyomino& r) {
    if (r.kind != PolyKind::Reduced)
        throw std::invalid_argument("unreduce: reduced input required");
    auto reflect = [](const std::string& s) {
        std::string t;
        for (char ch : s) t.push_back(ch == 'N' ? 'E' : 'N');
        return t;
    };
    Polyomino out;
    out.kind = PolyKind::Parallelogram;
    out.m = r.n + 1;
    out.n = r.m + 1;
    out.red = "N" + reflect(r.green) + "E";
    out.green = "E" + reflect(r.red) + "N";
    out.validate();
    return out;
}

namespace {

// word entry with provenance: column c (barred for parallelogram, unbarred
// for reduced) or row r
struct ZetaEntry {
    BarredLetter letter;
    bool from_col;
    int index; // column or row
};

struct ZetaWord {
    std::list<ZetaEntry> entries;
    std::vector<BarredLetter> letters() const {
        std::vector<BarredLetter> out;
        for (auto& e : entries) out.push_back(e.letter);
        return out;
    }
};

// letters projected on path steps from the bounce walk
struct ProjectedLetters {
    std::vector<BarredLetter> colL, rowL; // 1-based columns/rows
};

ProjectedLetters projected(const Polyomino& p) {
    BounceWalkLetters dummy;
    (void)dummy;
    ProjectedLetters pl;
    pl.colL.assign(p.m + 1, BarredLetter{});
    pl.rowL.assign(p.n + 1, BarredLetter{});
    auto word = polyomino_bounce_word(p);
    // replay: columns get the letters of horizontal bounce steps in order;
    // rows those of vertical steps in order
    int c = 0, r = 0;
    for (const auto& l : word) {
        bool horizontal;
        if (p.kind == PolyKind::Parallelogram) horizontal = l.barred;
        else horizontal = !l.barred;
        if (horizontal) pl.colL[++c] = l;
        else pl.rowL[++r] = l;
    }
    if (c != p.m || r != p.n) throw std::logic_error("zeta_poly: projection mismatch");
    return pl;
}

// the letter sequence along a path (by steps), with provenance
std::vector<ZetaEntry> path_letters(const std::string& steps, const ProjectedLetters& pl) {
    std::vector<ZetaEntry> out;
    int c = 0, r = 0;
    for (char ch : steps) {
        if (ch == 'E') out.push_back({pl.colL[++c], true, c});
        else out.push_back({pl.rowL[++r], false, r});
    }
    return out;
}

} // namespace

// Needed only so the dummy above compiles away; the projection uses the
// public bounce word whose horizontal/vertical split is recoverable from
// bar parity.
struct BounceWalkLetters {};

Polyomino zeta_poly(const Polyomino& p) {
    p.validate();
    if (p.kind != PolyKind::Parallelogram)
        throw std::invalid_argument("zeta_poly: parallelogram input required");
    if (!p.drise.empty())
        throw std::invalid_argument("ForbiddenDecoration: zeta_poly expects peak decorations");
    ProjectedLetters pl = projected(p);
    auto redL = path_letters(p.red, pl);
    auto greenL = path_letters(p.green, pl);
    std::reverse(redL.begin(), redL.end());
    std::reverse(greenL.begin(), greenL.end());

    ZetaWord w;
    // seed with 0bar; then red stretch k inserts unbarred k against barred
    // (k-1) anchors, green stretch k inserts barred k against unbarred k
    w.entries.push_back({BarredLetter::from_rank(1), true, 1}); // column 1
    int maxRank = 0;
    for (auto& e : redL) maxRank = std::max(maxRank, e.letter.rank());
    for (auto& e : greenL) maxRank = std::max(maxRank, e.letter.rank());

    auto merge = [&](const std::vector<ZetaEntry>& seq, int anchorRank, int newRank) {
        auto cursor = w.entries.begin();
        for (const auto& e : seq) {
            int rk = e.letter.rank();
            if (rk == anchorRank) {
                while (cursor != w.entries.end() && cursor->letter.rank() != anchorRank)
                    ++cursor;
                if (cursor == w.entries.end())
                    throw std::logic_error("zeta_poly: anchor underflow");
                ++cursor;
            } else if (rk == newRank) {
                auto probe = cursor;
                while (probe != w.entries.end() && probe->letter.rank() != anchorRank)
                    ++probe;
                w.entries.insert(probe, e);
                cursor = probe;
            }
        }
    };

    for (int rank = 2; rank <= maxRank; ++rank) {
        if (rank % 2 == 0) merge(redL, rank - 1, rank);   // unbarred k from red
        else merge(greenL, rank - 1, rank);               // barred k from green
    }

    auto letters = w.letters();
    Polyomino out = polyomino_from_area_word(PolyKind::Parallelogram, letters);
    // decorations: input red peak at column c -> image rise at the word
    // position of column c's letter
    int pos = 0;
    std::map<int, int> col_pos;
    for (auto& e : w.entries) {
        ++pos;
        if (e.from_col) col_pos[e.index] = pos;
    }
    for (int idx : p.dpeak) {
        int col = 0;
        for (int i = 0; i < idx; ++i)
            if (p.red[i] == 'E') ++col;
        out.drise.insert(col_pos.at(col));
    }
    out.validate();
    return out;
}

namespace {

// insertion-merge used by the inverse reading: rebuild a path from its
// {anchor,new} patterns
std::string path_from_patterns(const std::vector<std::vector<char>>& segs, bool rev) {
    std::string out;
    for (const auto& seg : segs) {
        std::string s(seg.begin(), seg.end());
        if (rev) std::reverse(s.begin(), s.end());
        out += s;
    }
    return out;
}

} // namespace

Polyomino zeta_poly_inverse(const Polyomino& img) {
    img.validate();
    if (img.kind != PolyKind::Parallelogram)
        throw std::invalid_argument("zeta_poly_inverse: parallelogram input required");
    if (!img.dpeak.empty())
        throw std::invalid_argument("ForbiddenDecoration: inverse expects rise decorations");
    auto w = area_word(img);
    int maxRank = 0;
    for (auto& l : w) maxRank = std::max(maxRank, l.rank());
    // red pattern for even rank k: subword over ranks {k-1, k}: E for k-1
    // (barred), N for k (unbarred); red path = concat of forward segments,
    // where each pattern read from the image is the *reversed* path segment
    std::vector<std::vector<char>> redSegs, greenSegs;
    for (int rank = 2; rank <= maxRank + 1; ++rank) {
        std::vector<char> pat;
        for (auto& l : w) {
            if (l.rank() == rank - 1) pat.push_back('E');
            else if (l.rank() == rank) pat.push_back('N');
        }
        if (rank % 2 == 0) redSegs.push_back(pat);
        else greenSegs.push_back(pat);
    }
    // red: reversed concatenation of reversed patterns = reverse the whole
    std::string red, green;
    for (auto& seg : redSegs) {
        std::string s(seg.begin(), seg.end());
        std::reverse(s.begin(), s.end());
        red += s;
    }
    green.push_back('E'); // the initial green east (column 1, letter 0bar)
    for (auto& seg : greenSegs) {
        std::string s(seg.begin(), seg.end());
        std::reverse(s.begin(), s.end());
        // in the green pattern E marked anchors (unbarred k -> green N) —
        // green reading maps rows (unbarred) to N and columns (barred) to E
        for (char& ch : s) ch = (ch == 'E') ? 'N' : 'E';
        green += s;
    }
    Polyomino out;
    out.kind = PolyKind::Parallelogram;
    out.m = (int)std::count(red.begin(), red.end(), 'E');
    out.n = (int)std::count(red.begin(), red.end(), 'N');
    out.red = red;
    out.green = green;
    out.validate();
    // decorations: image rise position -> source column of the preimage ->
    // red peak index
    Polyomino roundtrip = zeta_poly(out);
    // map: image word position -> provenance via recomputation
    {
        ProjectedLetters pl = projected(out);
        auto redL = path_letters(out.red, pl);
        auto greenL = path_letters(out.green, pl);
        std::reverse(redL.begin(), redL.end());
        std::reverse(greenL.begin(), greenL.end());
        ZetaWord zw;
        zw.entries.push_back({BarredLetter::from_rank(1), true, 1});
        int mr = 0;
        for (auto& e : redL) mr = std::max(mr, e.letter.rank());
        for (auto& e : greenL) mr = std::max(mr, e.letter.rank());
        auto merge = [&](const std::vector<ZetaEntry>& seq, int anchorRank, int newRank) {
            auto cursor = zw.entries.begin();
            for (const auto& e : seq) {
                int rk = e.letter.rank();
                if (rk == anchorRank) {
                    while (cursor != zw.entries.end() &&
                           cursor->letter.rank() != anchorRank)
                        ++cursor;
                    if (cursor == zw.entries.end())
                        throw std::logic_error("zeta_poly: anchor underflow");
                    ++cursor;
                } else if (rk == newRank) {
                    auto probe = cursor;
                    while (probe != zw.entries.end() &&
                           probe->letter.rank() != anchorRank)
                        ++probe;
                    zw.entries.insert(probe, e);
                    cursor = probe;
                }
            }
        };
        for (int rank = 2; rank <= mr; ++rank) {
            if (rank % 2 == 0) merge(redL, rank - 1, rank);
            else merge(greenL, rank - 1, rank);
        }
        int pos = 0;
        std::map<int, int> pos_col;
        for (auto& e : zw.entries) {
            ++pos;
            if (e.from_col) pos_col[pos] = e.index;
        }
        for (int p2 : img.drise) {
            auto it = pos_col.find(p2);
            if (it == pos_col.end())
                throw std::invalid_argument("zeta_poly_inverse: decorated letter is not a column letter");
            int col = it->second;
            // red peak step index: the E step of red in that column
            int cc = 0;
            int stepIdx = -1;
            for (int i = 0; i < (int)out.red.size(); ++i) {
                if (out.red[i] == 'E') {
                    ++cc;
                    if (cc == col) {
                        stepIdx = i + 1;
                        break;
                    }
                }
            }
            if (stepIdx <= 1 || out.red[stepIdx - 2] != 'N')
                throw std::invalid_argument("zeta_poly_inverse: column is not a red peak");
            out.dpeak.insert(stepIdx);
        }
    }
    out.validate();
    return out;
}

Polyomino zeta_reduced(const Polyomino& p) {
    p.validate();
    if (p.kind != PolyKind::Reduced)
        throw std::invalid_argument("zeta_reduced: reduced input required");
    if (!p.drise.empty())
        throw std::invalid_argument("ForbiddenDecoration: zeta_reduced expects peak decorations");
    ProjectedLetters pl = projected(p);
    auto redL = path_letters(p.red, pl);
    auto greenL = path_letters(p.green, pl);

    ZetaWord w;
    w.entries.push_back({BarredLetter{0, false}, false, 0}); // artificial 0
    int maxRank = 0;
    for (auto& e : redL) maxRank = std::max(maxRank, e.letter.rank());
    for (auto& e : greenL) maxRank = std::max(maxRank, e.letter.rank());

    auto merge = [&](const std::vector<ZetaEntry>& seq, int anchorRank, int newRank,
                     bool anchors_exist) {
        auto cursor = w.entries.begin();
        if (anchors_exist) {
            for (const auto& e : seq) {
                int rk = e.letter.rank();
                if (rk == anchorRank) {
                    while (cursor != w.entries.end() &&
                           cursor->letter.rank() != anchorRank)
                        ++cursor;
                    if (cursor == w.entries.end())
                        throw std::logic_error("zeta_reduced: anchor underflow");
                    ++cursor;
                } else if (rk == newRank) {
                    auto probe = cursor;
                    while (probe != w.entries.end() &&
                           probe->letter.rank() != anchorRank)
                        ++probe;
                    w.entries.insert(probe, e);
                    cursor = probe;
                }
            }
        } else {
            // first step: all pattern letters append after the artificial 0
            for (const auto& e : seq) {
                int rk = e.letter.rank();
                if (rk == anchorRank || rk == newRank)
                    w.entries.push_back(e);
            }
        }
    };

    // step for rank 1 (0bar from red against the 0 anchors): the pattern of
    // {0, 0bar} on the red path, appended (only the artificial 0 placed)
    merge(redL, 0, 1, false);
    for (int rank = 2; rank <= maxRank; ++rank) {
        if (rank % 2 == 0) merge(greenL, rank - 1, rank, true); // unbarred from green
        else merge(redL, rank - 1, rank, true);                 // barred from red
    }

    Polyomino out = polyomino_from_area_word(PolyKind::Reduced, w.letters());
    int pos = 0;
    std::map<int, int> col_pos;
    for (auto& e : w.entries) {
        ++pos;
        if (e.from_col) col_pos[e.index] = pos;
    }
    for (int idx : p.dpeak) {
        int col = 0;
        for (int i = 0; i < idx; ++i)
            if (p.green[i] == 'E') ++col;
        out.drise.insert(col_pos.at(col));
    }
    out.validate();
    return out;
}

Polyomino zeta_reduced_inverse(const Polyomino& img) {
    img.validate();
    if (img.kind != PolyKind::Reduced)
        throw std::invalid_argument("zeta_reduced_inverse: reduced input required");
    if (!img.dpeak.empty())
        throw std::invalid_argument("ForbiddenDecoration: inverse expects rise decorations");
    auto w = area_word(img);
    int maxRank = 0;
    for (auto& l : w) maxRank = std::max(maxRank, l.rank());
    // red patterns: ranks {2v, 2v+1} (0/0bar, 1/1bar, ...): E for unbarred,
    // N for barred; green patterns: ranks {2v+1, 2v+2}: N for barred, E for
    // unbarred. All segments are read forward; the artificial leading 0 is
    // dropped from the red pattern.
    std::string red, green;
    bool dropped_artificial = false;
    for (int rank = 0; rank <= maxRank; rank += 2) {
        std::vector<char> pat;
        bool first = true;
        for (auto& l : w) {
            if (l.rank() == rank) {
                if (rank == 0 && first && !dropped_artificial) {
                    dropped_artificial = true;
                    first = false;
                    continue;
                }
                pat.push_back('E');
            } else if (l.rank() == rank + 1) pat.push_back('N');
            first = false;
        }
        red += std::string(pat.begin(), pat.end());
    }
    for (int rank = 1; rank <= maxRank; rank += 2) {
        std::vector<char> pat;
        for (auto& l : w) {
            if (l.rank() == rank) pat.push_back('N');
            else if (l.rank() == rank + 1) pat.push_back('E');
        }
        green += std::string(pat.begin(), pat.end());
    }
    Polyomino out;
    out.kind = PolyKind::Reduced;
    out.m = (int)std::count(red.begin(), red.end(), 'E');
    out.n = (int)std::count(red.begin(), red.end(), 'N');
    out.red = red;
    out.green = green;
    out.validate();
    // decorations: recompute provenance by forward application
    {
        ProjectedLetters pl = projected(out);
        auto redL = path_letters(out.red, pl);
        auto greenL = path_letters(out.green, pl);
        ZetaWord zw;
        zw.entries.push_back({BarredLetter{0, false}, false, 0});
        auto merge = [&](const std::vector<ZetaEntry>& seq, int anchorRank, int newRank,
                         bool anchors_exist) {
            auto cursor = zw.entries.begin();
            if (anchors_exist) {
                for (const auto& e : seq) {
                    int rk = e.letter.rank();
                    if (rk == anchorRank) {
                        while (cursor != zw.entries.end() &&
                               cursor->letter.rank() != anchorRank)
                            ++cursor;
                        if (cursor == zw.entries.end())
                            throw std::logic_error("zeta_reduced: anchor underflow");
                        ++cursor;
                    } else if (rk == newRank) {
                        auto probe = cursor;
                        while (probe != zw.entries.end() &&
                               probe->letter.rank() != anchorRank)
                            ++probe;
                        zw.entries.insert(probe, e);
                        cursor = probe;
                    }
                }
            } else {
                for (const auto& e : seq)
                    if (e.letter.rank() == anchorRank || e.letter.rank() == newRank)
                        zw.entries.push_back(e);
            }
        };
        int mr = 0;
        for (auto& e : redL) mr = std::max(mr, e.letter.rank());
        for (auto& e : greenL) mr = std::max(mr, e.letter.rank());
        merge(redL, 0, 1, false);
        for (int rank = 2; rank <= mr; ++rank) {
            if (rank % 2 == 0) merge(greenL, rank - 1, rank, true);
            else merge(redL, rank - 1, rank, true);
        }
        int pos = 0;
        std::map<int, int> pos_col;
        for (auto& e : zw.entries) {
            ++pos;
            if (e.from_col) pos_col[pos] = e.index;
        }
        for (int p2 : img.drise) {
            auto it = pos_col.find(p2);
            if (it == pos_col.end())
                throw std::invalid_argument("zeta_reduced_inverse: decorated letter is not a column letter");
            int col = it->second;
            int cc = 0, stepIdx = -1;
            for (int i = 0; i < (int)out.green.size(); ++i) {
                if (out.green[i] == 'E') {
                    ++cc;
                    if (cc == col) {
                        stepIdx = i + 1;
                        break;
                    }
                }
            }
            if (stepIdx <= 1 || out.green[stepIdx - 2] != 'N')
                throw std::invalid_argument("zeta_reduced_inverse: column is not a green peak");
            out.dpeak.insert(stepIdx);
        }
    }
    out.validate();
    return out;
}

PathObject phi_map(const Polyomino& p) {
    p.validate();
    if (p.kind != PolyKind::Reduced)
        throw std::invalid_argument("phi: reduced input required");
    if (!p.dpeak.empty())
        throw std::invalid_argument("phi: rise decorations only");
    auto w = area_word(p);
    PathObject d;
    d.n = p.m + p.n;
    for (size_t i = 1; i < w.size(); ++i) {
        d.area_word.push_back(w[i].value);
        d.labels.push_back(w[i].barred ? 1 : 2);
    }
    for (int i : p.drise) {
        if (i < 2) throw std::logic_error("phi: rise at the artificial letter");
        d.drise.insert(i - 1);
    }
    d.validate();
    return d;
}

Polyomino phi_inverse(const PathObject& d) {
    d.validate();
    if (!d.labelled()) throw std::invalid_argument("MissingLabels");
    std::vector<BarredLetter> w;
    w.push_back({0, false});
    for (int i = 0; i < d.n; ++i) {
        if (d.labels[i] != 1 && d.labels[i] != 2)
            throw std::invalid_argument("phi inverse: two-car labels required");
        w.push_back({d.area_word[i], d.labels[i] == 1});
    }
    Polyomino out = polyomino_from_area_word(PolyKind::Reduced, w);
    for (int i : d.drise) out.drise.insert(i + 1);
    out.validate();
    return out;
}

Polyomino eta_map(const PathObject& d) {
    d.validate();
    if (!d.labelled()) throw std::invalid_argument("MissingLabels");
    int zeros = (int)std::count(d.labels.begin(), d.labels.end(), 0);
    int nonzeros = d.n - zeros;
    // all rises must be decorated; count matches nonzeros - 1
    auto rs = rises(d.area_word);
    if ((int)d.drise.size() != (int)rs.size() ||
        (int)d.drise.size() != nonzeros - 1)
        throw std::invalid_argument("WrongDecorationProfile: all rises must be decorated");
    int m = zeros + 1, n = nonzeros;
    std::string red;
    std::vector<int> labs;
    std::vector<int> green_value; // value per red horizontal (green letter)
    for (int i = 0; i < d.n; ++i) {
        if (d.labels[i] == 0) {
            red.push_back('E');
            green_value.push_back(d.area_word[i]);
        } else {
            red.push_back('N');
            labs.push_back(d.labels[i]);
        }
    }
    red.push_back('E');
    // green path: first an east step; for the i-th red horizontal (among the
    // first m-1) at height y, a green horizontal in the next column at
    // height y - value - 1; connect with norths
    std::vector<int> gh(m + 1, -1);
    gh[1] = 0;
    {
        int x = 0, y = 0, k = 0;
        for (char ch : red) {
            if (ch == 'E') {
                ++x;
                if (x <= m - 1) {
                    gh[x + 1] = y - green_value[k] - 1;
                    ++k;
                }
            } else ++y;
        }
    }
    std::string green;
    {
        int y = 0;
        for (int c = 1; c <= m; ++c) {
            if (gh[c] < y) throw std::invalid_argument("MalformedPolyomino: eta image");
            while (y < gh[c]) {
                green.push_back('N');
                ++y;
            }
            green.push_back('E');
        }
        while (y < n) {
            green.push_back('N');
            ++y;
        }
    }
    Polyomino out;
    out.kind = PolyKind::Parallelogram;
    out.m = m;
    out.n = n;
    out.red = red;
    out.green = green;
    out.labels = labs;
    out.validate();
    return out;
}

PathObject eta_inverse(const Polyomino& p) {
    p.validate();
    if (p.kind != PolyKind::Parallelogram || !p.labelled())
        throw std::invalid_argument("eta inverse: labelled parallelogram required");
    PathObject d;
    d.n = p.m - 1 + p.n;
    std::vector<int> gh(p.m + 1, -1);
    {
        int x = 0, y = 0;
        for (char ch : p.green) {
            if (ch == 'E') gh[++x] = y;
            else ++y;
        }
    }
    int labIdx = 0, prev = -1;
    int x = 0, y = 0;
    for (int i = 0; i + 1 < p.m + p.n; ++i) {
        char ch = p.red[i];
        if (ch == 'N') {
            int v = prev + 1;
            d.area_word.push_back(v);
            d.labels.push_back(p.labels[labIdx++]);
            prev = v;
            ++y;
        } else {
            ++x;
            int v = y - gh[x + 1] - 1;
            d.area_word.push_back(v);
            d.labels.push_back(0);
            prev = v;
        }
    }
    for (int r : rises(d.area_word)) d.drise.insert(r);
    d.validate();
    return d;
}

PathObject gamma_E(const SquarePath& p) {
    p.validate();
    if (!p.ends_east) throw std::invalid_argument("gamma_E: path must end east");
    int c = p.c(), j = p.j(), n = p.n;
    PathObject d;
    d.n = n;
    if (c == 0) {
        d.area_word = p.w;
        d.labels = p.labels;
        d.validate();
        return d;
    }
    for (int i = j; i < n; ++i) d.area_word.push_back(p.w[i] + c);
    for (int i = 0; i < j; ++i) d.area_word.push_back(p.w[i] + c - 1);
    if (p.labelled()) {
        for (int i = j; i < n; ++i) d.labels.push_back(p.labels[i]);
        for (int i = 0; i < j; ++i) d.labels.push_back(p.labels[i]);
    }
    int fall = n - c - j;
    d.drise.insert(rise_of_fall(d.area_word, fall));
    d.validate();
    return d;
}

SquarePath gamma_E_inverse(const PathObject& d) {
    d.validate();
    SquarePath p;
    p.n = d.n;
    p.ends_east = true;
    if (d.drise.empty()) {
        p.w = d.area_word;
        p.labels = d.labels;
        p.validate();
        return p;
    }
    if (d.drise.size() != 1) throw std::invalid_argument("gamma_E inverse: one decoration");
    int f = fall_of_rise(d.area_word, *d.drise.begin());
    int s = 0;
    for (int r = 1; r <= d.n; ++r)
        if (r - 1 - d.area_word[r - 1] <= f - 1) s = r;
    int j = d.n - s;
    int c = d.n - f - j;
    if (c <= 0) throw std::invalid_argument("gamma_E inverse: malformed image");
    p.w.resize(d.n);
    for (int i = 1; i <= s; ++i) p.w[j + i - 1] = d.area_word[i - 1] - c;
    for (int i = 1; i <= j; ++i) p.w[i - 1] = d.area_word[s + i - 1] - c + 1;
    if (d.labelled()) {
        p.labels.resize(d.n);
        for (int i = 1; i <= s; ++i) p.labels[j + i - 1] = d.labels[i - 1];
        for (int i = 1; i <= j; ++i) p.labels[i - 1] = d.labels[s + i - 1];
    }
    p.validate();
    return p;
}

PathObject gamma_N(const SquarePath& p) {
    p.validate();
    if (p.ends_east) throw std::invalid_argument("gamma_N: path must end north");
    int c = p.c(), j = p.j(), n = p.n;
    PathObject d;
    d.n = n;
    for (int i = j; i < n; ++i) d.area_word.push_back(p.w[i] + c);
    for (int i = 0; i < j; ++i) d.area_word.push_back(p.w[i] + c - 1);
    if (p.labelled()) {
        for (int i = j; i < n; ++i) d.labels.push_back(p.labels[i]);
        for (int i = 0; i < j; ++i) d.labels.push_back(p.labels[i]);
    }
    d.dpeak.insert(n - j);
    d.validate();
    return d;
}

SquarePath gamma_N_inverse(const PathObject& d) {
    d.validate();
    if (d.dpeak.size() != 1) throw std::invalid_argument("gamma_N inverse: one decorated peak");
    int r = *d.dpeak.begin();
    int j = d.n - r;
    int c = d.area_word[r - 1] + 1;
    SquarePath p;
    p.n = d.n;
    p.ends_east = false;
    p.w.resize(d.n);
    for (int i = 1; i <= r; ++i) p.w[j + i - 1] = d.area_word[i - 1] - c;
    for (int i = 1; i <= j; ++i) p.w[i - 1] = d.area_word[r + i - 1] - c + 1;
    if (d.labelled()) {
        p.labels.resize(d.n);
        for (int i = 1; i <= r; ++i) p.labels[j + i - 1] = d.labels[i - 1];
        for (int i = 1; i <= j; ++i) p.labels[i - 1] = d.labels[r + i - 1];
    }
    p.validate();
    return p;
}

PathObject alpha_map(const PathObject& d, int a, int b) {
    d.validate();
    if (!d.labelled()) throw std::invalid_argument("MissingLabels");
    if (a + b != d.n) throw std::invalid_argument("alpha: a + b must equal n");
    auto rw = reading_words(d).reverse_dinv_word;
    ShuffleBlock dec, inc;
    for (int v = a; v >= 1; --v) dec.values.push_back(v);
    dec.increasing = false;
    dec.values = std::vector<int>(dec.values.rbegin(), dec.values.rend());
    for (int v = a + 1; v <= a + b; ++v) inc.values.push_back(v);
    inc.increasing = true;
    if (!is_shuffle(rw, {dec, inc})) throw std::invalid_argument("NotAShuffle");
    PathObject out;
    out.n = d.n;
    out.area_word = d.area_word;
    out.drise = d.drise;
    for (int i = 1; i <= d.n; ++i)
        if (d.labels[i - 1] > a) out.dpeak.insert(i);
    out.validate();
    return out;
}

PathObject alpha_inverse(const PathObject& d, int a, int b) {
    d.validate();
    if ((int)d.dpeak.size() != b) throw std::invalid_argument("alpha inverse: wrong peak count");
    // assign labels: scanning the reverse dinv order, the non-decorated rows
    // receive a, a-1, ..., 1 and the decorated rows a+1, ..., a+b
    std::vector<int> order; // rows in reverse dinv reading order
    int maxd = 0;
    for (int v : d.area_word) maxd = std::max(maxd, v);
    for (int diag = 0; diag <= maxd; ++diag)
        for (int i = 1; i <= d.n; ++i)
            if (d.area_word[i - 1] == diag) order.push_back(i);
    std::reverse(order.begin(), order.end());
    PathObject out;
    out.n = d.n;
    out.area_word = d.area_word;
    out.drise = d.drise;
    out.labels.assign(d.n, 0);
    int small = a, big = a + 1;
    for (int r : order) {
        if (d.dpeak.count(r)) out.labels[r - 1] = big++;
        else out.labels[r - 1] = small--;
    }
    out.validate();
    return out;
}

} // namespace qtc
