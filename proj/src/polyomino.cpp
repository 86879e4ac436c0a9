#include "polyomino.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qtc {

namespace {

struct PathProfile {
    // horiz[c] = height of the horizontal step in column c (1-based);
    // vertY: for each north step, its row (1..n); points of the walk.
    std::vector<int> horiz;
    std::vector<std::pair<int, int>> points; // successive lattice points
};

PathProfile profile(const std::string& steps, int m, int n) {
    PathProfile pr;
    pr.horiz.assign(m + 1, -1);
    int x = 0, y = 0;
    pr.points.push_back({0, 0});
    for (char ch : steps) {
        if (ch == 'E') {
            pr.horiz[x + 1] = y;
            ++x;
        } else {
            ++y;
        }
        pr.points.push_back({x, y});
    }
    if (x != m || y != n) throw std::invalid_argument("MalformedPolyomino: endpoint");
    return pr;
}

} // namespace

void Polyomino::validate() const {
    if ((int)red.size() != m + n || (int)green.size() != m + n)
        throw std::invalid_argument("MalformedPolyomino: step counts");
    PathProfile rp = profile(red, m, n), gp = profile(green, m, n);
    for (int c = 1; c <= m; ++c) {
        if (rp.horiz[c] < 0 || gp.horiz[c] < 0)
            throw std::invalid_argument("MalformedPolyomino: missing column step");
        if (kind == PolyKind::Parallelogram) {
            if (gp.horiz[c] >= rp.horiz[c])
                throw std::invalid_argument(
                    "MalformedPolyomino: red must stay strictly above green");
        } else {
            if (gp.horiz[c] > rp.horiz[c])
                throw std::invalid_argument(
                    "MalformedPolyomino: red must stay weakly above green");
        }
    }
    if (kind == PolyKind::Parallelogram && m >= 1 && n >= 1) {
        if (red[0] != 'N' || green[0] != 'E' || red.back() != 'E' || green.back() != 'N')
            throw std::invalid_argument("MalformedPolyomino: paths must meet only at ends");
    }
    if (!labels.empty()) {
        if ((int)labels.size() != n) throw std::invalid_argument("MissingLabels: count");
        // strictly increasing within columns of the red path
        int idx = 0;
        for (size_t s = 0; s + 1 < red.size(); ++s) {
            if (red[s] == 'N') {
                if (red[s + 1] == 'N' && labels[idx + 1] <= labels[idx])
                    throw std::invalid_argument("MalformedPolyomino: labels in columns");
                ++idx;
            }
        }
    }
    if (!drise.empty() && !dpeak.empty())
        throw std::invalid_argument("MalformedPolyomino: mixed decorations");
    auto rs = polyomino_rises(*this);
    for (int i : drise)
        if (std::find(rs.begin(), rs.end(), i) == rs.end())
            throw std::invalid_argument("MalformedPolyomino: decorated non-rise");
    auto pk = polyomino_peaks(*this);
    for (int i : dpeak)
        if (std::find(pk.begin(), pk.end(), i) == pk.end())
            throw std::invalid_argument("MalformedPolyomino: decorated non-peak");
}

std::vector<BarredLetter> area_word_diagonals(const Polyomino& p) {
    PathProfile rp = profile(p.red, p.m, p.n), gp = profile(p.green, p.m, p.n);
    auto inside = [&](int cx, int cy) {
        if (cx < 1 || cx > p.m || cy < 1 || cy > p.n) return false;
        return gp.horiz[cx] < cy && cy <= rp.horiz[cx];
    };
    // diagonal from the end of each green horizontal step
    std::vector<std::vector<bool>> crossed(p.m + 2, std::vector<bool>(p.n + 2, false));
    std::vector<int> green_value(p.m + 1, 0); // by column
    for (int cx = 1; cx <= p.m; ++cx) {
        int y = gp.horiz[cx];
        int len = 0;
        while (inside(cx - len, y + 1 + len)) {
            crossed[cx - len][y + 1 + len] = true;
            ++len;
        }
        green_value[cx] = len;
    }
    // dots: inside cells not crossed; red value = dots in the row
    std::vector<int> red_value(p.n + 1, 0); // by row
    for (int cy = 1; cy <= p.n; ++cy)
        for (int cx = 1; cx <= p.m; ++cx)
            if (inside(cx, cy) && !crossed[cx][cy]) red_value[cy]++;

    std::vector<BarredLetter> w;
    if (p.kind == PolyKind::Reduced) w.push_back({0, false});
    int redRow = 0, greenCol = 0;
    for (int d = 0; d < p.m + p.n; ++d) {
        if (p.red[d] == 'N') {
            ++redRow;
            w.push_back({red_value[redRow], true});
        }
        if (p.green[d] == 'E') {
            ++greenCol;
            w.push_back({green_value[greenCol], false});
        }
    }
    return w;
}

std::vector<BarredLetter> area_word_interleave(const Polyomino& p) {
    std::vector<char> dyck;
    if (p.kind == PolyKind::Reduced) dyck.push_back('N');
    for (int i = 0; i < p.m + p.n; ++i) {
        dyck.push_back(p.red[i] == 'N' ? 'N' : 'E');
        dyck.push_back(p.green[i] == 'E' ? 'N' : 'E');
    }
    if (p.kind == PolyKind::Reduced) dyck.push_back('E');
    // area word of the Dyck path
    std::vector<int> a;
    int x = 0;
    for (char ch : dyck) {
        if (ch == 'N') a.push_back((int)a.size() - x);
        else ++x;
    }
    std::vector<BarredLetter> w;
    int shift = (p.kind == PolyKind::Parallelogram) ? 1 : 0;
    for (int v : a) w.push_back(BarredLetter::from_rank(v + shift));
    return w;
}

std::vector<BarredLetter> area_word(const Polyomino& p) {
    auto w1 = area_word_diagonals(p);
    auto w2 = area_word_interleave(p);
    if (!(w1 == w2)) throw std::logic_error("polyomino area-word algorithms disagree");
    return w1;
}

Polyomino polyomino_from_area_word(PolyKind kind, const std::vector<BarredLetter>& w) {
    // area word -> Dyck steps -> un-interleave
    std::vector<int> a;
    int shift = (kind == PolyKind::Parallelogram) ? 1 : 0;
    for (const auto& l : w) a.push_back(l.rank() - shift);
    std::vector<char> dyck;
    int x = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int target = (int)i - a[i]; // x-coordinate of this north step
        while (x < target) {
            dyck.push_back('E');
            ++x;
        }
        dyck.push_back('N');
    }
    while (x < (int)a.size()) {
        dyck.push_back('E');
        ++x;
    }
    if (kind == PolyKind::Reduced) {
        if (dyck.empty() || dyck.front() != 'N' || dyck.back() != 'E')
            throw std::invalid_argument("MalformedPolyomino: bad reduced area word");
        dyck.erase(dyck.begin());
        dyck.pop_back();
    }
    Polyomino p;
    p.kind = kind;
    std::string red, green;
    for (size_t i = 0; i < dyck.size(); i += 2) {
        red.push_back(dyck[i] == 'N' ? 'N' : 'E');
        green.push_back(dyck[i + 1] == 'N' ? 'E' : 'N');
    }
    p.red = red;
    p.green = green;
    p.m = (int)std::count(red.begin(), red.end(), 'E');
    p.n = (int)std::count(red.begin(), red.end(), 'N');
    return p;
}

std::vector<int> polyomino_rises(const Polyomino& p) {
    auto w = area_word(p);
    std::vector<int> out;
    if (p.kind == PolyKind::Parallelogram) {
        for (int i = 1; i + 1 <= (int)w.size(); ++i)
            if (w[i - 1].value < w[i].value && i != 1) out.push_back(i);
    } else {
        for (int i = 2; i <= (int)w.size(); ++i)
            if (w[i - 1].value > w[i - 2].value) out.push_back(i);
    }
    return out;
}

std::vector<int> polyomino_peaks(const Polyomino& p) {
    const std::string& path = (p.kind == PolyKind::Parallelogram) ? p.red : p.green;
    std::vector<int> out;
    bool first_skipped = false;
    for (int i = 1; i < (int)path.size(); ++i) {
        if (path[i] == 'E' && path[i - 1] == 'N') {
            if (p.kind == PolyKind::Parallelogram && !first_skipped) {
                first_skipped = true; // leftmost red peak is never decorated
                continue;
            }
            out.push_back(i + 1); // 1-based step index of the E step
        }
    }
    return out;
}

long polyomino_area(const Polyomino& p) {
    auto w = area_word(p);
    long s = 0;
    for (int i = 1; i <= (int)w.size(); ++i)
        if (!p.drise.count(i)) s += w[i - 1].value;
    return s;
}

long polyomino_dinv(const Polyomino& p) {
    auto w = area_word(p);
    long s = 0;
    for (int i = 0; i < (int)w.size(); ++i)
        for (int j = i + 1; j < (int)w.size(); ++j) {
            if (p.kind == PolyKind::Parallelogram) {
                if (w[j].rank() == w[i].rank() + 1) ++s;
            } else {
                if (w[i].rank() == w[j].rank() + 1) ++s;
            }
        }
    return s;
}

namespace {

struct BounceWalk {
    std::vector<BarredLetter> word;
    std::vector<int> hcol; // column of the step if horizontal, else -1
};

BounceWalk bounce_walk(const Polyomino& p) {
    PathProfile rp = profile(p.red, p.m, p.n), gp = profile(p.green, p.m, p.n);
    int m = p.m, n = p.n;
    // gvx[y] = x-coordinate of the green vertical step that ends at height y
    std::vector<int> gvx(n + 1, -1);
    {
        int x = 0, y = 0;
        for (char ch : p.green) {
            if (ch == 'N') gvx[++y] = x;
            else ++x;
        }
    }
    BounceWalk out;
    auto push = [&](int rank, int hc) {
        out.word.push_back(BarredLetter::from_rank(rank));
        out.hcol.push_back(hc);
    };
    int guard = 4 * (m + n) + 8;
    if (p.kind == PolyKind::Parallelogram) {
        // a single east step first, then north to the end of the red
        // horizontal in that column, then east to the end of a green
        // vertical, alternating; run labels climb the barred alphabet
        int x = 1, y = 0, run = 0;
        push(1, 1);
        while ((x != m || y != n) && guard-- > 0) {
            ++run;
            int yt = rp.horiz[x];
            while (y < yt) push(run + 1, -1), ++y;
            if (x == m && y == n) break;
            ++run;
            int xt = (y < n) ? gvx[y] : m;
            while (x < xt) ++x, push(run + 1, x);
        }
    } else {
        // reduced: east to the beginning of a green vertical, north to the
        // beginning of a red horizontal, alternating; labels start at 0
        int x = 0, y = 0, run = 0;
        while ((x != m || y != n) && guard-- > 0) {
            int xt = (y < n) ? gvx[y + 1] : m;
            while (x < xt) ++x, push(run, x);
            if (x == m && y == n) break;
            ++run;
            int yt = (x < m) ? rp.horiz[x + 1] : n;
            while (y < yt) push(run, -1), ++y;
            ++run;
        }
    }
    if (guard <= 0) throw std::logic_error("polyomino bounce walk stuck");
    if ((int)out.word.size() != m + n)
        throw std::logic_error("polyomino bounce word length");
    return out;
}

} // namespace

std::vector<BarredLetter> polyomino_bounce_word(const Polyomino& p) {
    return bounce_walk(p).word;
}

long polyomino_bounce(const Polyomino& p) {
    BounceWalk walk = bounce_walk(p);
    std::set<int> dropped_cols;
    const std::string& path = (p.kind == PolyKind::Parallelogram) ? p.red : p.green;
    for (int idx : p.dpeak) {
        int col = 0;
        for (int i = 0; i < idx; ++i)
            if (path[i] == 'E') ++col;
        dropped_cols.insert(col);
    }
    long total = 0;
    for (int i = 0; i < (int)walk.word.size(); ++i) {
        if (walk.hcol[i] >= 0 && dropped_cols.count(walk.hcol[i])) continue;
        total += walk.word[i].value;
    }
    return total;
}

std::vector<int> polyomino_parking_word(const Polyomino& p) {
    if (!p.labelled()) throw std::invalid_argument("MissingLabels");
    if (p.kind != PolyKind::Parallelogram)
        throw std::invalid_argument("MissingLabels: pmaj is for labelled parallelogram polyominoes");
    // labels per red column (1-based): red north step i sits in column
    // (x-coordinate of that step) + 1
    std::vector<std::vector<int>> col_labels(p.m + 1);
    {
        int x = 0, idx = 0;
        for (char ch : p.red) {
            if (ch == 'N') col_labels[x + 1].push_back(p.labels[idx++]);
            else ++x;
        }
    }
    std::multiset<int> C;
    for (int l : col_labels[1]) C.insert(l);
    std::vector<int> word;
    int prev = 0;
    for (int i = 1; i <= p.m + p.n - 1; ++i) {
        if (i > 1) {
            char g = p.green[i - 1];
            auto it = C.find(prev);
            if (it == C.end()) throw std::logic_error("polyomino parking word");
            C.erase(it);
            if (g == 'E') {
                C.insert(0);
                int col = (int)std::count(p.green.begin(), p.green.begin() + i, 'E');
                for (int l : col_labels[col]) C.insert(l);
            }
        }
        if (C.empty()) throw std::logic_error("polyomino parking word: empty pool");
        int pv;
        if (i == 1) pv = *C.rbegin();
        else {
            auto it = C.upper_bound(prev);
            if (it == C.begin()) pv = *C.rbegin();
            else pv = *std::prev(it);
        }
        word.push_back(pv);
        prev = pv;
    }
    return word;
}

long polyomino_pmaj(const Polyomino& p) {
    auto w = polyomino_parking_word(p);
    std::reverse(w.begin(), w.end());
    long s = 0;
    for (int i = 0; i + 1 < (int)w.size(); ++i)
        if (w[i] > w[i + 1]) s += i + 1;
    return s + p.m + p.n - 1;
}

PolyominoStats polyomino_statistics(const Polyomino& p) {
    p.validate();
    PolyominoStats s;
    s.area = polyomino_area(p);
    s.dinv = polyomino_dinv(p);
    s.bounce = polyomino_bounce(p);
    s.bounce_word = polyomino_bounce_word(p);
    if (p.labelled() && p.kind == PolyKind::Parallelogram) {
        s.parking_word = polyomino_parking_word(p);
        s.pmaj = polyomino_pmaj(p);
        s.has_pmaj = true;
    }
    return s;
}

namespace {

struct ColoredWord {
    std::vector<int> values;
    std::vector<bool> red;     // color per letter
    std::vector<int> red_label; // label per letter (red letters only)
};

// The colored area word of the partially labelled Dyck path matched to a
// parallelogram polyomino: red path north steps give red letters (previous
// letter + 1, starting at 0), east steps except the final one give green
// letters read off the green path.
ColoredWord colored_word(const Polyomino& p, bool use_labels) {
    if (p.kind != PolyKind::Parallelogram)
        throw std::invalid_argument("newdinv: parallelogram only");
    if (p.red.empty() || p.red.back() != 'E')
        throw std::invalid_argument("MalformedPolyomino");
    PathProfile gp = profile(p.green, p.m, p.n);
    ColoredWord w;
    int x = 0, y = 0, labIdx = 0;
    for (int i = 0; i + 1 < p.m + p.n; ++i) {
        char ch = p.red[i];
        if (ch == 'N') {
            int prev = w.values.empty() ? -1 : w.values.back();
            w.values.push_back(prev + 1);
            w.red.push_back(true);
            w.red_label.push_back(use_labels && p.labelled() ? p.labels[labIdx] : 0);
            ++labIdx;
            ++y;
        } else {
            // green horizontal in the column to the right, x+1 rows below
            int gy = gp.horiz[x + 2];
            if (gy < 0) throw std::logic_error("newdinv: missing green step");
            w.values.push_back(y - gy - 1);
            w.red.push_back(false);
            w.red_label.push_back(0);
            ++x;
        }
    }
    return w;
}

} // namespace

std::vector<std::pair<int, int>> newdinv_inversions(const Polyomino& p, bool use_labels) {
    ColoredWord w = colored_word(p, use_labels);
    int L = (int)w.values.size();
    std::vector<std::pair<int, int>> out;
    auto label_ok = [&](int i, int j) {
        if (!use_labels || !p.labelled()) return true;
        if (!w.red[j]) return true;
        return w.red_label[i] > w.red_label[j];
    };
    for (int i = 0; i < L; ++i) {
        if (!w.red[i]) continue;
        for (int j = 0; j < L; ++j) {
            if (i > j && w.values[i] == w.values[j] && label_ok(i, j))
                out.push_back({i + 1, j + 1});
            if (i < j && w.values[i] == w.values[j] + 1 && label_ok(i, j))
                out.push_back({i + 1, j + 1});
        }
    }
    return out;
}

long newdinv(const Polyomino& p, bool use_labels) {
    return (long)newdinv_inversions(p, use_labels).size();
}

void generate_polyominoes(PolyKind kind, int m, int n,
                          const std::function<void(const Polyomino&)>& fn) {
    int len = (kind == PolyKind::Parallelogram) ? m + n : m + n + 1;
    int unbarred_target = (kind == PolyKind::Parallelogram) ? m : m + 1;
    int barred_target = n;
    std::vector<BarredLetter> w;
    std::function<void(int, int, int)> rec = [&](int pos, int ub, int bb) {
        if (pos == len) {
            if (ub == unbarred_target && bb == barred_target) {
                Polyomino p = polyomino_from_area_word(kind, w);
                fn(p);
            }
            return;
        }
        int maxRank = w.empty() ? 0 : w.back().rank() + 1;
        int minRank = (kind == PolyKind::Parallelogram) ? 1 : 0;
        for (int r = minRank; r <= maxRank; ++r) {
            BarredLetter l = BarredLetter::from_rank(r);
            if (kind == PolyKind::Parallelogram && l.value == 0 && !l.barred) continue;
            if (kind == PolyKind::Parallelogram && l.rank() == 1 && pos > 0)
                continue; // exactly one 0bar, as the first letter
            int nub = ub + (l.barred ? 0 : 1), nbb = bb + (l.barred ? 1 : 0);
            if (nub > unbarred_target || nbb > barred_target) continue;
            w.push_back(l);
            rec(pos + 1, nub, nbb);
            w.pop_back();
        }
    };
    if (kind == PolyKind::Parallelogram) {
        if (m >= 1 && n >= 1) {
            w.push_back(BarredLetter::from_rank(1));
            rec(1, 0, 1);
        }
    } else {
        w.push_back({0, false});
        rec(1, 1, 0);
    }
    (void)barred_target;
}

} // namespace qtc
