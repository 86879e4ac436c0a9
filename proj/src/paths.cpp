#include "paths.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qtc {

void PathObject::validate() const {
    if ((int)area_word.size() != n) throw std::invalid_argument("PathObject: size mismatch");
    if (n == 0) return;
    if (area_word[0] != 0) throw std::invalid_argument("PathObject: a_1 must be 0");
    for (int i = 1; i < n; ++i) {
        if (area_word[i] < 0 || area_word[i] > area_word[i - 1] + 1)
            throw std::invalid_argument("PathObject: invalid area word");
    }
    if (!labels.empty()) {
        if ((int)labels.size() != n) throw std::invalid_argument("PathObject: label count");
        for (int i = 1; i < n; ++i)
            if (area_word[i] == area_word[i - 1] + 1 && labels[i] <= labels[i - 1])
                throw std::invalid_argument("PathObject: labels must increase in columns");
        for (int i = 0; i < n; ++i) {
            if (labels[i] < 0) throw std::invalid_argument("PathObject: negative label");
            if (labels[i] == 0 && xcoord(i + 1) == 0)
                throw std::invalid_argument("PathObject: 0 label in the first column");
        }
    }
    auto rs = rises(area_word);
    for (int i : drise)
        if (std::find(rs.begin(), rs.end(), i) == rs.end())
            throw std::invalid_argument("PathObject: decorated non-rise");
    auto pk = peaks(area_word);
    for (int i : dpeak)
        if (std::find(pk.begin(), pk.end(), i) == pk.end())
            throw std::invalid_argument("PathObject: decorated non-peak");
    if (!dpeak.empty() && !dval.empty())
        throw std::invalid_argument("PathObject: peak and valley decorations cannot mix");
    if (!dval.empty()) {
        auto vs = valleys(*this);
        for (int i : dval)
            if (std::find(vs.begin(), vs.end(), i) == vs.end())
                throw std::invalid_argument("PathObject: decorated non-contractible valley");
    }
}

bool PathObject::operator<(const PathObject& o) const {
    auto key = std::tie(n, area_word, labels, drise, dpeak, dval);
    auto okey = std::tie(o.n, o.area_word, o.labels, o.drise, o.dpeak, o.dval);
    return key < okey;
}

bool PathObject::operator==(const PathObject& o) const {
    return n == o.n && area_word == o.area_word && labels == o.labels &&
           drise == o.drise && dpeak == o.dpeak && dval == o.dval;
}

std::vector<int> rises(const std::vector<int>& a) {
    std::vector<int> out;
    for (int i = 1; i < (int)a.size(); ++i)
        if (a[i] > a[i - 1]) out.push_back(i + 1);
    return out;
}

std::vector<int> peaks(const std::vector<int>& a) {
    std::vector<int> out;
    int n = (int)a.size();
    for (int i = 0; i + 1 < n; ++i)
        if (a[i + 1] <= a[i]) out.push_back(i + 1);
    if (n > 0) out.push_back(n);
    return out;
}

std::vector<int> valleys(const PathObject& d) {
    std::vector<int> out;
    const auto& a = d.area_word;
    for (int i = 1; i < d.n; ++i) {
        if (a[i] < a[i - 1]) out.push_back(i + 1);
        else if (a[i] == a[i - 1]) {
            if (!d.labelled() || d.labels[i] > d.labels[i - 1]) out.push_back(i + 1);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> rise_fall_correspondence(const std::vector<int>& a) {
    int n = (int)a.size();
    // east step in column c (1-based) has a "fall diagonal": the run after
    // north step j consists of a_j - a_{j+1} + 1 east steps crossing
    // diagonals a_j, a_j - 1, ..., a_{j+1}; all but the last are falls.
    struct Fall {
        int col, diag;
    };
    std::vector<Fall> falls; // in path order
    std::vector<int> colFallRow(n + 2, 0);
    int col = 0;
    for (int j = 1; j <= n; ++j) {
        int next = (j < n) ? a[j] : 0;
        int run = a[j - 1] - next + 1;
        for (int s = 0; s < run; ++s) {
            ++col;
            if (s + 1 < run) falls.push_back({col, a[j - 1] - s});
            colFallRow[col] = j; // falls in this run come after north step j
        }
    }
    std::vector<std::pair<int, int>> out;
    std::vector<bool> used(falls.size(), false);
    for (int i = 1; i < n; ++i) {
        if (a[i] <= a[i - 1]) continue; // not a rise
        int rise = i + 1;
        int diag = a[i];
        bool matched = false;
        for (size_t f = 0; f < falls.size(); ++f) {
            if (used[f] || falls[f].diag != diag) continue;
            if (colFallRow[falls[f].col] < rise) continue; // fall before the rise
            used[f] = true;
            out.push_back({rise, falls[f].col});
            matched = true;
            break;
        }
        if (!matched) throw std::logic_error("rise-fall correspondence failed");
    }
    return out;
}

int fall_of_rise(const std::vector<int>& a, int rise) {
    for (auto& [r, c] : rise_fall_correspondence(a))
        if (r == rise) return c;
    throw std::invalid_argument("fall_of_rise: not a rise");
}

int rise_of_fall(const std::vector<int>& a, int fall_col) {
    for (auto& [r, c] : rise_fall_correspondence(a))
        if (c == fall_col) return r;
    throw std::invalid_argument("rise_of_fall: not a matched fall");
}

std::vector<int> bounce_word_of(const std::vector<int>& a) {
    int n = (int)a.size();
    std::vector<int> x(n + 1);
    for (int i = 1; i <= n; ++i) x[i] = i - 1 - a[i - 1];
    // height of the east step departing column c = number of north steps
    // with xcoord < c... the path turns east at height h(c) where h(c) =
    // #{i : x_i <= c - 1}; equivalently the bounce rises in column c to the
    // largest i with x_i <= c... we use: top of the north run in column c.
    std::vector<int> b(n, 0);
    int row = 0, colStart = 0, label = 0;
    while (row < n) {
        // bounce travels north from (colStart,row) to the height where the
        // path has an east step departing column colStart: that height is
        // the number of north steps with x <= colStart
        int h = 0;
        for (int i = 1; i <= n; ++i)
            if (x[i] <= colStart) h = i;
        for (int i = row + 1; i <= h; ++i) b[i - 1] = label;
        row = h;
        colStart = h; // east to the diagonal
        ++label;
    }
    return b;
}

std::vector<int> pbounce_word_of(const std::vector<int>& a, const std::set<int>& dpeak) {
    int n = (int)a.size();
    int acount = (int)dpeak.size();
    // leaning stack: x'_j = x_j - #{decorated peaks < j}; the broken main
    // diagonal's top end in row h sits at column h - D_h
    std::vector<int> x(n + 2), D(n + 2, 0);
    for (int j = 1; j <= n; ++j) {
        x[j] = j - 1 - a[j - 1];
        D[j] = D[j - 1] + (dpeak.count(j - 1) ? 1 : 0);
    }
    D[n + 1] = D[n] + (dpeak.count(n) ? 1 : 0);
    std::vector<int> xs(n + 1);
    for (int j = 1; j <= n; ++j) xs[j] = x[j] - D[j];

    std::vector<int> b(n, 0);
    int row = 0, col = 0, label = 0;
    while (row < n) {
        int h = row;
        for (int i = 1; i <= n; ++i)
            if (xs[i] <= col) h = std::max(h, i);
        if (h == row) throw std::logic_error("pbounce: stuck bounce path");
        for (int i = row + 1; i <= h; ++i) b[i - 1] = label;
        row = h;
        col = h - D[h]; // east run to the shifted diagonal segment in row h
        ++label;
    }
    return b;
}

std::vector<int> parking_word_of(const PathObject& d) {
    if (!d.labelled()) throw std::invalid_argument("MissingLabels");
    int n = d.n;
    std::multiset<int> C;
    std::vector<std::vector<int>> column_labels(n + 1);
    for (int i = 1; i <= n; ++i) column_labels[d.xcoord(i) + 1].push_back(d.labels[i - 1]);
    std::vector<int> word;
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) {
            auto it = C.find(prev);
            C.erase(it);
        }
        for (int l : column_labels[i]) C.insert(l);
        if (C.empty()) throw std::logic_error("parking word: empty pool");
        int p;
        if (i == 1) {
            p = *C.rbegin();
        } else {
            auto it = C.upper_bound(prev);
            if (it == C.begin()) p = *C.rbegin();
            else p = *std::prev(it);
        }
        word.push_back(p);
        prev = p;
    }
    return word;
}

long area_stat(const PathObject& d) {
    long s = 0;
    for (int i = 1; i <= d.n; ++i)
        if (!d.drise.count(i)) s += d.area_word[i - 1];
    return s;
}

long dinv_stat(const PathObject& d) {
    const auto& a = d.area_word;
    long s = 0;
    bool lab = d.labelled();
    if (!d.dval.empty()) {
        // valley dinv: drop the contributions of decorated valleys as the
        // first index, then subtract the number of decorations
        for (int i = 1; i <= d.n; ++i) {
            if (d.dval.count(i)) continue;
            for (int j = i + 1; j <= d.n; ++j) {
                if (a[i - 1] == a[j - 1] &&
                    (!lab || d.labels[i - 1] < d.labels[j - 1]))
                    ++s;
                if (a[i - 1] == a[j - 1] + 1 &&
                    (!lab || d.labels[i - 1] > d.labels[j - 1]))
                    ++s;
            }
        }
        s -= (long)d.dval.size();
        if (s < 0) throw std::logic_error("NegativeDinv");
        return s;
    }
    for (int i = 1; i <= d.n; ++i)
        for (int j = i + 1; j <= d.n; ++j) {
            if (a[i - 1] == a[j - 1] && !d.dpeak.count(i) &&
                (!lab || d.labels[i - 1] < d.labels[j - 1]))
                ++s;
            if (a[i - 1] == a[j - 1] + 1 && !d.dpeak.count(j) &&
                (!lab || d.labels[i - 1] > d.labels[j - 1]))
                ++s;
        }
    return s;
}

long bounce_stat(const PathObject& d) {
    auto b = bounce_word_of(d.area_word);
    long s = 0;
    for (int i = 1; i <= d.n; ++i)
        if (!d.dpeak.count(i)) s += b[i - 1];
    return s;
}

long pbounce_stat(const PathObject& d) {
    auto b = pbounce_word_of(d.area_word, d.dpeak);
    long s = 0;
    for (int v : b) s += v;
    return s;
}

namespace {

long maj_of(const std::vector<int>& w) {
    long s = 0;
    for (int i = 0; i + 1 < (int)w.size(); ++i)
        if (w[i] > w[i + 1]) s += i + 1;
    return s;
}

} // namespace

long pmaj_stat(const PathObject& d) {
    auto p = parking_word_of(d);
    std::reverse(p.begin(), p.end());
    return maj_of(p);
}

PathStats statistics(const PathObject& d) {
    d.validate();
    PathStats s;
    s.area = area_stat(d);
    s.dinv = dinv_stat(d);
    s.bounce = bounce_stat(d);
    s.bounce_word = bounce_word_of(d.area_word);
    if (!d.labelled()) {
        s.pbounce = pbounce_stat(d);
        s.pbounce_word = pbounce_word_of(d.area_word, d.dpeak);
        s.has_pbounce = true;
    }
    if (d.labelled()) {
        s.parking_word = parking_word_of(d);
        s.pmaj = pmaj_stat(d);
        s.has_pmaj = true;
    }
    return s;
}

ReadingWords reading_words(const PathObject& d) {
    if (!d.labelled()) throw std::invalid_argument("MissingLabels");
    ReadingWords w;
    int maxd = 0;
    for (int v : d.area_word) maxd = std::max(maxd, v);
    for (int diag = 0; diag <= maxd; ++diag)
        for (int i = 1; i <= d.n; ++i)
            if (d.area_word[i - 1] == diag) w.dinv_word.push_back(d.labels[i - 1]);
    w.pmaj_word = d.labels;
    w.reverse_dinv_word = w.dinv_word;
    std::reverse(w.reverse_dinv_word.begin(), w.reverse_dinv_word.end());
    return w;
}

PathObject standardize(const PathObject& d) {
    if (!d.labelled()) throw std::invalid_argument("MissingLabels");
    // rows in reverse dinv reading order
    std::vector<int> rows;
    int maxd = 0;
    for (int v : d.area_word) maxd = std::max(maxd, v);
    for (int diag = 0; diag <= maxd; ++diag)
        for (int i = 1; i <= d.n; ++i)
            if (d.area_word[i - 1] == diag) rows.push_back(i);
    std::reverse(rows.begin(), rows.end());

    int maxl = 0;
    for (int l : d.labels) maxl = std::max(maxl, l);
    std::vector<int> next(maxl + 1, 0);
    int acc = 0;
    for (int v = 0; v <= maxl; ++v) {
        long count = std::count(d.labels.begin(), d.labels.end(), v);
        if (v == 0 && count > 0)
            throw std::invalid_argument("standardize: blank labels unsupported");
        next[v] = acc;
        acc += (int)count;
    }
    PathObject out = d;
    for (int r : rows) {
        int v = d.labels[r - 1];
        out.labels[r - 1] = ++next[v];
    }
    return out;
}

bool is_shuffle(const std::vector<int>& word, const std::vector<ShuffleBlock>& blocks) {
    std::multiset<int> content(word.begin(), word.end()), expect;
    for (const auto& b : blocks) expect.insert(b.values.begin(), b.values.end());
    if (content != expect) throw std::invalid_argument("ContentMismatch");
    for (const auto& b : blocks) {
        std::vector<int> seq;
        std::set<int> vals(b.values.begin(), b.values.end());
        for (int w : word)
            if (vals.count(w)) seq.push_back(w);
        std::vector<int> sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        if (!b.increasing) std::reverse(sorted.begin(), sorted.end());
        if (seq != sorted) return false;
    }
    return true;
}

bool is_mu_shuffle(const std::vector<int>& word, const std::vector<int>& mu) {
    std::vector<ShuffleBlock> blocks;
    int start = 1;
    for (int part : mu) {
        ShuffleBlock b;
        for (int v = start; v < start + part; ++v) b.values.push_back(v);
        b.increasing = true;
        blocks.push_back(b);
        start += part;
    }
    return is_shuffle(word, blocks);
}

std::vector<std::vector<int>> dyck_area_words(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        int hi = (i == 0) ? 0 : cur[i - 1] + 1;
        for (int v = 0; v <= hi; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    if (n == 0) out.push_back({});
    else rec(0);
    return out;
}

void generate_decorated(int n, const std::function<void(const PathObject&)>& fn) {
    for (const auto& a : dyck_area_words(n)) {
        auto rs = rises(a);
        auto pk = peaks(a);
        int R = (int)rs.size(), P = (int)pk.size();
        for (unsigned rm = 0; rm < (1u << R); ++rm)
            for (unsigned pm = 0; pm < (1u << P); ++pm) {
                PathObject d;
                d.n = n;
                d.area_word = a;
                for (int i = 0; i < R; ++i)
                    if (rm & (1u << i)) d.drise.insert(rs[i]);
                for (int i = 0; i < P; ++i)
                    if (pm & (1u << i)) d.dpeak.insert(pk[i]);
                fn(d);
            }
    }
}

void generate_labelled(int n, LabelRegime regime, int label_bound,
                       int max_rise_decorations,
                       const std::function<void(const PathObject&)>& fn) {
    for (const auto& a : dyck_area_words(n)) {
        std::vector<std::vector<int>> labelings;
        std::vector<int> cur(n);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                labelings.push_back(cur);
                return;
            }
            int lo = 0, hi = label_bound;
            switch (regime) {
                case LabelRegime::None: labelings.push_back({}); return;
                case LabelRegime::Positive: lo = 1; break;
                case LabelRegime::Partial: lo = 0; break;
                case LabelRegime::TwoCar: lo = 1; hi = 2; break;
            }
            for (int v = lo; v <= hi; ++v) {
                if (i > 0 && a[i] == a[i - 1] + 1 && v <= cur[i - 1]) continue;
                if (v == 0 && (i - a[i]) == 0) continue; // first column
                cur[i] = v;
                rec(i + 1);
            }
        };
        if (regime == LabelRegime::None) labelings.push_back({});
        else rec(0);

        auto rs = rises(a);
        int R = (int)rs.size();
        for (const auto& lab : labelings) {
            for (unsigned rm = 0; rm < (1u << R); ++rm) {
                if (max_rise_decorations >= 0 &&
                    (int)__builtin_popcount(rm) > max_rise_decorations)
                    continue;
                PathObject d;
                d.n = n;
                d.area_word = a;
                d.labels = lab;
                for (int i = 0; i < R; ++i)
                    if (rm & (1u << i)) d.drise.insert(rs[i]);
                fn(d);
            }
        }
    }
}

} // namespace qtc
