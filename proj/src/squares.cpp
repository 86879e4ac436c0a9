#include "squares.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace qtc {

void SquarePath::validate() const {
    if ((int)w.size() != n) throw std::invalid_argument("SquarePath: size mismatch");
    if (n == 0) throw std::invalid_argument("SquarePath: empty path");
    for (int i = 0; i < n; ++i) {
        int x = i - w[i]; // x-coordinate of the (i+1)-th north step
        if (x < 0 || x > n) throw std::invalid_argument("SquarePath: step outside the square");
        if (i > 0 && w[i] > w[i - 1] + 1)
            throw std::invalid_argument("SquarePath: invalid area word");
        if (x == n && i + 1 < n && (i - 1) - w[i + 1] != 0)
            ; // nothing; monotonicity already enforced below
    }
    for (int i = 0; i + 1 < n; ++i)
        if ((i - w[i]) > (i + 1 - w[i + 1]))
            throw std::invalid_argument("SquarePath: x-coordinates must be monotone");
    bool east = w[n - 1] >= 0;
    if (east != ends_east)
        throw std::invalid_argument("SquarePath: end flag inconsistent with w");
    if (!labels.empty()) {
        if ((int)labels.size() != n) throw std::invalid_argument("SquarePath: label count");
        std::vector<int> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i)
            if (sorted[i] != i + 1)
                throw std::invalid_argument("SquarePath: labels must be a permutation");
        for (int i = 1; i < n; ++i)
            if (w[i] == w[i - 1] + 1 && labels[i] <= labels[i - 1])
                throw std::invalid_argument("SquarePath: labels must increase in columns");
    }
}

int SquarePath::c() const {
    int m = 0;
    for (int v : w) m = std::min(m, v);
    return -m;
}

int SquarePath::j() const {
    int cc = -c();
    for (int i = 0; i < n; ++i)
        if (w[i] == cc) return i;
    return 0;
}

bool SquarePath::is_dyck() const { return c() == 0; }

SquareStats square_statistics(const SquarePath& p) {
    p.validate();
    SquareStats s;
    s.c = p.c();
    s.j = p.j();
    long sum = 0;
    for (int v : p.w) sum += v;
    s.area = sum + (long)p.n * s.c - s.j - (p.ends_east ? s.c : 0);

    bool lab = p.labelled();
    for (int i = 0; i < p.n; ++i)
        for (int k = i + 1; k < p.n; ++k) {
            if (p.w[i] == p.w[k] && (!lab || p.labels[i] < p.labels[k])) ++s.dinv;
            if (p.w[i] == p.w[k] + 1 && (!lab || p.labels[i] > p.labels[k])) {
                if (k + 1 < p.n || p.w[p.n - 1] >= 0) ++s.dinv;
            }
        }

    // Bounce path. Phase 1 starts at (c+j, j) travelling north, bounces at
    // beginnings of east steps and at the diagonal y = x - c, and stops on
    // crossing y = n at (n+m, n). Phase 2 restarts at (m, 0), bounces at
    // ends of east steps and at the same diagonal, and ends at (c+j, j).
    // Labels start at 0 and increase once per north+east pair; they carry
    // over the restart unchanged.
    int n = p.n, c = s.c, j = s.j;
    std::vector<int> x(n + 2);
    for (int i = 1; i <= n; ++i) x[i] = (i - 1) - p.w[i - 1];
    x[n + 1] = n;
    std::vector<int> bounce_label(n + 1, 0);
    int label = 0;

    int row = j, col = c + j, m = 0;
    while (true) {
        if (col >= n) {
            // no east step departs this column: the run crosses y = n
            for (int i = row + 1; i <= n; ++i) bounce_label[i] = label;
            m = col - n;
            break;
        }
        // rise to the east step departing column col
        int h = 0;
        for (int i = 1; i <= n; ++i)
            if (x[i] <= col) h = i;
        for (int i = row + 1; i <= h; ++i) bounce_label[i] = label;
        row = h;
        if (row == n) {
            // final east run at height n meets the diagonal at (n+c, n)
            m = c;
            break;
        }
        col = row + c;
        ++label;
    }

    int row2 = 0, col2 = m;
    if (p.ends_east && m == 0) col2 = c; // starts east, first diagonal hit
    while (!(row2 == j && col2 == c + j)) {
        // rise to the first height (at most j) whose east run reaches col2
        int h = row2;
        for (int y = row2 + 1; y <= j; ++y)
            if (x[y + 1] > x[y] && x[y + 1] >= col2) { h = y; break; }
        for (int i = row2 + 1; i <= h; ++i) bounce_label[i] = label;
        bool moved = (h > row2) || (col2 != h + c);
        row2 = h;
        col2 = row2 + c;
        ++label;
        if (!moved) throw std::logic_error("square bounce: phase 2 stuck");
    }

    long b = 0;
    for (int i = 1; i <= n; ++i) b += bounce_label[i];
    s.bounce = b;
    return s;
}

std::vector<int> square_dinv_word(const SquarePath& p) {
    if (!p.labelled()) throw std::invalid_argument("MissingLabels");
    std::vector<int> out;
    int lo = -p.c(), hi = 0;
    for (int v : p.w) hi = std::max(hi, v);
    for (int d = lo; d <= hi; ++d)
        for (int i = 0; i < p.n; ++i)
            if (p.w[i] == d) out.push_back(p.labels[i]);
    return out;
}

std::vector<int> square_reverse_dinv_word(const SquarePath& p) {
    auto w = square_dinv_word(p);
    std::reverse(w.begin(), w.end());
    return w;
}

void generate_squares(int n, bool ends_east, bool labelled,
                      const std::function<void(const SquarePath&)>& fn) {
    std::vector<int> w(n);
    std::function<void(int)> recw = [&](int i) {
        if (i == n) {
            bool east = w[n - 1] >= 0;
            if (east != ends_east) return;
            SquarePath p;
            p.n = n;
            p.ends_east = ends_east;
            p.w = w;
            if (!labelled) {
                fn(p);
                return;
            }
            std::vector<int> perm(n);
            std::vector<bool> used(n + 1, false);
            std::function<void(int)> recl = [&](int k) {
                if (k == n) {
                    p.labels = perm;
                    fn(p);
                    return;
                }
                for (int v = 1; v <= n; ++v) {
                    if (used[v]) continue;
                    if (k > 0 && w[k] == w[k - 1] + 1 && v <= perm[k - 1]) continue;
                    used[v] = true;
                    perm[k] = v;
                    recl(k + 1);
                    used[v] = false;
                }
            };
            recl(0);
            return;
        }
        int lo = -n, hi = (i == 0) ? 0 : w[i - 1] + 1;
        for (int v = lo; v <= hi; ++v) {
            int x = i - v;
            if (x < 0 || x > n) continue;
            if (i > 0 && (i - 1 - w[i - 1]) > x) continue;
            w[i] = v;
            recw(i + 1);
        }
    };
    if (n >= 1) recw(0);
}

} // namespace qtc
