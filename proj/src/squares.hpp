#pragma once

#include <functional>
#include <vector>

namespace qtc {

/// Square lattice path from (0,0) to (n,n); w_i is the diagonal offset of
/// the i-th north step (the step lies on y = x + w_i). The final step is
/// east iff w_n >= 0; the flag is stored anyway and checked.
struct SquarePath {
    int n = 0;
    bool ends_east = true;
    std::vector<int> w;
    std::vector<int> labels; // empty or a permutation of 1..n

    bool labelled() const { return !labels.empty(); }
    void validate() const;

    int c() const;
    int j() const;
    bool is_dyck() const;

    bool operator<(const SquarePath& o) const {
        return std::tie(n, ends_east, w, labels) < std::tie(o.n, o.ends_east, o.w, o.labels);
    }
    bool operator==(const SquarePath& o) const {
        return n == o.n && ends_east == o.ends_east && w == o.w && labels == o.labels;
    }
};

struct SquareStats {
    long area = 0;
    long dinv = 0;
    long bounce = 0;
    int c = 0;
    int j = 0;
};

SquareStats square_statistics(const SquarePath& p);

/// dinv reading word: diagonals from the lowest (y = x - c) upwards,
/// bottom to top within a diagonal; plus its reverse.
std::vector<int> square_dinv_word(const SquarePath& p);
std::vector<int> square_reverse_dinv_word(const SquarePath& p);

void generate_squares(int n, bool ends_east, bool labelled,
                      const std::function<void(const SquarePath&)>& fn);

} // namespace qtc
