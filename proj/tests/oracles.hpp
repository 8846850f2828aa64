#pragma once

// Test-only oracles, kept independent of the library's computation paths so
// the two sides can disagree.

#include <random>
#include <vector>

#include "torica/int_matrix.hpp"
#include "torica/rational.hpp"

namespace torica::testing {

// Rank by plain rational Gaussian elimination (the library uses fraction-free
// integer elimination and, separately, Smith divisor counting).
inline int rank_oracle(const IntMatrix& a) {
    std::vector<RatVec> w(a.rows, RatVec(a.cols, Rat(0)));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) w[i][j] = Rat(a.at(i, j));
    int r = 0;
    for (int col = 0; col < a.cols && r < a.rows; ++col) {
        int p = -1;
        for (int i = r; i < a.rows; ++i)
            if (w[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(w[r], w[p]);
        for (int i = r + 1; i < a.rows; ++i) {
            if (w[i][col] == 0) continue;
            Rat f = w[i][col] / w[r][col];
            for (int j = col; j < a.cols; ++j) w[i][j] -= f * w[r][j];
        }
        ++r;
    }
    return r;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

}  // namespace torica::testing
