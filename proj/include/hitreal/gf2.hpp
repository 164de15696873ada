#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace hitreal::gf2 {

// Vectors over GF(2) packed into one machine word; every space handled here
// has dimension at most 64 (the largest chain presentation needs 26 bits,
// torus lattices need 12).
using Vec = std::uint64_t;

inline int parity(Vec v) { return std::popcount(v) & 1; }

// Row echelon rank; destroys its copy of the rows.
inline int rank(std::vector<Vec> rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols; ++c) {
        Vec bit = Vec(1) << c;
        int pivot = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i] & bit) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

// Square matrix stored by columns: image of basis vector j is col[j].
struct Mat {
    int n = 0;
    std::vector<Vec> col;

    static Mat identity(int n) {
        Mat m;
        m.n = n;
        m.col.resize(n);
        for (int j = 0; j < n; ++j) m.col[j] = Vec(1) << j;
        return m;
    }

    Vec apply(Vec v) const {
        Vec out = 0;
        while (v) {
            int j = std::countr_zero(v);
            v &= v - 1;
            out ^= col[j];
        }
        return out;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat m;
        m.n = a.n;
        m.col.resize(b.n);
        for (int j = 0; j < b.n; ++j) m.col[j] = a.apply(b.col[j]);
        return m;
    }
};

// Equation rows for a column-major map: row i collects the i-th bit of every column.
inline std::vector<Vec> equation_rows(const Mat& m) {
    std::vector<Vec> rows(m.n, 0);
    for (int j = 0; j < m.n; ++j)
        for (int i = 0; i < m.n; ++i)
            if (m.col[j] >> i & 1) rows[i] |= Vec(1) << j;
    return rows;
}

// Dimension of {x : A x = 0} for the equation rows of an n-column system.
inline int kernel_dim(const std::vector<Vec>& rows, int cols) {
    return cols - rank(rows, cols);
}

// Whether A x = b admits a solution: augmenting b must not raise the rank.
inline bool consistent(std::vector<Vec> rows, int cols, Vec b) {
    int base = rank(rows, cols);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        if (b >> i & 1) rows[i] |= Vec(1) << cols;
    return rank(std::move(rows), cols + 1) == base;
}

// Random invertible matrix as a product of elementary column additions and
// swaps, with the inverse accumulated alongside (each elementary op is an
// involution over GF(2), so the inverse is the reversed product).
inline void random_invertible(int n, std::mt19937_64& rng, Mat& p, Mat& p_inv) {
    p = Mat::identity(n);
    std::vector<std::pair<int, int>> ops;
    std::uniform_int_distribution<int> pick(0, n - 1);
    int steps = 4 * n;
    for (int s = 0; s < steps; ++s) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        p.col[j] ^= p.col[i];  // column op: e_j -> e_j + e_i image-side
        ops.emplace_back(i, j);
    }
    p_inv = Mat::identity(n);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) p_inv.col[it->second] ^= p_inv.col[it->first];
}

}  // namespace hitreal::gf2
