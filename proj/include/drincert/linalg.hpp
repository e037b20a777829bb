#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "drincert/smallfield.hpp"

namespace drincert {

// Row-major dense matrix over a SmallField. Pivoting needs no magnitude
// comparisons: any nonzero entry is a unit.
struct Mat {
    size_t nrows = 0, ncols = 0;
    std::vector<FF> a;

    Mat() = default;
    Mat(size_t r, size_t c) : nrows(r), ncols(c), a(r * c, 0) {}
    FF& at(size_t r, size_t c) { return a[r * ncols + c]; }
    FF at(size_t r, size_t c) const { return a[r * ncols + c]; }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    bool operator==(const Mat& o) const {
        return nrows == o.nrows && ncols == o.ncols && a == o.a;
    }
};

inline Mat mat_mul(const SmallField& K, const Mat& x, const Mat& y) {
    if (x.ncols != y.nrows) throw std::invalid_argument("mat_mul: shape mismatch");
    Mat r(x.nrows, y.ncols);
    for (size_t i = 0; i < x.nrows; ++i)
        for (size_t k = 0; k < x.ncols; ++k) {
            FF v = x.at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < y.ncols; ++j) {
                FF w = y.at(k, j);
                if (w != 0) r.at(i, j) = K.add(r.at(i, j), K.mul(v, w));
            }
        }
    return r;
}

inline std::vector<FF> mat_vec(const SmallField& K, const Mat& m, const std::vector<FF>& v) {
    if (m.ncols != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    std::vector<FF> r(m.nrows, 0);
    for (size_t i = 0; i < m.nrows; ++i) {
        FF acc = 0;
        const FF* row = &m.a[i * m.ncols];
        for (size_t j = 0; j < m.ncols; ++j)
            if (row[j] != 0 && v[j] != 0) acc = K.add(acc, K.mul(row[j], v[j]));
        r[i] = acc;
    }
    return r;
}

// In-place reduced row echelon form; returns pivot column per pivot row.
inline std::vector<size_t> rref(const SmallField& K, Mat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.ncols && row < m.nrows; ++col) {
        size_t p = row;
        while (p < m.nrows && m.at(p, col) == 0) ++p;
        if (p == m.nrows) continue;
        if (p != row)
            for (size_t j = 0; j < m.ncols; ++j) std::swap(m.at(p, j), m.at(row, j));
        FF ival = K.inv(m.at(row, col));
        for (size_t j = col; j < m.ncols; ++j) m.at(row, j) = K.mul(m.at(row, j), ival);
        for (size_t r = 0; r < m.nrows; ++r) {
            if (r == row) continue;
            FF f = m.at(r, col);
            if (f == 0) continue;
            for (size_t j = col; j < m.ncols; ++j)
                m.at(r, j) = K.sub(m.at(r, j), K.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline size_t mat_rank(const SmallField& K, Mat m) { return rref(K, m).size(); }

// Basis of the right kernel {v : M v = 0}, one vector per free column.
inline std::vector<std::vector<FF>> kernel_basis(const SmallField& K, Mat m) {
    std::vector<size_t> piv = rref(K, m);
    std::vector<bool> is_pivot(m.ncols, false);
    for (size_t c : piv) is_pivot[c] = true;
    std::vector<std::vector<FF>> basis;
    for (size_t free_c = 0; free_c < m.ncols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<FF> v(m.ncols, 0);
        v[free_c] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = K.neg(m.at(r, free_c));
        basis.push_back(std::move(v));
    }
    return basis;
}

struct LinearSolve {
    bool consistent = false;
    bool unique = false;
    std::vector<FF> x;
};

// Solve M x = b exactly; reports consistency and uniqueness.
inline LinearSolve solve_linear(const SmallField& K, Mat m, std::vector<FF> b) {
    if (m.nrows != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    Mat aug(m.nrows, m.ncols + 1);
    for (size_t i = 0; i < m.nrows; ++i) {
        for (size_t j = 0; j < m.ncols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.ncols) = b[i];
    }
    std::vector<size_t> piv = rref(K, aug);
    LinearSolve out;
    for (size_t c : piv)
        if (c == m.ncols) return out;  // pivot in augmented column: inconsistent
    out.consistent = true;
    out.unique = piv.size() == m.ncols;
    out.x.assign(m.ncols, 0);
    for (size_t r = 0; r < piv.size(); ++r) out.x[piv[r]] = aug.at(r, m.ncols);
    return out;
}

inline FF mat_det(const SmallField& K, Mat m) {
    if (m.nrows != m.ncols) throw std::invalid_argument("mat_det: square required");
    FF det = 1;
    size_t n = m.nrows;
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && m.at(p, col) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            det = K.neg(det);
        }
        det = K.mul(det, m.at(col, col));
        FF ival = K.inv(m.at(col, col));
        for (size_t r = col + 1; r < n; ++r) {
            FF f = K.mul(m.at(r, col), ival);
            if (f == 0) continue;
            for (size_t j = col; j < n; ++j)
                m.at(r, j) = K.sub(m.at(r, j), K.mul(f, m.at(col, j)));
        }
    }
    return det;
}

inline FF mat_trace(const SmallField& K, const Mat& m) {
    FF t = 0;
    for (size_t i = 0; i < m.nrows; ++i) t = K.add(t, m.at(i, i));
    return t;
}

// det(xI - M), coefficients low power first (monic, length n+1). Permutation
// expansion; callers only use n <= 4.
std::vector<FF> charpoly(const SmallField& K, const Mat& m);

}  // namespace drincert
