#pragma once

#include <optional>
#include <vector>

#include "commgraph/matrix.hpp"

namespace cg {

using Vec = std::vector<Scalar>;

/// Rectangular working matrix for elimination (rows x cols of Scalar).
struct Tableau {
    int rows = 0, cols = 0;
    std::vector<Scalar> data;

    Tableau(const FieldDescriptor& f, int r, int c)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, Scalar::zero(f)) {}

    Scalar& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }
};

/// In-place reduced row echelon form: leftmost pivots, leading 1, zeros
/// above and below. Returns the pivot column of each pivot row.
inline std::vector<int> rref(Tableau& t) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < t.cols && row < t.rows; ++col) {
        int piv = -1;
        for (int i = row; i < t.rows; ++i)
            if (!t.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < t.cols; ++j) std::swap(t.at(piv, j), t.at(row, j));
        Scalar inv = t.at(row, col).inverse();
        for (int j = col; j < t.cols; ++j) t.at(row, j) = inv * t.at(row, j);
        for (int i = 0; i < t.rows; ++i) {
            if (i == row || t.at(i, col).is_zero()) continue;
            Scalar f = t.at(i, col);
            for (int j = col; j < t.cols; ++j)
                t.at(i, j) = t.at(i, j) - f * t.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Kernel of a tableau (right null space), one basis vector per free
/// column, in ascending free-column order.
inline std::vector<Vec> kernel_of(const Tableau& input, const FieldDescriptor& f) {
    Tableau t = input;
    std::vector<int> pivots = rref(t);
    std::vector<bool> is_pivot(t.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int free = 0; free < t.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(t.cols, Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -t.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the right null space of a, deterministic echelon convention.
inline std::vector<Vec> kernel_basis(const Mat& a) {
    Tableau t(a.field(), a.n(), a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) t.at(i, j) = a.at(i, j);
    return kernel_of(t, a.field());
}

inline int rank(const Mat& a) {
    Tableau t(a.field(), a.n(), a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) t.at(i, j) = a.at(i, j);
    return static_cast<int>(rref(t).size());
}

/// Solve a x = b. Returns nullopt when inconsistent.
inline std::optional<Vec> solve(const Tableau& a, const Vec& b, const FieldDescriptor& f) {
    Tableau t(f, a.rows, a.cols + 1);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) t.at(i, j) = a.at(i, j);
        t.at(i, a.cols) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = rref(t);
    if (!pivots.empty() && pivots.back() == a.cols) return std::nullopt;
    Vec x(a.cols, Scalar::zero(f));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = t.at(static_cast<int>(r), a.cols);
    return x;
}

/// Inverse; throws std::domain_error when singular.
inline Mat inverse(const Mat& a) {
    const int n = a.n();
    Tableau t(a.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t.at(i, j) = a.at(i, j);
        t.at(i, n + i) = Scalar::one(a.field());
    }
    std::vector<int> pivots = rref(t);
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
        throw std::domain_error("matrix is singular");
    Mat r(a.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = t.at(i, n + j);
    return r;
}

inline Vec mat_vec(const Mat& a, const Vec& v) {
    Vec r(a.n(), Scalar::zero(a.field()));
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (!a.at(i, j).is_zero()) r[i] = r[i] + a.at(i, j) * v[j];
    return r;
}

}  // namespace cg
