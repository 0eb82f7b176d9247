#pragma once

#include <vector>

#include "commgraph/linalg.hpp"
#include "commgraph/poly.hpp"

namespace cg {

/// Companion matrix of a monic polynomial: ones on the subdiagonal,
/// negated coefficients in the last column.
inline Mat companion(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("companion matrix needs a monic polynomial of degree >= 1");
    const int n = f.degree();
    Mat c(f.field(), n);
    for (int i = 1; i < n; ++i) c.at(i, i - 1) = Scalar::one(f.field());
    for (int i = 0; i < n; ++i) c.at(i, n - 1) = -f.coeff(i);
    return c;
}

/// Order polynomial of v under a: the least-degree monic h with h(a)v = 0.
inline Poly order_polynomial(const Mat& a, const Vec& v) {
    const FieldDescriptor& f = a.field();
    const int n = a.n();
    std::vector<Vec> krylov{v};
    for (int k = 1; k <= n + 1; ++k) {
        Vec next = mat_vec(a, krylov.back());
        // try to express 'next' in the span of krylov
        Tableau t(f, n, k);
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) t.at(i, j) = krylov[j][i];
        if (auto c = solve(t, next, f)) {
            std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1, Scalar::zero(f));
            for (int j = 0; j < k; ++j) coeffs[j] = -(*c)[j];
            coeffs[k] = Scalar::one(f);
            return Poly(f, std::move(coeffs));
        }
        krylov.push_back(std::move(next));
    }
    throw std::logic_error("Krylov chain failed to close");  // unreachable
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    return ((a * b) / poly_gcd(a, b)).monic();
}

/// Least-degree monic polynomial annihilating a: the lcm of the order
/// polynomials of the standard basis vectors.
inline Poly minimal_polynomial(const Mat& a) {
    const FieldDescriptor& f = a.field();
    const int n = a.n();
    Poly m = Poly::one(f);
    for (int i = 0; i < n; ++i) {
        Vec e(n, Scalar::zero(f));
        e[i] = Scalar::one(f);
        m = poly_lcm(m, order_polynomial(a, e));
        if (m.degree() == n) break;  // cannot exceed n
    }
    return m;
}

/// det(xI - a), computed from a similarity reduction to Hessenberg form
/// followed by the standard leading-minor recurrence.
inline Poly characteristic_polynomial(const Mat& a) {
    const FieldDescriptor& fd = a.field();
    const int n = a.n();
    Mat h = a;
    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (!h.at(i, j).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != j + 1) {
            for (int k = 0; k < n; ++k) std::swap(h.at(piv, k), h.at(j + 1, k));
            for (int k = 0; k < n; ++k) std::swap(h.at(k, piv), h.at(k, j + 1));
        }
        Scalar inv = h.at(j + 1, j).inverse();
        for (int i = j + 2; i < n; ++i) {
            if (h.at(i, j).is_zero()) continue;
            Scalar factor = h.at(i, j) * inv;
            for (int k = 0; k < n; ++k)
                h.at(i, k) = h.at(i, k) - factor * h.at(j + 1, k);
            for (int k = 0; k < n; ++k)
                h.at(k, j + 1) = h.at(k, j + 1) + factor * h.at(k, i);
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum over subdiagonal products
    std::vector<Poly> p{Poly::one(fd)};
    for (int k = 0; k < n; ++k) {
        Poly xk = Poly(fd, {-h.at(k, k), Scalar::one(fd)});
        Poly pk = xk * p[k];
        Scalar prod = Scalar::one(fd);
        for (int i = 1; i <= k; ++i) {
            prod = prod * h.at(k - i + 1, k - i);
            if (prod.is_zero()) break;
            pk = pk - (h.at(k - i, k) * prod) * p[k - i];
        }
        p.push_back(pk);
    }
    return p[n];
}

}  // namespace cg
