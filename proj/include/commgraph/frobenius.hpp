#pragma once

#include <vector>

#include "commgraph/minpoly.hpp"

namespace cg {

/// Rational canonical form data: ascending invariant factor chain
/// f_1 | f_2 | ... | f_k, companion blocks, and an invertible S with
/// S A S^-1 = C_1 (+) ... (+) C_k.
struct FrobeniusForm {
    std::vector<Poly> invariant_factors;
    std::vector<Mat> blocks;
    Mat transform;
    Mat source;

    int block_count() const { return static_cast<int>(invariant_factors.size()); }
    Mat block_diagonal() const {
        Mat d = Mat::zero(source.field(), source.n());
        int off = 0;
        for (const Mat& c : blocks) {
            for (int i = 0; i < c.n(); ++i)
                for (int j = 0; j < c.n(); ++j) d.at(off + i, off + j) = c.at(i, j);
            off += c.n();
        }
        return d;
    }
};

namespace detail {

/// Strip from h every irreducible factor it shares with s.
inline Poly remove_common(Poly h, const Poly& s) {
    while (true) {
        Poly t = poly_gcd(h, s);
        if (t.degree() < 1) return h.monic();
        h = (h / t).monic();
    }
}

/// Split lcm(f, g) = fhat * ghat with fhat | f, ghat | g, gcd = 1.
/// Each irreducible goes wholly to the side carrying its larger power
/// (ties to f). Needs only gcds.
inline std::pair<Poly, Poly> coprime_split(const Poly& f, const Poly& g) {
    Poly l = poly_lcm(f, g);
    Poly g1 = (g / poly_gcd(f, g)).monic();      // primes where g wins strictly
    Poly ghat = (g / remove_common(g, g1)).monic();
    Poly fhat = (l / ghat).monic();
    return {fhat, ghat};
}

/// Least-degree monic h with h(a)x in span(basis). Basis may be empty.
inline Poly relative_order(const Mat& a, const Vec& x, const std::vector<Vec>& basis) {
    const FieldDescriptor& f = a.field();
    const int n = a.n();
    const int w = static_cast<int>(basis.size());
    std::vector<Vec> krylov;
    Vec cur = x;
    for (int k = 0;; ++k) {
        Tableau t(f, n, w + k);
        for (int j = 0; j < w; ++j)
            for (int i = 0; i < n; ++i) t.at(i, j) = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i) t.at(i, w + j) = krylov[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (auto c = solve(t, cur, f)) {
            std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1, Scalar::zero(f));
            for (int j = 0; j < k; ++j) coeffs[static_cast<std::size_t>(j)] = -(*c)[static_cast<std::size_t>(w + j)];
            coeffs[static_cast<std::size_t>(k)] = Scalar::one(f);
            return Poly(f, std::move(coeffs));
        }
        krylov.push_back(cur);
        cur = mat_vec(a, cur);
        if (k > n) throw std::logic_error("relative order chain failed to close");
    }
}

inline Vec poly_apply(const Poly& h, const Mat& a, const Vec& v) {
    Vec r(v.size(), Scalar::zero(a.field()));
    Vec cur = v;
    for (int i = 0; i <= h.degree(); ++i) {
        Scalar c = h.coeff(i);
        if (!c.is_zero())
            for (std::size_t j = 0; j < r.size(); ++j) r[j] = r[j] + c * cur[j];
        if (i < h.degree()) cur = mat_vec(a, cur);
    }
    return r;
}

}  // namespace detail

/// Cyclic-vector decomposition. Each round finds a vector of maximal
/// order modulo the invariant subspace built so far (combining standard
/// basis vectors through coprime splitting of orders), shifts it into a
/// complement of that subspace, and appends its Krylov block.
inline FrobeniusForm frobenius_form(const Mat& a) {
    const FieldDescriptor& f = a.field();
    const int n = a.n();

    std::vector<Vec> basis;                 // accumulated Krylov vectors
    std::vector<Poly> factors_desc;         // orders, largest first
    std::vector<int> block_sizes;

    while (static_cast<int>(basis.size()) < n) {
        // maximal-order vector modulo span(basis)
        Vec v(n, Scalar::zero(f));
        Poly order = Poly::one(f);
        for (int i = 0; i < n; ++i) {
            Vec e(n, Scalar::zero(f));
            e[static_cast<std::size_t>(i)] = Scalar::one(f);
            Poly g = detail::relative_order(a, e, basis);
            if (g.degree() < 1 || divides(g, order)) continue;
            auto [fhat, ghat] = detail::coprime_split(order, g);
            Vec left = detail::poly_apply((order / fhat).monic(), a, v);
            Vec right = detail::poly_apply((g / ghat).monic(), a, e);
            for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = left[static_cast<std::size_t>(j)] + right[static_cast<std::size_t>(j)];
            order = (fhat * ghat).monic();
            if (order.degree() == n - static_cast<int>(basis.size())) break;
        }
        Poly h = detail::relative_order(a, v, basis);

        // shift v so its Krylov space meets the subspace trivially:
        // h(a)v lies in the subspace, which is admissible, so h(a)v = h(a)w
        // for some w inside it.
        Vec target = detail::poly_apply(h, a, v);
        if (!basis.empty()) {
            const int w = static_cast<int>(basis.size());
            Tableau t(f, n, w);
            for (int j = 0; j < w; ++j) {
                Vec col = detail::poly_apply(h, a, basis[static_cast<std::size_t>(j)]);
                for (int i = 0; i < n; ++i) t.at(i, j) = col[static_cast<std::size_t>(i)];
            }
            auto c = solve(t, target, f);
            if (!c) throw std::logic_error("invariant subspace not admissible");
            for (int j = 0; j < w; ++j)
                for (int i = 0; i < n; ++i)
                    v[static_cast<std::size_t>(i)] =
                        v[static_cast<std::size_t>(i)] - (*c)[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }

        // append the Krylov chain of the shifted vector
        Vec cur = v;
        for (int i = 0; i < h.degree(); ++i) {
            basis.push_back(cur);
            cur = mat_vec(a, cur);
        }
        factors_desc.push_back(h);
        block_sizes.push_back(h.degree());
    }

    // ascending chain: smallest block first
    FrobeniusForm ff{.invariant_factors = {}, .blocks = {}, .transform = Mat::zero(f, n),
                     .source = a};
    Mat p(f, n);
    int col = 0;
    int nblocks = static_cast<int>(factors_desc.size());
    // basis holds blocks in descending order; emit them reversed
    std::vector<int> offsets(static_cast<std::size_t>(nblocks), 0);
    {
        int off = 0;
        for (int b = 0; b < nblocks; ++b) {
            offsets[static_cast<std::size_t>(b)] = off;
            off += block_sizes[static_cast<std::size_t>(b)];
        }
    }
    for (int b = nblocks - 1; b >= 0; --b) {
        ff.invariant_factors.push_back(factors_desc[static_cast<std::size_t>(b)]);
        ff.blocks.push_back(companion(factors_desc[static_cast<std::size_t>(b)]));
        for (int j = 0; j < block_sizes[static_cast<std::size_t>(b)]; ++j, ++col)
            for (int i = 0; i < n; ++i)
                p.at(i, col) = basis[static_cast<std::size_t>(offsets[static_cast<std::size_t>(b)] + j)][static_cast<std::size_t>(i)];
    }
    ff.transform = inverse(p);  // S = P^-1, so S A S^-1 = block diagonal
    return ff;
}

/// True iff the minimal polynomial has degree < n (more than one block).
inline bool is_derogatory(const Mat& a) {
    return minimal_polynomial(a).degree() < a.n();
}

/// E = S^-1 (I on the first block, 0 elsewhere) S; a nontrivial
/// idempotent commuting with the source matrix.
inline Mat block_idempotent(const FrobeniusForm& ff) {
    if (ff.block_count() < 2) throw NotDerogatory();
    const FieldDescriptor& f = ff.source.field();
    const int n = ff.source.n();
    Mat d = Mat::zero(f, n);
    for (int i = 0; i < ff.blocks[0].n(); ++i) d.at(i, i) = Scalar::one(f);
    Mat s_inv = inverse(ff.transform);
    return mat_mul(mat_mul(s_inv, d), ff.transform);
}

}  // namespace cg
