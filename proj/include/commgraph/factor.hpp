#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "commgraph/linalg.hpp"
#include "commgraph/minpoly.hpp"
#include "commgraph/poly.hpp"

namespace cg {

/// Default cap on the degree of rational polynomials accepted by factor();
/// exhaustive subset recombination is exponential past desk scale.
inline constexpr int kRationalDegreeCap = 12;

struct SquarefreeDecomposition {
    /// (monic squarefree part, multiplicity), multiplicities strictly increasing.
    std::vector<std::pair<Poly, int>> parts;
    Scalar leading;
};

struct Factorization {
    Scalar leading;
    /// (monic irreducible, exponent), sorted by (degree, coefficient order).
    std::vector<std::pair<Poly, int>> factors;
};

/// Total order on polynomials used to canonicalize factor lists.
inline bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        Scalar x = a.coeff(i), y = b.coeff(i);
        if (x == y) continue;
        if (a.field().is_prime_field()) return x.residue() < y.residue();
        return x.rational() < y.rational();
    }
    return false;
}

inline Poly pow_mod(const Poly& base, BigInt e, const Poly& mod) {
    Poly r = Poly::one(base.field());
    Poly b = base % mod;
    while (e > 0) {
        if ((e & 1) != 0) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

namespace detail {

/// p-th root of f = h(x^p) over a prime field: h picks up every p-th
/// coefficient (Frobenius fixes the prime field).
inline Poly pth_root(const Poly& f) {
    const std::int64_t p = f.field().characteristic();
    std::vector<Scalar> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
    return Poly(f.field(), std::move(c));
}

inline void sqf_rec(const Poly& f, int outer_mult,
                    std::vector<std::pair<Poly, int>>& out) {
    if (f.degree() < 1) return;
    const std::int64_t p = f.field().characteristic();
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        // f = h(x^p)
        sqf_rec(pth_root(f), outer_mult * static_cast<int>(p), out);
        return;
    }
    Poly g = poly_gcd(f, fp);
    Poly w = (f / g).monic();
    int i = 1;
    while (w.degree() >= 1) {
        Poly y = poly_gcd(w, g);
        Poly z = (w / y).monic();
        if (z.degree() >= 1) out.emplace_back(z, i * outer_mult);
        ++i;
        w = y;
        g = (g / y).monic();
    }
    if (g.degree() >= 1) {
        // leftover multiplicities divisible by p
        sqf_rec(pth_root(g), outer_mult * static_cast<int>(p), out);
    }
}

}  // namespace detail

/// Squarefree decomposition, aware of the f' = 0 case in characteristic p.
inline SquarefreeDecomposition squarefree_decomposition(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    SquarefreeDecomposition d{.parts = {}, .leading = f.leading()};
    detail::sqf_rec(f.monic(), 1, d.parts);
    std::sort(d.parts.begin(), d.parts.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return d;
}

/// Product of the distinct irreducible factors, monic.
inline Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    Poly r = Poly::one(f.field());
    for (const auto& [g, mult] : squarefree_decomposition(f).parts) r = r * g;
    return r;
}

namespace detail {

/// Berlekamp split of a monic squarefree polynomial over F_p.
inline std::vector<Poly> berlekamp(const Poly& f) {
    const FieldDescriptor& fd = f.field();
    const std::int64_t p = fd.p();
    const int d = f.degree();
    if (d == 1) return {f};

    // Frobenius-minus-identity on F_p[x]/(f), columns = x^{ip} mod f
    Poly xp = pow_mod(Poly::x(fd), BigInt(p), f);
    Tableau q(fd, d, d);
    Poly col = Poly::one(fd);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) q.at(i, j) = col.coeff(i);
        q.at(j, j) = q.at(j, j) - Scalar::one(fd);
        col = (col * xp) % f;
    }
    std::vector<Vec> null_space = kernel_of(q, fd);
    const std::size_t r = null_space.size();  // number of irreducible factors
    std::vector<Poly> factors{f};
    if (r == 1) return factors;

    for (const Vec& v : null_space) {
        if (factors.size() == r) break;
        Poly vp(fd, v);
        if (vp.degree() < 1) continue;  // the constant kernel vector splits nothing
        std::vector<Poly> next;
        for (const Poly& g : factors) {
            if (g.degree() == 1) { next.push_back(g); continue; }
            std::vector<Poly> pieces;
            Poly rest = g;
            for (std::int64_t s = 0; s < p && rest.degree() >= 1; ++s) {
                Poly h = poly_gcd(rest, vp - Poly::constant(fd, Scalar(fd, s)));
                if (h.degree() >= 1) {
                    pieces.push_back(h);
                    rest = (rest / h).monic();
                }
            }
            if (rest.degree() >= 1) pieces.push_back(rest);
            for (auto& piece : pieces) next.push_back(piece);
        }
        factors = std::move(next);
    }
    return factors;
}

std::vector<Poly> zassenhaus(const Poly& f, int degree_cap);  // rational path

}  // namespace detail

/// Irreducible factorization. F_p: squarefree decomposition + Berlekamp.
/// Q: squarefree decomposition + Zassenhaus (Hensel lifting, exhaustive
/// recombination, degree capped).
inline Factorization factor(const Poly& f, int rational_degree_cap = kRationalDegreeCap) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() < 1)
        throw std::invalid_argument("factor() needs degree >= 1");
    Factorization result{.leading = f.leading(), .factors = {}};
    for (const auto& [part, mult] : squarefree_decomposition(f).parts) {
        std::vector<Poly> irreducibles =
            f.field().is_prime_field() ? detail::berlekamp(part)
                                       : detail::zassenhaus(part, rational_degree_cap);
        for (const Poly& g : irreducibles) result.factors.emplace_back(g, mult);
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return result;
}

/// The polynomial u with u = 1 mod f1 and u = 0 mod p/f1, deg u < deg p.
/// u(A) is then a spectral projection commuting with A.
inline Poly crt_idempotent_poly(const Poly& p, const Poly& f1) {
    if (p.is_zero() || f1.is_zero()) throw ZeroPolynomial();
    if (!p.is_monic() || !f1.is_monic())
        throw std::invalid_argument("crt_idempotent_poly needs monic inputs");
    if (f1.degree() < 1 || f1.degree() >= p.degree()) throw NotADivisor();
    auto [q, r] = divmod(p, f1);
    if (!r.is_zero()) throw NotADivisor();
    Poly f2 = q.monic();
    auto [g, s, t] = poly_ext_gcd(f1, f2);
    if (g != Poly::one(p.field())) throw NotCoprime();
    // t*f2 = 1 - s*f1, hence 1 mod f1 and 0 mod f2
    return (t * f2) % p;
}

}  // namespace cg

#include "commgraph/factor_rational.hpp"
