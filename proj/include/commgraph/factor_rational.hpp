#pragma once

// Rational factorization: monicize over the integers, reduce mod a good
// prime, Hensel-lift to a Mignotte-bound modulus, recombine factor
// subsets exhaustively. Included from factor.hpp; not standalone.

#include <numeric>

namespace cg::detail {

using ZPoly = std::vector<BigInt>;  // low-to-high integer coefficients

inline void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline int z_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline BigInt mod_pos(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline ZPoly z_mod(const ZPoly& a, const BigInt& m) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod_pos(a[i], m);
    z_trim(r);
    return r;
}

inline ZPoly z_add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
        r[i] = mod_pos(r[i], m);
    }
    z_trim(r);
    return r;
}

inline ZPoly z_sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
        r[i] = mod_pos(r[i], m);
    }
    z_trim(r);
    return r;
}

inline ZPoly z_mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return z_mod(r, m);
}

/// Division by a monic divisor, coefficients mod m.
inline std::pair<ZPoly, ZPoly> z_divmod_monic(const ZPoly& a, const ZPoly& b,
                                              const BigInt& m) {
    ZPoly r = z_mod(a, m);
    ZPoly q;
    const int db = z_deg(b);
    if (z_deg(r) >= db) q.assign(static_cast<std::size_t>(z_deg(r) - db) + 1, 0);
    while (z_deg(r) >= db) {
        int shift = z_deg(r) - db;
        BigInt c = r.back();
        q[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= db; ++i) {
            auto idx = static_cast<std::size_t>(shift + i);
            r[idx] = mod_pos(r[idx] - c * b[static_cast<std::size_t>(i)], m);
        }
        z_trim(r);
    }
    z_trim(q);
    return {q, r};
}

inline ZPoly to_zpoly(const Poly& f) {
    ZPoly r;
    for (int i = 0; i <= f.degree(); ++i) r.push_back(BigInt(f.coeff(i).residue()));
    z_trim(r);
    return r;
}

inline Poly to_fp_poly(const ZPoly& a, const FieldDescriptor& fp) {
    std::vector<Scalar> c;
    for (const auto& x : a)
        c.emplace_back(fp, static_cast<std::int64_t>(mod_pos(x, fp.p())));
    return Poly(fp, std::move(c));
}

/// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m),
/// f, g, h monic, to the same congruences mod m^2.
inline void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t,
                        const BigInt& m) {
    const BigInt m2 = m * m;
    ZPoly e = z_sub(z_mod(f, m2), z_mul(g, h, m2), m2);
    auto [q, r] = z_divmod_monic(z_mul(s, e, m2), h, m2);
    ZPoly g1 = z_add(g, z_add(z_mul(t, e, m2), z_mul(q, g, m2), m2), m2);
    ZPoly h1 = z_add(h, r, m2);
    ZPoly one{BigInt(1)};
    ZPoly b = z_sub(z_add(z_mul(s, g1, m2), z_mul(t, h1, m2), m2), one, m2);
    auto [c, d] = z_divmod_monic(z_mul(s, b, m2), h1, m2);
    s = z_sub(s, d, m2);
    t = z_sub(t, z_add(z_mul(t, b, m2), z_mul(c, g1, m2), m2), m2);
    g = g1;
    h = h1;
}

/// Exact division test / quotient over Z for polynomials with integer
/// coefficients (divisor need not be monic).
inline bool z_exact_divmod(const ZPoly& f, const ZPoly& g, ZPoly* quotient) {
    if (g.empty()) return false;
    std::vector<BigRational> r(f.begin(), f.end());
    const int dg = z_deg(g);
    std::vector<BigRational> q;
    if (static_cast<int>(r.size()) - 1 >= dg)
        q.assign(r.size() - g.size() + 1, BigRational(0));
    while (static_cast<int>(r.size()) - 1 >= dg) {
        BigRational c = r.back() / g.back();
        int shift = static_cast<int>(r.size()) - 1 - dg;
        q[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= dg; ++i)
            r[static_cast<std::size_t>(shift + i)] -= c * g[static_cast<std::size_t>(i)];
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<int>(r.size()) - 1 - dg >= shift) return false;  // no progress
    }
    if (!r.empty()) return false;
    if (quotient) {
        quotient->clear();
        for (const auto& c : q) {
            if (boost::multiprecision::denominator(c) != 1) return false;
            quotient->push_back(boost::multiprecision::numerator(c));
        }
        z_trim(*quotient);
    }
    return true;
}

/// Factor a monic squarefree rational polynomial into monic irreducibles.
inline std::vector<Poly> zassenhaus(const Poly& f, int degree_cap) {
    const FieldDescriptor& qf = f.field();
    const int d = f.degree();
    if (d == 1) return {f};
    if (d > degree_cap) throw DegreeLimitExceeded(d, degree_cap);

    // clear denominators, then monicize: G(x) = lead^(d-1) * F(x/lead)
    // is monic with integer coefficients; factors map back by x -> lead*x.
    BigInt denom_lcm = 1;
    for (int i = 0; i <= d; ++i)
        denom_lcm = boost::multiprecision::lcm(
            denom_lcm, boost::multiprecision::denominator(f.coeff(i).rational()));
    ZPoly raw;
    for (int i = 0; i <= d; ++i) {
        BigRational scaled = f.coeff(i).rational() * denom_lcm;
        raw.push_back(boost::multiprecision::numerator(scaled));
    }
    BigInt lead = raw.back();
    ZPoly work(raw.size());
    {
        // coefficient of x^i picks up lead^(d-1-i)
        BigInt scale = 1;
        for (int i = d; i >= 0; --i) {
            work[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)] * scale;
            if (i > 0) scale *= lead;
        }
        // strip content to keep coefficients small; G stays monic only if
        // content is 1, so divide by gcd of non-leading part? content of a
        // monic polynomial is 1 already.
    }

    auto unscale = [&](const ZPoly& g) {
        // monic integer factor g of G -> monic rational factor of f
        std::vector<Scalar> c;
        BigInt scale = 1;
        for (int i = z_deg(g); i >= 0; --i) {
            c.push_back(Scalar(qf, BigRational(g[static_cast<std::size_t>(i)], scale)));
            scale *= lead;
        }
        std::reverse(c.begin(), c.end());
        return Poly(qf, std::move(c)).monic();
    };

    // good prime: smallest p >= 5 with G squarefree mod p
    std::int64_t p = 0;
    for (std::int64_t cand = 5;; ++cand) {
        if (!FieldDescriptor::is_prime(cand)) continue;
        FieldDescriptor fpc = FieldDescriptor::prime_field(cand);
        Poly gbar = to_fp_poly(work, fpc);
        Poly der = gbar.derivative();
        if (der.is_zero() || poly_gcd(gbar, der).degree() != 0) continue;
        p = cand;
        break;
    }
    FieldDescriptor fp = FieldDescriptor::prime_field(p);

    std::vector<Poly> modular = berlekamp(to_fp_poly(work, fp));
    std::sort(modular.begin(), modular.end(), poly_less);
    if (modular.size() == 1) return {unscale(work)};

    // Mignotte-style bound on coefficients of any monic factor of G
    BigInt norm_sq = 0;
    for (const auto& c : work) norm_sq += c * c;
    BigInt bound = 2 * (boost::multiprecision::sqrt(norm_sq) + 1) * (BigInt(1) << d) + 1;

    // lift the modular factors one at a time: peel h_i off the cofactor
    std::vector<ZPoly> lifted;
    BigInt modulus = 1;
    {
        ZPoly cofactor = work;
        for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
            ZPoly h = to_zpoly(modular[i]);
            ZPoly g = z_divmod_monic(z_mod(cofactor, BigInt(p)), h, BigInt(p)).first;
            auto [gcd1, s_fp, t_fp] = poly_ext_gcd(to_fp_poly(g, fp), modular[i]);
            (void)gcd1;  // 1: distinct factors of a squarefree polynomial
            ZPoly s = to_zpoly(s_fp), t = to_zpoly(t_fp);
            modulus = p;
            while (modulus < bound) {
                hensel_step(cofactor, g, h, s, t, modulus);
                modulus *= modulus;
            }
            lifted.push_back(h);
            cofactor = g;
        }
        lifted.push_back(z_mod(cofactor, modulus));
    }

    auto symmetric = [&](ZPoly a) {
        for (auto& c : a) {
            c = mod_pos(c, modulus);
            if (2 * c > modulus) c -= modulus;
        }
        z_trim(a);
        return a;
    };

    // exhaustive recombination, subsets by cardinality then index order
    std::vector<Poly> result;
    std::vector<std::size_t> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), std::size_t{0});
    ZPoly remaining = work;

    std::size_t size = 1;
    while (2 * size <= alive.size()) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        while (true) {
            ZPoly cand{BigInt(1)};
            for (std::size_t i : idx) cand = z_mul(cand, lifted[alive[i]], modulus);
            cand = symmetric(cand);
            ZPoly quotient;
            if (!cand.empty() && z_exact_divmod(remaining, cand, &quotient)) {
                result.push_back(unscale(cand));
                remaining = quotient;
                std::vector<std::size_t> next_alive;
                for (std::size_t i = 0; i < alive.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next_alive.push_back(alive[i]);
                alive = std::move(next_alive);
                found = true;
                break;
            }
            int pos = static_cast<int>(size) - 1;
            while (pos >= 0 &&
                   idx[static_cast<std::size_t>(pos)] ==
                       alive.size() - size + static_cast<std::size_t>(pos))
                --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (z_deg(remaining) >= 1) result.push_back(unscale(remaining));
    std::sort(result.begin(), result.end(), poly_less);
    return result;
}

}  // namespace cg::detail
