#pragma once

#include <optional>
#include <variant>

#include "commgraph/factor.hpp"
#include "commgraph/frobenius.hpp"

namespace cg {

/// A commuting witness for a non-scalar matrix: a nontrivial idempotent
/// or a nonzero nilpotent of index 2, plus the data that drove the
/// branch decision.
struct Witness {
    enum class Kind { Idempotent, Nilpotent };
    enum class Branch { DerogatoryRCF, RadicalNilpotent, CrtIdempotent };

    Kind kind;
    Branch branch;
    Mat matrix;
    Poly minimal_poly;
    /// RadicalNilpotent: the squarefree part g with g(A) nilpotent.
    /// CrtIdempotent: the divisor f_1 the projection was built on.
    std::optional<Poly> branch_poly;
};

/// Minimal polynomial irreducible of degree n: no witness exists along
/// any branch. A meaningful outcome, not an error.
struct WitnessFailure {
    Poly minimal_poly;
};

using WitnessResult = std::variant<Witness, WitnessFailure>;

inline const char* to_string(Witness::Kind k) {
    return k == Witness::Kind::Idempotent ? "idempotent" : "nilpotent";
}
inline const char* to_string(Witness::Branch b) {
    switch (b) {
        case Witness::Branch::DerogatoryRCF: return "derogatory_rcf";
        case Witness::Branch::RadicalNilpotent: return "radical_nilpotent";
        default: return "crt_idempotent";
    }
}

/// N^(a-1) for a nilpotent N of index a: nonzero, squares to zero, and
/// commutes with everything N commutes with.
inline Mat reduce_nilpotent_index(const Mat& nmat) {
    if (nmat.is_zero()) throw ZeroInput();
    Mat prev = nmat;
    Mat cur = nmat;
    for (int i = 1; i <= nmat.n(); ++i) {
        if (cur.is_zero()) return prev;
        prev = cur;
        cur = mat_mul(cur, nmat);
    }
    if (cur.is_zero()) return prev;
    throw NotNilpotent();
}

/// Branches in proof order: derogatory matrices get a block idempotent
/// from the rational canonical form; a repeated factor in the minimal
/// polynomial gives a nilpotent from its squarefree part; a squarefree
/// minimal polynomial with several irreducible factors gives a CRT
/// projection; an irreducible minimal polynomial of degree n admits no
/// witness.
inline WitnessResult find_witness(const Mat& a) {
    const int n = a.n();
    if (n < 3) throw DimensionTooSmall(n);
    if (is_central(a)) throw CentralInput();

    Poly p = minimal_polynomial(a);

    if (p.degree() < n) {
        Mat e = block_idempotent(frobenius_form(a));
        return Witness{Witness::Kind::Idempotent, Witness::Branch::DerogatoryRCF, e, p,
                       std::nullopt};
    }

    Poly g = squarefree_part(p);
    if (g.degree() < p.degree()) {
        Mat n0 = g.eval(a);
        return Witness{Witness::Kind::Nilpotent, Witness::Branch::RadicalNilpotent,
                       reduce_nilpotent_index(n0), p, g};
    }

    Factorization fac = factor(p);
    if (fac.factors.size() >= 2) {
        const Poly& f1 = fac.factors[0].first;
        Poly u = crt_idempotent_poly(p, f1);
        return Witness{Witness::Kind::Idempotent, Witness::Branch::CrtIdempotent,
                       u.eval(a), p, f1};
    }

    return WitnessFailure{p};
}

}  // namespace cg
