#pragma once

#include <random>

#include "commgraph/matrix.hpp"
#include "commgraph/poly.hpp"

namespace cgtest {

using namespace cg;

inline Scalar random_scalar(const FieldDescriptor& f, std::mt19937& rng) {
    if (f.is_prime_field()) {
        std::uniform_int_distribution<std::int64_t> d(0, f.p() - 1);
        return Scalar(f, d(rng));
    }
    std::uniform_int_distribution<std::int64_t> num(-10, 10);
    std::uniform_int_distribution<std::int64_t> den(1, 7);
    return Scalar(f, BigRational(num(rng), den(rng)));
}

inline Mat random_mat(const FieldDescriptor& f, int n, std::mt19937& rng) {
    Mat m(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_scalar(f, rng);
    return m;
}

/// Integer-entry random matrix, entries in [lo, hi].
inline Mat random_int_mat(const FieldDescriptor& f, int n, std::int64_t lo,
                          std::int64_t hi, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    Mat m(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Scalar(f, d(rng));
    return m;
}

inline Poly random_monic_poly(const FieldDescriptor& f, int deg, std::mt19937& rng) {
    std::vector<Scalar> c;
    for (int i = 0; i < deg; ++i) c.push_back(random_scalar(f, rng));
    c.push_back(Scalar::one(f));
    return Poly(f, std::move(c));
}

}  // namespace cgtest
