#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <string>

#include "commgraph/errors.hpp"

namespace cg {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Coefficient field: a prime field F_p (p < 2^31) or the rationals.
class FieldDescriptor {
public:
    enum class Kind { PrimeField, Rationals };

    static FieldDescriptor prime_field(std::int64_t p) {
        if (!is_prime(p)) throw NotPrime(p);
        return FieldDescriptor(Kind::PrimeField, p);
    }
    static FieldDescriptor rationals() { return FieldDescriptor(Kind::Rationals, 0); }

    Kind kind() const { return kind_; }
    std::int64_t p() const { return p_; }
    bool is_prime_field() const { return kind_ == Kind::PrimeField; }

    // Characteristic: p for F_p, 0 for Q.
    std::int64_t characteristic() const { return is_prime_field() ? p_ : 0; }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) {
        return !(a == b);
    }

    std::string to_string() const {
        return is_prime_field() ? "F_" + std::to_string(p_) : "Q";
    }

    static bool is_prime(std::int64_t p) {
        if (p < 2 || p >= (std::int64_t{1} << 31)) return false;
        if (p % 2 == 0) return p == 2;
        for (std::int64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

private:
    FieldDescriptor(Kind k, std::int64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::int64_t p_;
};

/// Field element in canonical form: residue in [0, p) for F_p, reduced
/// fraction for Q. Equality is structural.
class Scalar {
public:
    Scalar() : field_(FieldDescriptor::rationals()) {}

    Scalar(const FieldDescriptor& f, std::int64_t v) : field_(f) {
        if (f.is_prime_field()) {
            res_ = v % f.p();
            if (res_ < 0) res_ += f.p();
        } else {
            rat_ = v;
        }
    }
    Scalar(const FieldDescriptor& f, const BigRational& v) : field_(f) {
        if (f.is_prime_field()) {
            // reduce a/b mod p; b must be invertible
            BigInt num = boost::multiprecision::numerator(v) % f.p();
            BigInt den = boost::multiprecision::denominator(v) % f.p();
            std::int64_t n = static_cast<std::int64_t>(num);
            std::int64_t d = static_cast<std::int64_t>(den);
            if (n < 0) n += f.p();
            if (d == 0) throw std::invalid_argument("denominator divisible by p");
            res_ = mulmod(n, inv_mod(d, f.p()), f.p());
        } else {
            rat_ = v;
        }
    }

    static Scalar zero(const FieldDescriptor& f) { return Scalar(f, 0); }
    static Scalar one(const FieldDescriptor& f) { return Scalar(f, 1); }

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const {
        return field_.is_prime_field() ? res_ == 0 : rat_.is_zero();
    }
    bool is_one() const {
        return field_.is_prime_field() ? res_ == 1 : rat_ == 1;
    }

    /// F_p residue in [0, p).
    std::int64_t residue() const { return res_; }
    /// Q value.
    const BigRational& rational() const { return rat_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check(b);
        Scalar r(a);
        if (a.field_.is_prime_field()) {
            r.res_ = a.res_ + b.res_;
            if (r.res_ >= a.field_.p()) r.res_ -= a.field_.p();
        } else {
            r.rat_ = a.rat_ + b.rat_;
        }
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        a.check(b);
        Scalar r(a);
        if (a.field_.is_prime_field()) {
            r.res_ = a.res_ - b.res_;
            if (r.res_ < 0) r.res_ += a.field_.p();
        } else {
            r.rat_ = a.rat_ - b.rat_;
        }
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check(b);
        Scalar r(a);
        if (a.field_.is_prime_field())
            r.res_ = mulmod(a.res_, b.res_, a.field_.p());
        else
            r.rat_ = a.rat_ * b.rat_;
        return r;
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar operator-() const {
        Scalar r(*this);
        if (field_.is_prime_field()) {
            if (res_ != 0) r.res_ = field_.p() - res_;
        } else {
            r.rat_ = -rat_;
        }
        return r;
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Scalar r(*this);
        if (field_.is_prime_field())
            r.res_ = inv_mod(res_, field_.p());
        else
            r.rat_ = 1 / rat_;
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.field_ == b.field_ &&
               (a.field_.is_prime_field() ? a.res_ == b.res_ : a.rat_ == b.rat_);
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const {
        if (field_.is_prime_field()) return std::to_string(res_);
        return rat_.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        return os << s.to_string();
    }

private:
    void check(const Scalar& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }
    static std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
        // p < 2^31 so the product fits in 63 bits
        return (a * b) % p;
    }
    static std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
        std::int64_t t = 0, newt = 1, r = p, newr = a % p;
        if (newr < 0) newr += p;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        if (r != 1) throw std::domain_error("element not invertible mod p");
        return t < 0 ? t + p : t;
    }

    FieldDescriptor field_;
    std::int64_t res_ = 0;
    BigRational rat_;
};

}  // namespace cg
