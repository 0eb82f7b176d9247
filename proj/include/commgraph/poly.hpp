#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "commgraph/matrix.hpp"

namespace cg {

/// Dense univariate polynomial, coefficients low-to-high, leading
/// coefficient nonzero (empty vector = zero polynomial).
class Poly {
public:
    explicit Poly(const FieldDescriptor& f) : field_(f) {}
    Poly(const FieldDescriptor& f, std::vector<Scalar> coeffs)
        : field_(f), coeffs_(std::move(coeffs)) {
        normalize();
    }
    static Poly from_ints(const FieldDescriptor& f,
                          std::initializer_list<std::int64_t> low_to_high) {
        std::vector<Scalar> c;
        for (auto v : low_to_high) c.emplace_back(f, v);
        return Poly(f, std::move(c));
    }
    static Poly zero(const FieldDescriptor& f) { return Poly(f); }
    static Poly one(const FieldDescriptor& f) { return constant(f, Scalar::one(f)); }
    static Poly constant(const FieldDescriptor& f, const Scalar& c) {
        return Poly(f, {c});
    }
    static Poly x(const FieldDescriptor& f) {
        return Poly(f, {Scalar::zero(f), Scalar::one(f)});
    }
    /// x^k
    static Poly monomial(const FieldDescriptor& f, int k, const Scalar& c) {
        std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar::zero(f));
        v.back() = c;
        return Poly(f, std::move(v));
    }

    const FieldDescriptor& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
        return coeffs_[static_cast<std::size_t>(i)];
    }
    Scalar leading() const {
        return is_zero() ? Scalar::zero(field_) : coeffs_.back();
    }
    bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return Scalar(leading().inverse()) * *this;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check(b);
        std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                              Scalar::zero(a.field_));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(a.field_, std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check(b);
        std::vector<Scalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                              Scalar::zero(a.field_));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Poly(a.field_, std::move(c));
    }
    friend Poly operator*(const Scalar& s, const Poly& a) {
        std::vector<Scalar> c(a.coeffs_);
        for (auto& x : c) x = s * x;
        return Poly(a.field_, std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return zero(a.field_);
        std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                              Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(a.field_, std::move(c));
    }
    Poly operator-() const {
        std::vector<Scalar> c(coeffs_);
        for (auto& x : c) x = -x;
        return Poly(field_, std::move(c));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        a.check(b);
        if (b.is_zero()) throw ZeroPolynomial();
        Poly r = a;
        Poly q = zero(a.field_);
        Scalar lead_inv = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            Scalar c = r.leading() * lead_inv;
            Poly term = monomial(a.field_, shift, c);
            q = q + term;
            r = r - term * b;
        }
        return {q, r};
    }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    /// True iff b divides a exactly.
    friend bool divides(const Poly& b, const Poly& a) {
        if (b.is_zero()) return a.is_zero();
        return divmod(a, b).second.is_zero();
    }

    /// Monic gcd; gcd(f, 0) = monic(f).
    friend Poly poly_gcd(const Poly& a, const Poly& b) {
        a.check(b);
        Poly f = a, g = b;
        while (!g.is_zero()) {
            Poly r = f % g;
            f = g;
            g = r;
        }
        return f.monic();
    }

    /// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
    friend std::tuple<Poly, Poly, Poly> poly_ext_gcd(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r0 = a, r1 = b;
        Poly s0 = one(a.field_), s1 = zero(a.field_);
        Poly t0 = zero(a.field_), t1 = one(a.field_);
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = r1; r1 = r;
            Poly s2 = s0 - q * s1; s0 = s1; s1 = s2;
            Poly t2 = t0 - q * t1; t0 = t1; t1 = t2;
        }
        if (r0.is_zero()) return {r0, s0, t0};
        Scalar inv = r0.leading().inverse();
        return {inv * r0, inv * s0, inv * t0};
    }

    Poly derivative() const {
        if (degree() < 1) return zero(field_);
        std::vector<Scalar> c(coeffs_.size() - 1, Scalar::zero(field_));
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            c[i - 1] = Scalar(field_, static_cast<std::int64_t>(i)) * coeffs_[i];
        return Poly(field_, std::move(c));
    }

    Scalar eval(const Scalar& x) const {
        Scalar r = Scalar::zero(field_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Mat eval(const Mat& a) const {
        Mat r = Mat::zero(a.field(), a.n());
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            r = mat_mul(r, a) + Mat::scalar(a.field(), a.n(), *it);
        return r;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Scalar c = coeff(i);
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (i == 0 || !c.is_one()) s += c.to_string();
            if (i > 0) {
                if (!c.is_one()) s += "*";
                s += "x";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    void check(const Poly& o) const {
        if (field_ != o.field_) throw FieldMismatch();
    }

    FieldDescriptor field_;
    std::vector<Scalar> coeffs_;
};

}  // namespace cg
