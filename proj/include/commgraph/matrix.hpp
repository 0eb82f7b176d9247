#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "commgraph/field.hpp"

namespace cg {

/// Hard cap on matrix dimension for the exact dense routines.
inline constexpr int kMaxDimension = 64;

/// Dense n x n matrix with exact entries over a single field.
class Mat {
public:
    Mat(const FieldDescriptor& f, int n)
        : field_(f), n_(n), entries_(static_cast<std::size_t>(n) * n, Scalar::zero(f)) {
        if (n < 1) throw DimensionMismatch();
        if (n > kMaxDimension) throw DimensionTooLarge(n);
    }

    static Mat zero(const FieldDescriptor& f, int n) { return Mat(f, n); }
    static Mat identity(const FieldDescriptor& f, int n) {
        Mat m(f, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }
    static Mat scalar(const FieldDescriptor& f, int n, const Scalar& lambda) {
        Mat m(f, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = lambda;
        return m;
    }
    /// Matrix unit E_ij (row i, column j), zero-based.
    static Mat unit(const FieldDescriptor& f, int n, int i, int j) {
        Mat m(f, n);
        m.at(i, j) = Scalar::one(f);
        return m;
    }
    /// Build from integer entries, row-major.
    static Mat from_ints(const FieldDescriptor& f, int n,
                         std::initializer_list<std::int64_t> vals) {
        Mat m(f, n);
        auto it = vals.begin();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Scalar(f, *it++);
        return m;
    }
    static Mat diag(const FieldDescriptor& f, std::initializer_list<std::int64_t> d) {
        Mat m(f, static_cast<int>(d.size()));
        int i = 0;
        for (auto v : d) { m.at(i, i) = Scalar(f, v); ++i; }
        return m;
    }

    const FieldDescriptor& field() const { return field_; }
    int n() const { return n_; }

    Scalar& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const Scalar& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.check(b);
        Mat r(a);
        for (std::size_t k = 0; k < r.entries_.size(); ++k)
            r.entries_[k] = a.entries_[k] + b.entries_[k];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        a.check(b);
        Mat r(a);
        for (std::size_t k = 0; k < r.entries_.size(); ++k)
            r.entries_[k] = a.entries_[k] - b.entries_[k];
        return r;
    }
    friend Mat operator*(const Scalar& c, const Mat& a) {
        Mat r(a);
        for (auto& e : r.entries_) e = c * e;
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    friend Mat mat_mul(const Mat& a, const Mat& b) {
        a.check(b);
        const int n = a.n_;
        Mat r(a.field_, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Scalar& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < n; ++j)
                    r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        return r;
    }

    friend bool commutes(const Mat& a, const Mat& b) {
        return mat_mul(a, b) == mat_mul(b, a);
    }

    /// True iff the matrix is a scalar multiple of the identity.
    friend bool is_central(const Mat& a) {
        const Scalar& lambda = a.at(0, 0);
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j) {
                if (i == j) {
                    if (a.at(i, j) != lambda) return false;
                } else if (!a.at(i, j).is_zero()) {
                    return false;
                }
            }
        return true;
    }

    Mat pow(unsigned e) const {
        Mat base(*this);
        Mat r = identity(field_, n_);
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < n_; ++i) {
            s += (i ? "; " : "");
            for (int j = 0; j < n_; ++j) s += (j ? "," : "") + at(i, j).to_string();
        }
        return s + "]";
    }

private:
    void check(const Mat& o) const {
        if (field_ != o.field_) throw FieldMismatch();
        if (n_ != o.n_) throw DimensionMismatch();
    }

    FieldDescriptor field_;
    int n_;
    std::vector<Scalar> entries_;
};

}  // namespace cg
