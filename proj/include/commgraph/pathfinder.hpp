#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "commgraph/witness.hpp"

namespace cg {

/// Deterministic basis of {X : AX = XA}, echelon order.
struct CentralizerBasis {
    Mat source;
    std::vector<Mat> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
};

namespace detail {

/// Rows for the Sylvester constraint AX - XA = 0, appended to t starting
/// at row_off. Unknown X is vectorized row-major.
inline void sylvester_rows(Tableau& t, int row_off, const Mat& a) {
    const int n = a.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int row = row_off + i * n + j;
            for (int k = 0; k < n; ++k) {
                t.at(row, k * n + j) = t.at(row, k * n + j) + a.at(i, k);
                t.at(row, i * n + k) = t.at(row, i * n + k) - a.at(k, j);
            }
        }
}

inline std::vector<Mat> kernel_to_mats(const std::vector<Vec>& kernel,
                                       const FieldDescriptor& f, int n) {
    std::vector<Mat> mats;
    for (const Vec& v : kernel) {
        Mat m(f, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<std::size_t>(i * n + j)];
        mats.push_back(std::move(m));
    }
    return mats;
}

}  // namespace detail

inline CentralizerBasis centralizer_basis(const Mat& a) {
    const int n = a.n();
    Tableau t(a.field(), n * n, n * n);
    detail::sylvester_rows(t, 0, a);
    return {a, detail::kernel_to_mats(kernel_of(t, a.field()), a.field(), n)};
}

/// Basis of {X : AX = XA and BX = XB}; always contains I in its span.
inline CentralizerBasis joint_commutant(const Mat& a, const Mat& b) {
    if (a.field() != b.field()) throw FieldMismatch();
    if (a.n() != b.n()) throw DimensionMismatch();
    const int n = a.n();
    Tableau t(a.field(), 2 * n * n, n * n);
    detail::sylvester_rows(t, 0, a);
    detail::sylvester_rows(t, n * n, b);
    return {a, detail::kernel_to_mats(kernel_of(t, a.field()), a.field(), n)};
}

/// First non-central element obtainable from the basis, scanning in
/// order and patching scalar elements with their successor; candidates
/// in `exclude` are skipped by adding identity multiples.
inline std::optional<Mat> pick_noncentral(const CentralizerBasis& cb,
                                          const std::vector<Mat>& exclude = {}) {
    auto excluded = [&](const Mat& m) {
        for (const Mat& e : exclude)
            if (m == e) return true;
        return false;
    };
    const FieldDescriptor& f = cb.source.field();
    const int n = cb.source.n();
    for (std::size_t i = 0; i < cb.basis.size(); ++i) {
        Mat cand = cb.basis[i];
        if (is_central(cand) && i + 1 < cb.basis.size()) cand = cand + cb.basis[i + 1];
        if (is_central(cand)) continue;
        if (!excluded(cand)) return cand;
        // shift by identity multiples, staying non-central
        std::int64_t limit = f.is_prime_field()
                                 ? f.p()
                                 : static_cast<std::int64_t>(exclude.size()) + 2;
        for (std::int64_t lambda = 1; lambda < limit; ++lambda) {
            Mat shifted = cand + Mat::scalar(f, n, Scalar(f, lambda));
            if (!excluded(shifted)) return shifted;
        }
    }
    return std::nullopt;
}

struct CommutingPath {
    enum class Role { Endpoint, Witness, Midpoint };
    struct Vertex {
        Mat matrix;
        Role role;
        std::optional<Witness::Branch> branch;  // set for Role::Witness
    };
    std::vector<Vertex> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct PathFailure {
    enum class Reason { EndpointWitnessFailure, NoMidpoint };
    Reason reason;
    bool endpoint_a_failed = false;
    bool endpoint_b_failed = false;
};

using PathResult = std::variant<CommutingPath, PathFailure>;

/// Re-validates every path invariant from scratch, using only matrix
/// products and the centrality test. Diagnostics name each violation.
inline bool verify_path(const CommutingPath& p, std::vector<std::string>* diagnostics = nullptr) {
    std::vector<std::string> local;
    auto fail = [&](std::string msg) { local.push_back(std::move(msg)); };
    if (p.vertices.size() < 2) fail("path has fewer than two vertices");
    if (p.length() > 4) fail("path length exceeds four");
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (is_central(p.vertices[i].matrix))
            fail("central vertex at index " + std::to_string(i));
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        const Mat& x = p.vertices[i].matrix;
        const Mat& y = p.vertices[i + 1].matrix;
        if (x == y) fail("repeated consecutive vertex at index " + std::to_string(i));
        if (mat_mul(x, y) != mat_mul(y, x))
            fail("non-commuting edge " + std::to_string(i) + "-" + std::to_string(i + 1));
    }
    if (diagnostics) *diagnostics = local;
    return local.empty();
}

/// Assemble a commuting path of length <= 4: direct edge, joint-commutant
/// midpoint, or witness-midpoint-witness, compressed greedily.
inline PathResult find_path(const Mat& a, const Mat& b) {
    if (a.field() != b.field()) throw FieldMismatch();
    if (a.n() != b.n()) throw DimensionMismatch();
    if (a.n() < 3) throw DimensionTooSmall(a.n());
    if (is_central(a) || is_central(b)) throw CentralInput();
    if (a == b) throw IdenticalInputs();

    using Role = CommutingPath::Role;
    auto endpoint = [](const Mat& m) {
        return CommutingPath::Vertex{m, Role::Endpoint, std::nullopt};
    };

    if (commutes(a, b)) return CommutingPath{{endpoint(a), endpoint(b)}};

    if (auto m = pick_noncentral(joint_commutant(a, b), {a, b}))
        return CommutingPath{{endpoint(a),
                              CommutingPath::Vertex{*m, Role::Midpoint, std::nullopt},
                              endpoint(b)}};

    WitnessResult ra = find_witness(a);
    WitnessResult rb = find_witness(b);
    const Witness* wa = std::get_if<Witness>(&ra);
    const Witness* wb = std::get_if<Witness>(&rb);
    if (!wa || !wb)
        return PathFailure{PathFailure::Reason::EndpointWitnessFailure, wa == nullptr,
                           wb == nullptr};

    auto witness_vertex = [](const Witness& w) {
        return CommutingPath::Vertex{w.matrix, Role::Witness, w.branch};
    };

    std::vector<CommutingPath::Vertex> verts;
    if (commutes(wa->matrix, wb->matrix)) {
        // midpoint unnecessary
        verts = {endpoint(a), witness_vertex(*wa), witness_vertex(*wb), endpoint(b)};
    } else {
        auto m = pick_noncentral(joint_commutant(wa->matrix, wb->matrix));
        if (!m) return PathFailure{PathFailure::Reason::NoMidpoint};
        CommutingPath::Vertex mid{*m, Role::Midpoint, std::nullopt};
        verts = {endpoint(a), witness_vertex(*wa), mid, witness_vertex(*wb), endpoint(b)};
        // greedy local compression
        if (commutes(a, *m)) verts.erase(verts.begin() + 1);
        if (commutes(*m, b)) verts.erase(verts.end() - 2);
    }
    // drop consecutive duplicates
    std::vector<CommutingPath::Vertex> out;
    for (auto& v : verts)
        if (out.empty() || out.back().matrix != v.matrix) out.push_back(std::move(v));
    return CommutingPath{std::move(out)};
}

}  // namespace cg
