#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>

#include "commgraph/frobenius.hpp"
#include "commgraph/witness.hpp"

namespace cg {

struct OracleOptions {
    std::uint64_t budget = std::uint64_t{1} << 26;  // max p^(n^2)
    /// Cache the full adjacency bitset (V^2 bits) instead of re-testing
    /// commutation during BFS.
    bool adjacency_cache = false;
    /// BFS once per similarity class instead of once per vertex
    /// (eccentricity is a conjugation invariant).
    bool similarity_classes = false;
};

/// Empirical summary of the commuting graph of M_n(F_p).
struct GraphReport {
    int n = 0;
    std::int64_t p = 0;
    std::uint64_t vertex_count = 0;
    bool connected = false;
    std::uint64_t component_count = 0;
    std::optional<int> diameter;  // nullopt = infinite (disconnected)
    /// eccentricity -> number of vertices; key -1 counts infinite ones
    std::map<int, std::uint64_t> eccentricity_histogram;
    std::uint64_t witness_failure_count = 0;
};

/// Matrices are encoded as integers in base p, entry-major: entry (i, j)
/// is digit i*n + j, with (0, 0) least significant.
inline std::uint64_t encode_matrix(const Mat& m) {
    const std::int64_t p = m.field().p();
    std::uint64_t code = 0;
    for (int i = m.n() - 1; i >= 0; --i)
        for (int j = m.n() - 1; j >= 0; --j)
            code = code * static_cast<std::uint64_t>(p) +
                   static_cast<std::uint64_t>(m.at(i, j).residue());
    return code;
}

inline Mat decode_matrix(const FieldDescriptor& f, int n, std::uint64_t code) {
    Mat m(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = Scalar(f, static_cast<std::int64_t>(code % f.p()));
            code /= static_cast<std::uint64_t>(f.p());
        }
    return m;
}

namespace detail {

/// Flat enumeration state shared by the oracle routines.
class OracleContext {
public:
    OracleContext(int n, std::int64_t p, const OracleOptions& opt)
        : n_(n), p_(p), field_(FieldDescriptor::prime_field(p)) {
        if (n < 1) throw DimensionMismatch();
        std::uint64_t total = 1;
        for (int k = 0; k < n * n; ++k) {
            if (total > opt.budget / static_cast<std::uint64_t>(p))
                throw BudgetExceeded(0, opt.budget);
            total *= static_cast<std::uint64_t>(p);
        }
        if (total > opt.budget) throw BudgetExceeded(total, opt.budget);
        total_ = total;
        // scalar codes lambda * sum(p^((n+1)i)), ascending in lambda
        std::uint64_t stride = 0, pw = 1;
        for (int i = 0; i < n; ++i) {
            stride += pw;
            for (int k = 0; k < n + 1 && i + 1 < n; ++k) pw *= static_cast<std::uint64_t>(p);
        }
        for (std::int64_t lambda = 0; lambda < p; ++lambda)
            scalar_codes_.push_back(static_cast<std::uint64_t>(lambda) * stride);
        vcount_ = total_ - static_cast<std::uint64_t>(p);

        entries_.resize(vcount_ * static_cast<std::size_t>(n * n));
        for (std::uint64_t idx = 0; idx < vcount_; ++idx) {
            std::uint64_t code = code_of(idx);
            std::uint32_t* e = entry_ptr(idx);
            for (int k = 0; k < n * n; ++k) {
                e[k] = static_cast<std::uint32_t>(code % static_cast<std::uint64_t>(p));
                code /= static_cast<std::uint64_t>(p);
            }
        }
    }

    int n() const { return n_; }
    std::int64_t p() const { return p_; }
    const FieldDescriptor& field() const { return field_; }
    std::uint64_t vertex_count() const { return vcount_; }

    bool is_scalar_code(std::uint64_t code) const {
        for (std::uint64_t s : scalar_codes_)
            if (s == code) return true;
        return false;
    }
    std::uint64_t code_of(std::uint64_t index) const {
        std::uint64_t code = index;
        for (std::uint64_t s : scalar_codes_)
            if (code >= s) ++code;
        return code;
    }
    std::uint64_t index_of(std::uint64_t code) const {
        std::uint64_t idx = code;
        for (std::uint64_t s : scalar_codes_)
            if (code > s) --idx;
        return idx;
    }

    const std::uint32_t* entry_ptr(std::uint64_t idx) const {
        return &entries_[idx * static_cast<std::size_t>(n_ * n_)];
    }
    std::uint32_t* entry_ptr(std::uint64_t idx) {
        return &entries_[idx * static_cast<std::size_t>(n_ * n_)];
    }

    bool commute(std::uint64_t u, std::uint64_t v) const {
        const std::uint32_t* a = entry_ptr(u);
        const std::uint32_t* b = entry_ptr(v);
        const int n = n_;
        const std::int64_t p = p_;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::int64_t ab = 0, ba = 0;
                for (int k = 0; k < n; ++k) {
                    ab += static_cast<std::int64_t>(a[i * n + k]) * b[k * n + j];
                    ba += static_cast<std::int64_t>(b[i * n + k]) * a[k * n + j];
                }
                if ((ab - ba) % p != 0) return false;
            }
        return true;
    }

    Mat matrix_of(std::uint64_t idx) const {
        Mat m(field_, n_);
        const std::uint32_t* e = entry_ptr(idx);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                m.at(i, j) = Scalar(field_, static_cast<std::int64_t>(e[i * n_ + j]));
        return m;
    }

private:
    int n_;
    std::int64_t p_;
    FieldDescriptor field_;
    std::uint64_t total_ = 0, vcount_ = 0;
    std::vector<std::uint64_t> scalar_codes_;
    std::vector<std::uint32_t> entries_;
};

/// BFS distances from one source; -1 marks unreachable.
inline std::vector<std::int32_t> bfs_from(const OracleContext& ctx, std::uint64_t src,
                                          const std::vector<std::uint64_t>* adjacency,
                                          std::size_t words) {
    const std::uint64_t v = ctx.vertex_count();
    std::vector<std::int32_t> dist(v, -1);
    dist[src] = 0;
    if (adjacency) {
        std::vector<std::uint64_t> frontier(words, 0), visited(words, 0), next(words, 0);
        frontier[src >> 6] |= std::uint64_t{1} << (src & 63);
        visited = frontier;
        std::int32_t level = 0;
        while (true) {
            std::fill(next.begin(), next.end(), 0);
            bool any = false;
            for (std::uint64_t u = 0; u < v; ++u) {
                if (!(frontier[u >> 6] >> (u & 63) & 1)) continue;
                const std::uint64_t* row = &(*adjacency)[u * words];
                for (std::size_t w = 0; w < words; ++w) next[w] |= row[w];
            }
            ++level;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] &= ~visited[w];
                if (next[w]) any = true;
            }
            if (!any) break;
            for (std::uint64_t u = 0; u < v; ++u)
                if (next[u >> 6] >> (u & 63) & 1) dist[u] = level;
            for (std::size_t w = 0; w < words; ++w) visited[w] |= next[w];
            frontier = next;
        }
    } else {
        std::queue<std::uint64_t> q;
        q.push(src);
        while (!q.empty()) {
            std::uint64_t u = q.front();
            q.pop();
            for (std::uint64_t w = 0; w < v; ++w) {
                if (dist[w] >= 0 || w == u) continue;
                if (ctx.commute(u, w)) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
    }
    return dist;
}

inline std::vector<std::uint64_t> build_adjacency(const OracleContext& ctx,
                                                  std::size_t& words) {
    const std::uint64_t v = ctx.vertex_count();
    words = static_cast<std::size_t>((v + 63) / 64);
    std::vector<std::uint64_t> adj(v * words, 0);
    for (std::uint64_t a = 0; a < v; ++a)
        for (std::uint64_t b = a + 1; b < v; ++b)
            if (ctx.commute(a, b)) {
                adj[a * words + (b >> 6)] |= std::uint64_t{1} << (b & 63);
                adj[b * words + (a >> 6)] |= std::uint64_t{1} << (a & 63);
            }
    return adj;
}

/// Similarity-class key: the invariant factor chain, a complete
/// conjugation invariant.
inline std::string similarity_key(const Mat& m) {
    std::string key;
    for (const Poly& f : frobenius_form(m).invariant_factors) key += f.to_string() + "|";
    return key;
}

}  // namespace detail

/// Input-iterator range over all non-scalar matrices of M_n(F_p) in
/// ascending code order.
class VertexRange {
public:
    VertexRange(int n, std::int64_t p, const OracleOptions& opt = {})
        : ctx_(std::make_shared<detail::OracleContext>(n, p, opt)) {}

    class iterator {
    public:
        using value_type = Mat;
        using difference_type = std::ptrdiff_t;

        iterator(std::shared_ptr<detail::OracleContext> ctx, std::uint64_t idx)
            : ctx_(std::move(ctx)), idx_(idx) {}
        Mat operator*() const { return ctx_->matrix_of(idx_); }
        iterator& operator++() { ++idx_; return *this; }
        iterator operator++(int) { iterator t = *this; ++idx_; return t; }
        bool operator==(const iterator& o) const { return idx_ == o.idx_; }

    private:
        std::shared_ptr<detail::OracleContext> ctx_;
        std::uint64_t idx_;
    };

    iterator begin() const { return {ctx_, 0}; }
    iterator end() const { return {ctx_, ctx_->vertex_count()}; }
    std::uint64_t size() const { return ctx_->vertex_count(); }

private:
    std::shared_ptr<detail::OracleContext> ctx_;
};

/// Exact graph distance between two non-central matrices; nullopt when
/// unreachable.
inline std::optional<int> bfs_distance(const Mat& a, const Mat& b,
                                       const OracleOptions& opt = {}) {
    if (a.field() != b.field()) throw FieldMismatch();
    if (a.n() != b.n()) throw DimensionMismatch();
    if (!a.field().is_prime_field())
        throw std::invalid_argument("oracle needs a finite field");
    if (is_central(a) || is_central(b)) throw CentralInput();
    detail::OracleContext ctx(a.n(), a.field().p(), opt);
    std::uint64_t src = ctx.index_of(encode_matrix(a));
    std::uint64_t dst = ctx.index_of(encode_matrix(b));
    if (src == dst) return 0;
    auto dist = detail::bfs_from(ctx, src, nullptr, 0);
    if (dist[dst] < 0) return std::nullopt;
    return dist[dst];
}

/// Exhaustive report: BFS from every vertex (or one per similarity
/// class), connectivity, diameter, eccentricity histogram, and the
/// count of vertices with an irreducible degree-n minimal polynomial.
inline GraphReport full_report(int n, std::int64_t p, const OracleOptions& opt = {}) {
    detail::OracleContext ctx(n, p, opt);
    const std::uint64_t v = ctx.vertex_count();

    GraphReport rep;
    rep.n = n;
    rep.p = p;
    rep.vertex_count = v;

    std::size_t words = 0;
    std::vector<std::uint64_t> adjacency;
    const std::vector<std::uint64_t>* adj = nullptr;
    if (opt.adjacency_cache) {
        adjacency = detail::build_adjacency(ctx, words);
        adj = &adjacency;
    }

    // component sweep
    std::vector<bool> seen(v, false);
    rep.component_count = 0;
    for (std::uint64_t s = 0; s < v; ++s) {
        if (seen[s]) continue;
        ++rep.component_count;
        auto dist = detail::bfs_from(ctx, s, adj, words);
        for (std::uint64_t u = 0; u < v; ++u)
            if (dist[u] >= 0) seen[u] = true;
    }
    rep.connected = rep.component_count == 1;

    // sources: every vertex, or one representative per similarity class
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sources;  // (index, multiplicity)
    if (opt.similarity_classes) {
        std::unordered_map<std::string, std::uint64_t> reps;  // key -> source index
        std::unordered_map<std::string, std::uint64_t> mult;
        for (std::uint64_t u = 0; u < v; ++u) {
            std::string key = detail::similarity_key(ctx.matrix_of(u));
            auto [it, fresh] = reps.try_emplace(key, u);
            (void)it;
            ++mult[key];
        }
        for (const auto& [key, idx] : reps) sources.emplace_back(idx, mult[key]);
        std::sort(sources.begin(), sources.end());
    } else {
        for (std::uint64_t u = 0; u < v; ++u) sources.emplace_back(u, 1);
    }

    int max_ecc = 0;
    bool any_infinite = false;
    for (const auto& [src, multiplicity] : sources) {
        auto dist = detail::bfs_from(ctx, src, adj, words);
        int ecc = 0;
        bool infinite = false;
        for (std::uint64_t u = 0; u < v; ++u) {
            if (dist[u] < 0) infinite = true;
            else if (dist[u] > ecc) ecc = dist[u];
        }
        int key = infinite ? -1 : ecc;
        rep.eccentricity_histogram[key] += multiplicity;
        if (infinite) any_infinite = true;
        else max_ecc = std::max(max_ecc, ecc);
    }
    rep.diameter = (rep.connected && !any_infinite) ? std::optional<int>(max_ecc)
                                                    : std::nullopt;

    // witness failures: minimal polynomial irreducible of degree n
    for (std::uint64_t u = 0; u < v; ++u) {
        Mat m = ctx.matrix_of(u);
        Poly mp = minimal_polynomial(m);
        if (mp.degree() != n) continue;
        auto fac = factor(mp);
        if (fac.factors.size() == 1 && fac.factors[0].second == 1)
            ++rep.witness_failure_count;
    }
    return rep;
}

}  // namespace cg
