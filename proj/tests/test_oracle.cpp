#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "commgraph/oracle.hpp"
#include "commgraph/pathfinder.hpp"
#include "test_util.hpp"

using namespace cg;

namespace {
const FieldDescriptor F2 = FieldDescriptor::prime_field(2);
const FieldDescriptor F3 = FieldDescriptor::prime_field(3);
}  // namespace

TEST_CASE("matrix codes round trip") {
    std::mt19937 rng(90);
    for (int iter = 0; iter < 50; ++iter) {
        Mat m = cgtest::random_mat(F3, 3, rng);
        CHECK(decode_matrix(F3, 3, encode_matrix(m)) == m);
    }
    // entry (0, 0) is the least significant digit
    CHECK(encode_matrix(Mat::unit(F2, 3, 0, 0)) == 1);
    CHECK(encode_matrix(Mat::unit(F2, 3, 0, 1)) == 2);
    CHECK(encode_matrix(Mat::unit(F2, 3, 1, 0)) == 8);
}

TEST_CASE("vertex enumeration") {
    VertexRange r(3, 2);
    CHECK(r.size() == 510);

    std::set<std::uint64_t> codes;
    std::uint64_t prev = 0;
    bool first = true;
    for (const Mat& m : r) {
        CHECK_FALSE(is_central(m));
        std::uint64_t c = encode_matrix(m);
        if (!first) CHECK(c > prev);
        prev = c;
        first = false;
        codes.insert(c);
    }
    CHECK(codes.size() == 510);

    CHECK(VertexRange(3, 3).size() == 19680);  // 3^9 - 3
    CHECK(VertexRange(2, 2).size() == 14);
}

TEST_CASE("budget guard") {
    CHECK_THROWS_AS(VertexRange(4, 5), BudgetExceeded);  // 5^16 > 2^26
    CHECK_THROWS_AS(VertexRange(5, 3), BudgetExceeded);
    CHECK_THROWS_AS(VertexRange(5, 5), BudgetExceeded);
    OracleOptions tight;
    tight.budget = 511;
    CHECK_THROWS_AS(VertexRange(3, 2, tight), BudgetExceeded);
    tight.budget = 512;
    CHECK_NOTHROW(VertexRange(3, 2, tight));
}

TEST_CASE("bfs_distance basics") {
    Mat e11 = Mat::unit(F2, 3, 0, 0);
    Mat e22 = Mat::unit(F2, 3, 1, 1);
    Mat e12 = Mat::unit(F2, 3, 0, 1);

    CHECK(bfs_distance(e11, e11) == 0);
    CHECK(bfs_distance(e11, e22) == 1);  // commuting pair
    CHECK(bfs_distance(e11, e12) == 2);  // regression value

    CHECK_THROWS_AS(bfs_distance(e11, Mat::identity(F2, 3)), CentralInput);
    CHECK_THROWS_AS(bfs_distance(Mat::zero(F2, 3), e11), CentralInput);
    CHECK_THROWS_AS(bfs_distance(e11, Mat::unit(F3, 3, 0, 0)), FieldMismatch);
}

TEST_CASE("unreachable across components") {
    // irreducible cubic: its component is the field copy it generates
    Mat c = companion(Poly::from_ints(F2, {1, 1, 0, 1}));
    CHECK(bfs_distance(c, mat_mul(c, c)) == 1);
    CHECK_FALSE(bfs_distance(c, Mat::unit(F2, 3, 0, 0)).has_value());
}

TEST_CASE("distance four pair") {
    Mat j = Mat::from_ints(F2, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
    Mat t = Mat::from_ints(F2, 3, {1, 0, 0, 1, 1, 0, 0, 1, 1});
    CHECK(bfs_distance(j, t) == 4);  // regression value
}

TEST_CASE("distance symmetry on sampled pairs") {
    std::mt19937 rng(41);
    int tested = 0;
    while (tested < 15) {
        Mat a = cgtest::random_mat(F2, 3, rng);
        Mat b = cgtest::random_mat(F2, 3, rng);
        if (is_central(a) || is_central(b)) continue;
        CHECK(bfs_distance(a, b) == bfs_distance(b, a));
        ++tested;
    }
}

TEST_CASE("consistency with pathfinder") {
    std::mt19937 rng(42);
    int tested = 0;
    while (tested < 25) {
        Mat a = cgtest::random_mat(F2, 3, rng);
        Mat b = cgtest::random_mat(F2, 3, rng);
        if (is_central(a) || is_central(b) || a == b) continue;
        auto d = bfs_distance(a, b);
        auto r = find_path(a, b);
        if (auto* p = std::get_if<CommutingPath>(&r)) {
            REQUIRE(d.has_value());
            CHECK(p->length() >= *d);
            CHECK(verify_path(*p));
        } else {
            // failed endpoints sit in small components; some targets are
            // genuinely unreachable
            auto& f = std::get<PathFailure>(r);
            CHECK(f.reason == PathFailure::Reason::EndpointWitnessFailure);
        }
        ++tested;
    }
}

TEST_CASE("full report on M_3(F_2)") {
    GraphReport r = full_report(3, 2);
    CHECK(r.n == 3);
    CHECK(r.p == 2);
    CHECK(r.vertex_count == 510);
    // regression values: one large component plus eight field copies
    // (48 matrices with irreducible cubic minimal polynomial, 6 each)
    CHECK_FALSE(r.connected);
    CHECK(r.component_count == 9);
    CHECK_FALSE(r.diameter.has_value());
    CHECK(r.witness_failure_count == 48);
    // every vertex misses some component, so every eccentricity is infinite
    REQUIRE(r.eccentricity_histogram.size() == 1);
    CHECK(r.eccentricity_histogram.at(-1) == 510);

    // histogram mass conservation
    std::uint64_t mass = 0;
    for (auto [ecc, cnt] : r.eccentricity_histogram) mass += cnt;
    CHECK(mass == r.vertex_count);
}

TEST_CASE("n = 2 reports are disconnected") {
    for (std::int64_t p : {2, 3}) {
        GraphReport r = full_report(2, p);
        CHECK(r.vertex_count ==
              static_cast<std::uint64_t>(p * p * p * p - p));
        CHECK_FALSE(r.connected);
        CHECK(r.component_count > 1);
        CHECK_FALSE(r.diameter.has_value());
        std::uint64_t mass = 0;
        for (auto [ecc, cnt] : r.eccentricity_histogram) mass += cnt;
        CHECK(mass == r.vertex_count);
    }
}

TEST_CASE("adjacency cache gives identical reports") {
    GraphReport naive = full_report(3, 2);
    OracleOptions opt;
    opt.adjacency_cache = true;
    GraphReport cached = full_report(3, 2, opt);
    CHECK(cached.connected == naive.connected);
    CHECK(cached.component_count == naive.component_count);
    CHECK(cached.diameter == naive.diameter);
    CHECK(cached.eccentricity_histogram == naive.eccentricity_histogram);
    CHECK(cached.witness_failure_count == naive.witness_failure_count);
}

TEST_CASE("similarity-class optimization validated against naive run") {
    GraphReport naive = full_report(3, 2);
    OracleOptions opt;
    opt.adjacency_cache = true;
    opt.similarity_classes = true;
    GraphReport classed = full_report(3, 2, opt);
    CHECK(classed.connected == naive.connected);
    CHECK(classed.component_count == naive.component_count);
    CHECK(classed.diameter == naive.diameter);
    CHECK(classed.eccentricity_histogram == naive.eccentricity_histogram);
    CHECK(classed.witness_failure_count == naive.witness_failure_count);
}
