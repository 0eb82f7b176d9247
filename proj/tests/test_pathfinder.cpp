#include <catch2/catch_amalgamated.hpp>

#include "commgraph/pathfinder.hpp"
#include "test_util.hpp"

using namespace cg;

namespace {
const FieldDescriptor F2 = FieldDescriptor::prime_field(2);
const FieldDescriptor F3 = FieldDescriptor::prime_field(3);
const FieldDescriptor F5 = FieldDescriptor::prime_field(5);
const FieldDescriptor F7 = FieldDescriptor::prime_field(7);
const FieldDescriptor Q = FieldDescriptor::rationals();

bool in_span(const std::vector<Mat>& basis, const Mat& m) {
    const int n = m.n();
    const FieldDescriptor& f = m.field();
    Tableau t(f, n * n, static_cast<int>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                t.at(i * n + j, static_cast<int>(k)) = basis[k].at(i, j);
    Vec rhs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rhs.push_back(m.at(i, j));
    return solve(t, rhs, f).has_value();
}
}  // namespace

TEST_CASE("centralizer basis examples") {
    CHECK(centralizer_basis(Mat::scalar(F3, 3, Scalar(F3, 2))).dimension() == 9);

    auto cb = centralizer_basis(Mat::diag(F5, {1, 2, 3}));
    CHECK(cb.dimension() == 3);
    for (const Mat& m : cb.basis) {
        CHECK(commutes(cb.source, m));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(m.at(i, j).is_zero());
    }

    Mat j3 = Mat::from_ints(F5, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
    auto cj = centralizer_basis(j3);
    CHECK(cj.dimension() == 3);
    CHECK(in_span(cj.basis, Mat::identity(F5, 3)));
    CHECK(in_span(cj.basis, j3));
    CHECK(in_span(cj.basis, mat_mul(j3, j3)));
}

TEST_CASE("joint commutant") {
    std::mt19937 rng(3);
    Mat a = cgtest::random_mat(F5, 3, rng);
    auto ja = joint_commutant(a, a);
    auto ca = centralizer_basis(a);
    CHECK(ja.basis == ca.basis);
    CHECK(joint_commutant(a, Mat::identity(F5, 3)).basis == ca.basis);

    auto je = joint_commutant(Mat::unit(F3, 3, 0, 0), Mat::unit(F3, 3, 1, 1));
    CHECK(je.dimension() >= 3);
    CHECK(in_span(je.basis, Mat::diag(F3, {1, 2, 0})));

    CHECK_THROWS_AS(joint_commutant(a, cgtest::random_mat(F7, 3, rng)), FieldMismatch);
}

TEST_CASE("joint commutant contains I and has symmetric dimension") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 40; ++iter) {
        Mat a = cgtest::random_mat(F3, 3, rng);
        Mat b = cgtest::random_mat(F3, 3, rng);
        auto jab = joint_commutant(a, b);
        CHECK(in_span(jab.basis, Mat::identity(F3, 3)));
        CHECK(jab.dimension() == joint_commutant(b, a).dimension());
        for (const Mat& m : jab.basis) {
            CHECK(commutes(a, m));
            CHECK(commutes(b, m));
        }
    }
}

TEST_CASE("pick_noncentral") {
    Mat id = Mat::identity(F5, 3);
    CHECK_FALSE(pick_noncentral({id, {id}}).has_value());

    Mat e11 = Mat::unit(F5, 3, 0, 0);
    auto picked = pick_noncentral({id, {id, e11}});
    REQUIRE(picked.has_value());
    CHECK_FALSE(is_central(*picked));

    Mat e12 = Mat::unit(F5, 3, 0, 1);
    CHECK(pick_noncentral({id, {e12}}) == e12);

    // exclusion forces a deterministic alternative
    auto other = pick_noncentral({id, {e12}}, {e12});
    REQUIRE(other.has_value());
    CHECK(*other != e12);
    CHECK_FALSE(is_central(*other));
}

TEST_CASE("find_path guards") {
    Mat a = Mat::unit(F5, 3, 0, 0);
    CHECK_THROWS_AS(find_path(a, a), IdenticalInputs);
    CHECK_THROWS_AS(find_path(a, Mat::identity(F5, 3)), CentralInput);
    CHECK_THROWS_AS(find_path(a, Mat::unit(F7, 3, 1, 1)), FieldMismatch);
    CHECK_THROWS_AS(find_path(Mat::unit(F5, 2, 0, 0), Mat::unit(F5, 2, 1, 1)),
                    DimensionTooSmall);
}

TEST_CASE("direct edge") {
    auto r = find_path(Mat::unit(F5, 3, 0, 0), Mat::unit(F5, 3, 1, 1));
    auto& p = std::get<CommutingPath>(r);
    CHECK(p.length() == 1);
    CHECK(verify_path(p));
}

TEST_CASE("paths on random pairs") {
    std::mt19937 rng(400);
    for (std::int64_t pr : {3, 5}) {
        FieldDescriptor f = FieldDescriptor::prime_field(pr);
        for (int n = 3; n <= 4; ++n) {
            for (int iter = 0; iter < 60; ++iter) {
                Mat a = cgtest::random_mat(f, n, rng);
                Mat b = cgtest::random_mat(f, n, rng);
                if (is_central(a) || is_central(b) || a == b) continue;
                auto r = find_path(a, b);
                if (auto* p = std::get_if<CommutingPath>(&r)) {
                    CHECK(p->length() <= 4);
                    std::vector<std::string> diags;
                    bool ok = verify_path(*p, &diags);
                    CHECK(ok);
                    for (const auto& d : diags) UNSCOPED_INFO(d);
                    CHECK(p->vertices.front().matrix == a);
                    CHECK(p->vertices.back().matrix == b);
                }
            }
        }
    }
}

TEST_CASE("determinism") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 10; ++iter) {
        Mat a = cgtest::random_mat(F5, 3, rng);
        Mat b = cgtest::random_mat(F5, 3, rng);
        if (is_central(a) || is_central(b) || a == b) continue;
        auto r1 = find_path(a, b);
        auto r2 = find_path(a, b);
        auto* p1 = std::get_if<CommutingPath>(&r1);
        auto* p2 = std::get_if<CommutingPath>(&r2);
        REQUIRE((p1 != nullptr) == (p2 != nullptr));
        if (p1) {
            REQUIRE(p1->vertices.size() == p2->vertices.size());
            for (std::size_t i = 0; i < p1->vertices.size(); ++i)
                CHECK(p1->vertices[i].matrix == p2->vertices[i].matrix);
        }
    }
}

TEST_CASE("verify_path flags violations") {
    auto r = find_path(Mat::unit(F5, 3, 0, 0), Mat::unit(F5, 3, 1, 1));
    auto p = std::get<CommutingPath>(r);

    CommutingPath tampered = p;
    tampered.vertices.insert(tampered.vertices.begin() + 1,
                             {Mat::identity(F5, 3), CommutingPath::Role::Midpoint, {}});
    std::vector<std::string> diags;
    CHECK_FALSE(verify_path(tampered, &diags));
    bool found = false;
    for (const auto& d : diags) found = found || d.find("central vertex") != std::string::npos;
    CHECK(found);

    CommutingPath bad_edge = p;
    bad_edge.vertices.insert(bad_edge.vertices.begin() + 1,
                             {Mat::unit(F5, 3, 0, 1), CommutingPath::Role::Midpoint, {}});
    diags.clear();
    CHECK_FALSE(verify_path(bad_edge, &diags));
    found = false;
    for (const auto& d : diags) found = found || d.find("non-commuting edge") != std::string::npos;
    CHECK(found);
}

TEST_CASE("centralizer dimension law") {
    std::mt19937 rng(5150);
    for (int iter = 0; iter < 60; ++iter) {
        Mat a = cgtest::random_mat(F7, 3, rng);
        CHECK((centralizer_basis(a).dimension() == 3) == !is_derogatory(a));
    }
}

TEST_CASE("paths over the rationals") {
    Mat a = Mat::from_ints(Q, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});   // companion of x^3-1
    Mat b = Mat::from_ints(Q, 3, {1, 2, 0, 0, 1, 0, 0, 0, 2});
    REQUIRE_FALSE(commutes(a, b));
    auto r = find_path(a, b);
    if (auto* p = std::get_if<CommutingPath>(&r)) {
        CHECK(p->length() <= 4);
        CHECK(verify_path(*p));
    }
}
