#include <catch2/catch_amalgamated.hpp>

#include "commgraph/json_io.hpp"
#include "test_util.hpp"

using namespace cg;

namespace {
const FieldDescriptor F5 = FieldDescriptor::prime_field(5);
const FieldDescriptor Q = FieldDescriptor::rationals();
}  // namespace

TEST_CASE("parse prime field matrix") {
    Mat m = parse_matrix_document(std::string(R"({
        "field": {"kind": "fp", "p": 5},
        "n": 2,
        "entries": [[1, -1], [7, 0]]
    })"));
    CHECK(m.field() == F5);
    CHECK(m.at(0, 0).residue() == 1);
    CHECK(m.at(0, 1).residue() == 4);  // -1 reduced mod 5
    CHECK(m.at(1, 0).residue() == 2);  // 7 reduced mod 5
}

TEST_CASE("parse rational matrix") {
    Mat m = parse_matrix_document(std::string(R"({
        "field": {"kind": "q"},
        "n": 2,
        "entries": [["1/2", -3], ["2/-4", "7"]]
    })"));
    CHECK(m.field() == Q);
    CHECK(m.at(0, 0).rational() == BigRational(1) / 2);
    CHECK(m.at(0, 1).rational() == -3);
    // sign and gcd normalization on load
    CHECK(m.at(1, 0).rational() == BigRational(-1) / 2);
    CHECK(m.at(1, 1).rational() == 7);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_matrix_document(std::string("not json")), ParseError);
    CHECK_THROWS_AS(parse_matrix_document(std::string("{}")), ParseError);
    CHECK_THROWS_AS(parse_matrix_document(std::string(
                        R"({"field": {"kind": "zz"}, "n": 1, "entries": [[0]]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix_document(std::string(
                        R"({"field": {"kind": "fp", "p": 5}, "n": 2, "entries": [[1, 2]]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix_document(std::string(
                        R"({"field": {"kind": "fp", "p": 5}, "n": 1, "entries": [["1/2"]]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix_document(std::string(
                        R"({"field": {"kind": "q"}, "n": 1, "entries": [["1/0"]]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix_document(std::string(
                        R"({"field": {"kind": "q"}, "n": 1, "entries": [["a/b"]]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_matrix_document(std::string(
                        R"({"field": {"kind": "fp", "p": 6}, "n": 1, "entries": [[0]]})")),
                    NotPrime);
}

TEST_CASE("round trip is byte stable") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        Mat m = cgtest::random_mat(F5, 3, rng);
        std::string s1 = to_canonical_string(matrix_document(m));
        Mat back = parse_matrix_document(s1);
        CHECK(back == m);
        CHECK(to_canonical_string(matrix_document(back)) == s1);
    }
    for (int iter = 0; iter < 20; ++iter) {
        Mat m = cgtest::random_int_mat(Q, 3, -9, 9, rng);
        std::string s1 = to_canonical_string(matrix_document(m));
        CHECK(to_canonical_string(matrix_document(parse_matrix_document(s1))) == s1);
    }
}

TEST_CASE("non-canonical input canonicalizes") {
    std::string raw = R"({"entries": [["2/-4"]], "field": {"kind": "q"}, "n": 1})";
    Json doc = matrix_document(parse_matrix_document(raw));
    CHECK(doc["entries"][0][0] == "-1/2");
    // idempotent canonicalization
    std::string once = to_canonical_string(doc);
    CHECK(to_canonical_string(matrix_document(parse_matrix_document(once))) == once);
}

TEST_CASE("witness document") {
    auto r = find_witness(Mat::diag(F5, {1, 1, 2}));
    Json doc = witness_document(r);
    CHECK(doc["kind"] == "idempotent");
    CHECK(doc["branch"] == "derogatory_rcf");
    CHECK(parse_matrix_document(doc["matrix"]) == std::get<Witness>(r).matrix);
    CHECK(doc["minimal_poly"]["coeffs"].size() == 3);

    auto fail = find_witness(companion(Poly::from_ints(FieldDescriptor::prime_field(2),
                                                       {1, 1, 0, 1})));
    Json fdoc = witness_document(fail);
    REQUIRE(fdoc.contains("failure"));
    CHECK(fdoc["failure"]["minimal_poly"]["coeffs"].size() == 4);
}

TEST_CASE("path document round trip") {
    std::mt19937 rng(11);
    Mat a = cgtest::random_mat(F5, 3, rng);
    Mat b = cgtest::random_mat(F5, 3, rng);
    REQUIRE((!is_central(a) && !is_central(b) && a != b));
    auto r = find_path(a, b);
    REQUIRE(std::holds_alternative<CommutingPath>(r));
    const auto& p = std::get<CommutingPath>(r);

    Json doc = path_document(r);
    CHECK(doc["length"] == p.length());
    CommutingPath back = parse_path_document(doc);
    REQUIRE(back.vertices.size() == p.vertices.size());
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        CHECK(back.vertices[i].matrix == p.vertices[i].matrix);
        CHECK(back.vertices[i].role == p.vertices[i].role);
    }
    CHECK(verify_path(back));

    CHECK_THROWS_AS(parse_path_document(Json::object()), ParseError);
}

TEST_CASE("failure path document") {
    PathResult r = PathFailure{PathFailure::Reason::NoMidpoint};
    Json doc = path_document(r);
    CHECK(doc["failure"]["reason"] == "no_midpoint");
}

TEST_CASE("report document") {
    GraphReport r = full_report(2, 2);
    Json doc = report_document(r);
    CHECK(doc["n"] == 2);
    CHECK(doc["p"] == 2);
    CHECK(doc["vertex_count"] == 14);
    CHECK(doc["connected"] == false);
    CHECK(doc["diameter"] == "Infinity");
    CHECK(doc["eccentricity_histogram"]["Infinity"] == 14);

    std::string s = to_canonical_string(doc);
    CHECK(s == to_canonical_string(report_document(full_report(2, 2))));
}
