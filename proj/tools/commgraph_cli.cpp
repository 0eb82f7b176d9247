#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "commgraph/json_io.hpp"

namespace {

// exit codes: 0 success, 1 parse error, 2 precondition violation,
// 3 meaningful negative result (witness/path nonexistence)
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kPrecondition = 2;
constexpr int kNegative = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cg::ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const cg::Json& doc) { std::cout << cg::to_canonical_string(doc); }

void emit_error(const std::string& msg) {
    std::cerr << cg::to_canonical_string(cg::Json{{"error", msg}});
}

int cmd_witness(const std::string& matrix_file) {
    cg::Mat a = cg::parse_matrix_document(read_file(matrix_file));
    cg::WitnessResult r = cg::find_witness(a);
    emit(cg::witness_document(r));
    return std::holds_alternative<cg::Witness>(r) ? kOk : kNegative;
}

int cmd_path(const std::string& a_file, const std::string& b_file) {
    cg::Mat a = cg::parse_matrix_document(read_file(a_file));
    cg::Mat b = cg::parse_matrix_document(read_file(b_file));
    cg::PathResult r = cg::find_path(a, b);
    emit(cg::path_document(r));
    return std::holds_alternative<cg::CommutingPath>(r) ? kOk : kNegative;
}

int cmd_oracle(int n, std::int64_t p, const cg::OracleOptions& opt,
               const std::vector<std::string>& pair) {
    if (pair.empty()) {
        emit(cg::report_document(cg::full_report(n, p, opt)));
        return kOk;
    }
    cg::FieldDescriptor f = cg::FieldDescriptor::prime_field(p);
    cg::Mat a = cg::parse_matrix_document(read_file(pair[0]));
    cg::Mat b = cg::parse_matrix_document(read_file(pair[1]));
    if (a.field() != f || a.n() != n || b.field() != f || b.n() != n)
        throw cg::FieldMismatch();
    auto d = cg::bfs_distance(a, b, opt);
    emit(cg::Json{{"distance", d ? cg::Json(*d) : cg::Json("Unreachable")}});
    return kOk;
}

int cmd_verify(const std::string& path_file) {
    cg::Json doc;
    try {
        doc = cg::Json::parse(read_file(path_file));
    } catch (const cg::Json::parse_error& e) {
        throw cg::ParseError(e.what());
    }
    cg::CommutingPath p = cg::parse_path_document(doc);
    std::vector<std::string> violations;
    bool ok = cg::verify_path(p, &violations);
    emit(cg::Json{{"valid", ok}, {"violations", violations}});
    return ok ? kOk : kParseError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"commuting graphs of matrix rings: witnesses, paths, exhaustive oracle"};
    app.require_subcommand(1);

    std::string matrix_file, a_file, b_file, path_file;
    int n = 3;
    std::int64_t p = 2;
    cg::OracleOptions opt;
    std::vector<std::string> pair;

    auto* witness = app.add_subcommand("witness", "find a commuting witness");
    witness->add_option("--matrix", matrix_file, "matrix document (JSON)")->required();

    auto* path = app.add_subcommand("path", "connect two matrices by a short commuting path");
    path->add_option("a", a_file, "first matrix document")->required();
    path->add_option("b", b_file, "second matrix document")->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive BFS over M_n(F_p)");
    oracle->add_option("--n", n, "matrix dimension")->required();
    oracle->add_option("--p", p, "field characteristic (prime)")->required();
    oracle->add_option("--budget", opt.budget, "max p^(n^2) to enumerate");
    oracle->add_option("--pair", pair, "two matrix documents: report their BFS distance")
        ->expected(2);
    oracle->add_flag("--adjacency-cache", opt.adjacency_cache,
                     "precompute the adjacency bitset");
    oracle->add_flag("--similarity-classes", opt.similarity_classes,
                     "one BFS per similarity class");

    auto* verify = app.add_subcommand("verify", "re-check a path document from scratch");
    verify->add_option("path", path_file, "path document (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (witness->parsed()) return cmd_witness(matrix_file);
        if (path->parsed()) return cmd_path(a_file, b_file);
        if (oracle->parsed()) return cmd_oracle(n, p, opt, pair);
        return cmd_verify(path_file);
    } catch (const cg::ParseError& e) {
        emit_error(e.what());
        return kParseError;
    } catch (const cg::BudgetExceeded& e) {
        emit_error(e.what());
        return kPrecondition;
    } catch (const std::invalid_argument& e) {
        emit_error(e.what());
        return kPrecondition;
    } catch (const std::exception& e) {
        emit_error(e.what());
        return kPrecondition;
    }
}
