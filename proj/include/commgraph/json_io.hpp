#pragma once

#include <cctype>
#include <string>

#include <json.hpp>

#include "commgraph/oracle.hpp"
#include "commgraph/pathfinder.hpp"

namespace cg {

using Json = nlohmann::json;

namespace detail {

/// "a", "-a" or "a/b" with b > 0; sign normalized to the numerator.
inline BigRational parse_rational_string(const std::string& s) {
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = t[0] == '-' || t[0] == '+' ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid_int(num) || !valid_int(den))
        throw ParseError("malformed rational \"" + s + "\"");
    BigInt n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in \"" + s + "\"");
    // two-argument cpp_rational rejects negative denominators; divide instead
    return BigRational(n) / BigRational(d);
}

inline Scalar scalar_from_json(const FieldDescriptor& f, const Json& v) {
    if (v.is_number_integer()) return Scalar(f, v.get<std::int64_t>());
    if (v.is_string()) {
        if (f.is_prime_field())
            throw ParseError("string entries are only valid over the rationals");
        return Scalar(f, parse_rational_string(v.get<std::string>()));
    }
    throw ParseError("matrix entry must be an integer or a rational string");
}

inline Json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return s.residue();
    return s.to_string();  // rationals as strings, canonical "a/b"
}

}  // namespace detail

inline FieldDescriptor parse_field(const Json& f) {
    if (!f.is_object() || !f.contains("kind") || !f.at("kind").is_string())
        throw ParseError("field descriptor needs a \"kind\" string");
    std::string kind = f.at("kind").get<std::string>();
    if (kind == "q") return FieldDescriptor::rationals();
    if (kind == "fp") {
        if (!f.contains("p") || !f.at("p").is_number_integer())
            throw ParseError("prime field descriptor needs an integer \"p\"");
        return FieldDescriptor::prime_field(f.at("p").get<std::int64_t>());
    }
    throw ParseError("unknown field kind \"" + kind + "\"");
}

inline Json field_document(const FieldDescriptor& f) {
    if (f.is_prime_field()) return {{"kind", "fp"}, {"p", f.p()}};
    return {{"kind", "q"}};
}

inline Mat parse_matrix_document(const Json& doc) {
    if (!doc.is_object() || !doc.contains("field") || !doc.contains("n") ||
        !doc.contains("entries"))
        throw ParseError("matrix document needs \"field\", \"n\" and \"entries\"");
    FieldDescriptor f = parse_field(doc.at("field"));
    if (!doc.at("n").is_number_integer())
        throw ParseError("\"n\" must be an integer");
    int n = doc.at("n").get<int>();
    if (n < 1) throw ParseError("\"n\" must be positive");
    if (n > kMaxDimension) throw DimensionTooLarge(n);
    const Json& rows = doc.at("entries");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        throw ParseError("\"entries\" must be an array of n rows");
    Mat m(f, n);
    for (int i = 0; i < n; ++i) {
        const Json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw ParseError("row " + std::to_string(i) + " must have n entries");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = detail::scalar_from_json(f, row[static_cast<std::size_t>(j)]);
    }
    return m;
}

inline Mat parse_matrix_document(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
    return parse_matrix_document(doc);
}

inline Json matrix_document(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(detail::scalar_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"field", field_document(m.field())}, {"n", m.n()}, {"entries", rows}};
}

inline Json poly_document(const Poly& f) {
    Json coeffs = Json::array();  // low to high
    for (int i = 0; i <= f.degree(); ++i)
        coeffs.push_back(detail::scalar_to_json(f.coeff(i)));
    return {{"field", field_document(f.field())}, {"coeffs", coeffs}};
}

inline Json witness_document(const WitnessResult& r) {
    if (const auto* w = std::get_if<Witness>(&r)) {
        Json doc = {{"kind", to_string(w->kind)},
                    {"branch", to_string(w->branch)},
                    {"matrix", matrix_document(w->matrix)},
                    {"minimal_poly", poly_document(w->minimal_poly)}};
        if (w->branch_poly) doc["branch_poly"] = poly_document(*w->branch_poly);
        return doc;
    }
    const auto& f = std::get<WitnessFailure>(r);
    return {{"failure", {{"minimal_poly", poly_document(f.minimal_poly)}}}};
}

inline const char* to_string(CommutingPath::Role r) {
    switch (r) {
        case CommutingPath::Role::Endpoint: return "endpoint";
        case CommutingPath::Role::Witness: return "witness";
        default: return "midpoint";
    }
}

inline const char* to_string(PathFailure::Reason r) {
    return r == PathFailure::Reason::EndpointWitnessFailure ? "endpoint_witness_failure"
                                                            : "no_midpoint";
}

inline Json path_document(const PathResult& r) {
    if (const auto* p = std::get_if<CommutingPath>(&r)) {
        Json verts = Json::array();
        for (const auto& v : p->vertices) {
            Json vert = {{"matrix", matrix_document(v.matrix)},
                         {"role", to_string(v.role)}};
            if (v.branch) vert["branch"] = to_string(*v.branch);
            verts.push_back(std::move(vert));
        }
        return {{"length", p->length()}, {"vertices", verts}};
    }
    const auto& f = std::get<PathFailure>(r);
    return {{"failure",
             {{"reason", to_string(f.reason)},
              {"endpoint_a_failed", f.endpoint_a_failed},
              {"endpoint_b_failed", f.endpoint_b_failed}}}};
}

inline CommutingPath parse_path_document(const Json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.at("vertices").is_array())
        throw ParseError("path document needs a \"vertices\" array");
    CommutingPath p;
    for (const Json& v : doc.at("vertices")) {
        if (!v.is_object() || !v.contains("matrix") || !v.contains("role"))
            throw ParseError("path vertex needs \"matrix\" and \"role\"");
        std::string role = v.at("role").get<std::string>();
        CommutingPath::Role r;
        if (role == "endpoint") r = CommutingPath::Role::Endpoint;
        else if (role == "witness") r = CommutingPath::Role::Witness;
        else if (role == "midpoint") r = CommutingPath::Role::Midpoint;
        else throw ParseError("unknown vertex role \"" + role + "\"");
        p.vertices.push_back({parse_matrix_document(v.at("matrix")), r, std::nullopt});
    }
    return p;
}

inline Json report_document(const GraphReport& r) {
    Json hist = Json::object();
    for (auto [ecc, cnt] : r.eccentricity_histogram)
        hist[ecc < 0 ? "Infinity" : std::to_string(ecc)] = cnt;
    return {{"n", r.n},
            {"p", r.p},
            {"vertex_count", r.vertex_count},
            {"connected", r.connected},
            {"component_count", r.component_count},
            {"diameter", r.diameter ? Json(*r.diameter) : Json("Infinity")},
            {"eccentricity_histogram", hist},
            {"witness_failure_count", r.witness_failure_count}};
}

/// Canonical text form: sorted keys, two-space indentation, trailing
/// newline. Identical documents serialize byte-identically.
inline std::string to_canonical_string(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cg
