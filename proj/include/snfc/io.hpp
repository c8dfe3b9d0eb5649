#pragma once

// JSON forms of cut reports, bound reports, verification reports and code
// files. Field elements are written as integers in [0, q).

#include <string>
#include <vector>

#include <json.hpp>

#include "snfc/capacity_bounds.hpp"
#include "snfc/code.hpp"
#include "snfc/cuts.hpp"
#include "snfc/error.hpp"
#include "snfc/network.hpp"
#include "snfc/verification.hpp"

namespace snfc::io {

using nlohmann::json;

inline json rows_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

inline json cut_report_json(const Network& n, const CutReport& c) {
    return {{"capacity", c.capacity}, {"cut", n.edge_ids(c.cut_edges)}, {"source_side", c.source_side}};
}

inline json bound_report_json(const Network& n, const BoundReport& b) {
    json j{{"r", b.r},
           {"upper", b.upper},
           {"lower", b.lower},
           {"c_min", b.c_min},
           {"c_min_bar", b.c_min_bar},
           {"witness_W", n.edge_ids(b.witness_w)},
           {"witness_cut", n.edge_ids(b.witness_cut)}};
    if (b.exact)
        j["exact"] = {{"value", b.exact->value}, {"reason", std::string(reason_name(b.exact->reason))}};
    else
        j["exact"] = {{"value", nullptr}, {"reason", "none"}};
    return j;
}

inline json verify_report_json(const Network& n, const VerifyReport& v) {
    json j{{"computable", v.computable},
           {"secure_rank", v.secure_rank},
           {"ell", v.ell},
           {"n", v.n},
           {"rate", static_cast<double>(v.ell) / static_cast<double>(v.n)},
           {"upper", v.upper},
           {"bound_consistent", v.bound_consistent}};
    j["computable_exhaustive"] = v.computable_exhaustive ? json(*v.computable_exhaustive) : json(nullptr);
    j["secure_exhaustive"] = v.secure_exhaustive ? json(*v.secure_exhaustive) : json(nullptr);
    j["failing_W"] = v.failing_w ? json(n.edge_ids(*v.failing_w)) : json(nullptr);
    j["failure"] = v.failure.empty() ? json(nullptr) : json(v.failure);
    return j;
}

inline json lifted_json(const LiftedCode& l) {
    json src = json::array();
    for (const auto& m : l.source_matrices) src.push_back(rows_json(m));
    return {{"base_field", l.base.to_string()},
            {"ell", l.ell},
            {"n", l.n},
            {"source_matrices", src},
            {"local_coeffs", rows_json(l.local)},
            {"decoder", rows_json(l.decoder)}};
}

inline json code_to_json(const Network& n, const SecureNetworkCode& sc) {
    const auto& c = sc.base;
    json j;
    j["field"] = c.field.to_string();
    j["modulus"] = c.field.modulus();
    j["rate"] = c.rate;
    j["r"] = sc.r;
    std::vector<std::string> sources;
    json src = json::object();
    for (std::size_t i = 0; i < n.num_sources(); ++i) {
        const std::string name = n.nodes()[n.source(i)];
        sources.push_back(name);
        json cols = json::object();
        for (std::size_t e : n.out_edges(n.source(i))) cols[n.edge(e).id] = c.source_matrices[i].col_values(e);
        src[name] = cols;
    }
    j["sources"] = sources;
    j["source_matrices"] = src;
    json local = json::object();
    for (std::size_t e = 0; e < n.num_edges(); ++e) {
        json row = json::object();
        for (std::size_t d : n.in_edges(n.edge(e).tail))
            if (c.local(d, e)) row[n.edge(d).id] = c.local(d, e);
        if (!row.empty()) local[n.edge(e).id] = row;
    }
    j["local_coeffs"] = local;
    j["B"] = rows_json(sc.B);
    json global = json::object();
    for (std::size_t e = 0; e < n.num_edges(); ++e) global[n.edge(e).id] = sc.H.col_values(e);
    j["global_vectors"] = global;
    j["decoder_D"] = rows_json(c.decoder);
    j["decoder_edges"] = n.edge_ids(n.in_edges(n.sink()));
    return j;
}

namespace detail {

inline Matrix matrix_from_json(const Field& f, const json& rows, std::size_t r, std::size_t c, const char* what) {
    const auto v = rows.get<std::vector<std::vector<Elem>>>();
    if (v.size() != r) throw Error(ErrorCode::ShapeMismatch, std::string(what) + " needs " + std::to_string(r) + " rows");
    for (const auto& row : v)
        if (row.size() != c)
            throw Error(ErrorCode::ShapeMismatch, std::string(what) + " needs " + std::to_string(c) + " columns");
    if (r == 0) return Matrix(f, 0, c);
    return Matrix::from_rows(f, v);
}

inline std::vector<Elem> vector_from_json(const Field& f, const json& j, std::size_t len, const std::string& what) {
    const auto v = j.get<std::vector<Elem>>();
    if (v.size() != len) throw Error(ErrorCode::ShapeMismatch, what + " needs " + std::to_string(len) + " entries");
    for (Elem x : v)
        if (!f.contains(x)) throw Error(ErrorCode::MalformedInput, what + ": " + std::to_string(x) + " outside the field");
    return v;
}

}  // namespace detail

/// Reads a code file against its network. Global vectors are recomputed
/// from the local description; stored ones, when present, must agree.
inline SecureNetworkCode code_from_json(const Network& n, const json& j) {
    try {
        const Field f = Field::parse(j.at("field").get<std::string>());
        if (j.contains("modulus") && j.at("modulus").get<std::vector<Elem>>() != f.modulus())
            throw Error(ErrorCode::MalformedInput, "modulus does not match GF(" + f.to_string() + ")");
        const std::size_t rate = j.at("rate").get<std::size_t>();
        const std::size_t r = j.at("r").get<std::size_t>();
        if (r > rate) throw Error(ErrorCode::MalformedInput, "r exceeds the rate");
        const auto sources = j.at("sources").get<std::vector<std::string>>();
        if (sources.size() != n.num_sources())
            throw Error(ErrorCode::ShapeMismatch, "code lists " + std::to_string(sources.size()) + " sources");
        SumNetworkCode c;
        c.field = f;
        c.rate = rate;
        c.num_sources = n.num_sources();
        for (std::size_t i = 0; i < n.num_sources(); ++i) {
            if (sources[i] != n.nodes()[n.source(i)])
                throw Error(ErrorCode::ShapeMismatch, "source " + std::to_string(i) + " is '" + sources[i] + "'");
            Matrix a(f, rate, n.num_edges());
            const json& cols = j.at("source_matrices").at(sources[i]);
            for (const auto& [id, col] : cols.items()) {
                const std::size_t e = n.edge_index(id);
                if (n.edge(e).tail != n.source(i))
                    throw Error(ErrorCode::ShapeMismatch, "edge '" + id + "' does not leave '" + sources[i] + "'");
                const auto v = detail::vector_from_json(f, col, rate, "source column " + id);
                for (std::size_t k = 0; k < rate; ++k) a(k, e) = v[k];
            }
            c.source_matrices.push_back(std::move(a));
        }
        c.local = Matrix(f, n.num_edges(), n.num_edges());
        for (const auto& [eid, row] : j.at("local_coeffs").items())
            for (const auto& [did, v] : row.items()) {
                const Elem x = v.get<Elem>();
                if (!f.contains(x)) throw Error(ErrorCode::MalformedInput, "coefficient outside the field");
                c.local(n.edge_index(did), n.edge_index(eid)) = x;
            }
        c.global = global_vectors(n, rate, c.source_matrices, c.local);
        c.decoder = detail::matrix_from_json(f, j.at("decoder_D"), n.in_edges(n.sink()).size(), rate, "decoder_D");
        check_shapes(n, c);
        const Matrix b = detail::matrix_from_json(f, j.at("B"), rate, rate, "B");
        auto sc = secure_code(c, b, r);
        if (j.contains("global_vectors"))
            for (const auto& [id, v] : j.at("global_vectors").items()) {
                const std::size_t e = n.edge_index(id);
                if (detail::vector_from_json(f, v, sc.H.rows(), "global vector " + id) != sc.H.col_values(e))
                    throw Error(ErrorCode::MalformedInput, "stored global vector of '" + id + "' disagrees with the local rules");
            }
        return sc;
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::MalformedInput, std::string("code JSON: ") + ex.what());
    }
}

inline SecureNetworkCode parse_code(const Network& n, std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw Error(ErrorCode::MalformedInput, std::string("code JSON: ") + ex.what());
    }
    return code_from_json(n, j);
}

}  // namespace snfc::io
