#pragma once

// Built-in example networks and hand-authored codes.

#include <map>
#include <string>
#include <vector>

#include "snfc/code.hpp"
#include "snfc/network.hpp"

namespace snfc::fixtures {

/// Two sources, one relay; sigma1 is cut by {e5} alone.
inline Network n1() {
    return Network::build({"s1", "s2", "v", "rho"}, {"s1", "s2"}, "rho",
                          {{"e1", "s1", "v"}, {"e2", "s1", "v"}, {"e3", "s2", "v"}, {"e4", "s2", "rho"},
                           {"e5", "v", "rho"}});
}

/// Two-source butterfly.
inline Network butterfly() {
    return Network::build({"s1", "s2", "n3", "n4", "n5", "n6", "rho"}, {"s1", "s2"}, "rho",
                          {{"e1", "s1", "n4"},
                           {"e2", "s1", "n3"},
                           {"e3", "s2", "n3"},
                           {"e4", "s2", "n5"},
                           {"e5", "n3", "n6"},
                           {"e6", "n6", "n4"},
                           {"e7", "n6", "n5"},
                           {"e8", "n4", "rho"},
                           {"e9", "n5", "rho"}});
}

/// Single-source graph whose edges {e7, e8} have primary cut {e5} from {u1, u2}.
inline Network fig2() {
    return Network::build({"s", "u1", "u2", "n3", "n4", "n5", "n6"}, {"s"}, "n4",
                          {{"e1", "s", "u1"},
                           {"e2", "s", "u2"},
                           {"e3", "u1", "n3"},
                           {"e4", "u2", "n3"},
                           {"e5", "n3", "n6"},
                           {"e6", "n6", "n4"},
                           {"e7", "n6", "n5"},
                           {"e8", "n5", "n4"}});
}

inline Network line() {
    return Network::build({"s", "v", "rho"}, {"s"}, "rho", {{"e1", "s", "v"}, {"e2", "v", "rho"}});
}

/// Compact description of a linear code on a given network.
struct CodeSpec {
    Field field;
    std::size_t rate = 0;
    std::size_t r = 0;
    std::map<std::string, std::vector<Elem>> source_columns;               // A_{i,e}
    std::map<std::string, std::map<std::string, Elem>> local_coeffs;      // e -> d -> a_{d,e}
    std::vector<std::vector<Elem>> decoder;                                // rows follow In(rho)
    std::vector<std::vector<Elem>> B;                                      // empty means identity
};

inline SumNetworkCode sum_code(const Network& n, const CodeSpec& spec) {
    SumNetworkCode c;
    c.field = spec.field;
    c.rate = spec.rate;
    c.num_sources = n.num_sources();
    for (std::size_t i = 0; i < n.num_sources(); ++i) c.source_matrices.emplace_back(spec.field, spec.rate, n.num_edges());
    for (const auto& [id, col] : spec.source_columns) {
        const std::size_t e = n.edge_index(id);
        const auto i = n.source_ordinal(n.edge(e).tail);
        if (!i) throw Error(ErrorCode::ShapeMismatch, "edge '" + id + "' does not leave a source");
        if (col.size() != spec.rate) throw Error(ErrorCode::ShapeMismatch, "column for '" + id + "' has wrong length");
        for (std::size_t a = 0; a < spec.rate; ++a) c.source_matrices[*i](a, e) = col[a];
    }
    c.local = Matrix(spec.field, n.num_edges(), n.num_edges());
    for (const auto& [e, row] : spec.local_coeffs)
        for (const auto& [d, v] : row) c.local(n.edge_index(d), n.edge_index(e)) = v;
    c.global = global_vectors(n, spec.rate, c.source_matrices, c.local);
    c.decoder = Matrix::from_rows(spec.field, spec.decoder);
    check_shapes(n, c);
    return c;
}

inline SecureNetworkCode secure_code_from(const Network& n, const CodeSpec& spec) {
    const Matrix b = spec.B.empty() ? Matrix::identity(spec.field, spec.rate) : Matrix::from_rows(spec.field, spec.B);
    return secure_code(sum_code(n, spec), b, spec.r);
}

/// Hand code on n1 over GF(2), R = 2, r = 1: e1 carries k1, e2 carries
/// m1 + k1, e3 carries k2, e4 carries m2 + k2, e5 carries m1 + k2.
inline CodeSpec n1_code_spec() {
    CodeSpec c;
    c.field = Field::make(2, 1);
    c.rate = 2;
    c.r = 1;
    c.source_columns = {{"e1", {0, 1}}, {"e2", {1, 1}}, {"e3", {0, 1}}, {"e4", {1, 1}}};
    c.local_coeffs = {{"e5", {{"e1", 1}, {"e2", 1}, {"e3", 1}}}};
    c.decoder = {{1, 0}, {1, 0}};
    return c;
}

/// Butterfly sum code with global vectors
/// e1 (1,1,0,0), e2 (0,1,0,0), e3 (0,0,1,0), e4 (0,0,1,1), e5..e7 (0,1,1,0),
/// e8 (1,0,1,0), e9 (0,1,0,1); valid over any field of characteristic 2.
inline CodeSpec butterfly_sum_spec(const Field& f) {
    CodeSpec c;
    c.field = f;
    c.rate = 2;
    c.r = 0;
    c.source_columns = {{"e1", {1, 1}}, {"e2", {0, 1}}, {"e3", {1, 0}}, {"e4", {1, 1}}};
    c.local_coeffs = {{"e5", {{"e2", 1}, {"e3", 1}}},
                      {"e6", {{"e5", 1}}},
                      {"e7", {{"e5", 1}}},
                      {"e8", {{"e1", 1}, {"e6", 1}}},
                      {"e9", {{"e4", 1}, {"e7", 1}}}};
    c.decoder = {{1, 0}, {0, 1}};
    return c;
}

/// Key-mixing matrix [[1, 0], [alpha, 1]] over GF(4).
inline std::vector<std::vector<Elem>> butterfly_B() { return {{1, 0}, {2, 1}}; }

/// Expected h-vectors of the GF(4) butterfly secure code.
inline std::map<std::string, std::vector<Elem>> butterfly_h_vectors() {
    return {{"e1", {1, 3, 0, 0}}, {"e2", {0, 1, 0, 0}}, {"e3", {0, 0, 1, 2}},
            {"e4", {0, 0, 1, 3}}, {"e5", {0, 1, 1, 2}}, {"e6", {0, 1, 1, 2}},
            {"e7", {0, 1, 1, 2}}, {"e8", {1, 2, 1, 2}}, {"e9", {0, 1, 0, 1}}};
}

inline SecureNetworkCode butterfly_secure_code() {
    auto spec = butterfly_sum_spec(Field::make(2, 2));
    spec.r = 1;
    spec.B = butterfly_B();
    return secure_code_from(butterfly(), spec);
}

/// Hand code on the butterfly over GF(2), R = 2, r = 1: e1 carries m1 + k1,
/// e2 carries k1, e3 carries k2, e4 carries m2 + k2, e5 = e6 = k1 + k2,
/// e7 = 0, e8 = m1 + k2, e9 = m2 + k2.
inline CodeSpec butterfly_gf2_spec() {
    CodeSpec c;
    c.field = Field::make(2, 1);
    c.rate = 2;
    c.r = 1;
    c.source_columns = {{"e1", {1, 1}}, {"e2", {0, 1}}, {"e3", {0, 1}}, {"e4", {1, 1}}};
    c.local_coeffs = {{"e5", {{"e2", 1}, {"e3", 1}}},
                      {"e6", {{"e5", 1}}},
                      {"e8", {{"e1", 1}, {"e6", 1}}},
                      {"e9", {{"e4", 1}, {"e7", 1}}}};
    c.decoder = {{1, 0}, {1, 0}};
    return c;
}

inline std::vector<std::string> names() { return {"n1", "butterfly", "fig2"}; }

inline Network by_name(const std::string& name) {
    if (name == "n1") return n1();
    if (name == "butterfly") return butterfly();
    if (name == "fig2") return fig2();
    if (name == "line") return line();
    throw Error(ErrorCode::MalformedInput, "unknown example '" + name + "'");
}

}  // namespace snfc::fixtures
