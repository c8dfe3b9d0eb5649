#pragma once

// Checks that a linear code computes the sum at the sink and leaks nothing
// about the messages to a wiretapper on any r edges: rank criteria plus
// brute-force enumeration of every source input.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snfc/capacity_bounds.hpp"
#include "snfc/code.hpp"
#include "snfc/error.hpp"
#include "snfc/network.hpp"

namespace snfc {

inline constexpr std::uint64_t kDefaultExhaustiveCap = std::uint64_t(1) << 24;

/// Cap on enumerated states: SNFC_MAX_EXHAUSTIVE if set and valid.
inline std::uint64_t exhaustive_cap_from_env() {
    if (const char* v = std::getenv("SNFC_MAX_EXHAUSTIVE")) {
        char* end = nullptr;
        const unsigned long long x = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && end != v) return x;
    }
    return kDefaultExhaustiveCap;
}

/// q^{Rs}, saturating just past the cap.
inline std::uint64_t input_space_size(const SecureNetworkCode& sc, std::uint64_t cap) {
    std::uint64_t total = 1;
    const std::size_t digits = sc.rate() * sc.base.num_sources;
    for (std::size_t k = 0; k < digits; ++k) {
        total *= sc.field().q();
        if (total > cap) return cap + 1;
    }
    return total;
}

/// Symbols on every edge for the input x_S (Rs coordinates, source blocks
/// of R with the R-r message coordinates first), by applying the local
/// rules in the edge order.
inline std::vector<Elem> simulate(const SecureNetworkCode& sc, const Network& n, const std::vector<Matrix>& src,
                                  const std::vector<Elem>& x) {
    const Field& f = sc.field();
    const std::size_t rate = sc.rate();
    std::vector<Elem> y(n.num_edges(), 0);
    for (std::size_t e : n.order()) {
        const std::size_t tail = n.edge(e).tail;
        Elem acc = 0;
        if (auto i = n.source_ordinal(tail)) {
            for (std::size_t a = 0; a < rate; ++a) acc = f.add(acc, f.mul(x[*i * rate + a], src[*i](a, e)));
        } else {
            for (std::size_t d : n.in_edges(tail)) acc = f.add(acc, f.mul(sc.base.local(d, e), y[d]));
        }
        y[e] = acc;
    }
    return y;
}

namespace detail {

inline void decode_digits(std::uint64_t idx, Elem q, std::vector<Elem>& x) {
    for (std::size_t k = x.size(); k-- > 0;) {
        x[k] = static_cast<Elem>(idx % q);
        idx /= q;
    }
}

/// Index of the message part of x in [0, q^{(R-r)s}).
inline std::uint64_t message_index(const std::vector<Elem>& x, std::size_t rate, std::size_t ell, std::size_t s,
                                   Elem q) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t a = 0; a < ell; ++a) m = m * q + x[i * rate + a];
    return m;
}

/// Z: Rs x (R-r), identity on each source's message rows.
inline Matrix message_sum_target(const SecureNetworkCode& sc) {
    const std::size_t rate = sc.rate(), ell = sc.message_dims(), s = sc.base.num_sources;
    Matrix z(sc.field(), rate * s, ell);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t a = 0; a < ell; ++a) z(i * rate + a, a) = 1;
    return z;
}

inline void check_code_shapes(const SecureNetworkCode& sc, const Network& n) {
    check_shapes(n, sc.base);
    if (sc.B.rows() != sc.rate() || sc.B.cols() != sc.rate()) throw Error(ErrorCode::ShapeMismatch, "B is " + sc.B.shape());
    if (sc.H.rows() != sc.base.global.rows() || sc.H.cols() != n.num_edges())
        throw Error(ErrorCode::ShapeMismatch, "H is " + sc.H.shape());
    if (sc.r > sc.rate()) throw Error(ErrorCode::ShapeMismatch, "r exceeds the rate");
}

}  // namespace detail

struct ComputabilityReport {
    bool algebraic = false;
    std::optional<bool> exhaustive;
    std::string failure;

    bool ok() const { return algebraic && exhaustive.value_or(true); }
};

/// The decoder output y_rho D B, first R-r coordinates, equals the sum of
/// the messages for every input: H_rho (D B)[:, :R-r] = Z. The exhaustive
/// path simulates every input when q^{Rs} is within the cap.
inline ComputabilityReport check_computability_report(const SecureNetworkCode& sc, const Network& n,
                                                      std::uint64_t cap = kDefaultExhaustiveCap) {
    detail::check_code_shapes(sc, n);
    ComputabilityReport rep;
    const Matrix dec = decoding_matrix(sc);
    const Matrix h_rho = sink_matrix(n, sc.H);
    rep.algebraic = h_rho * dec == detail::message_sum_target(sc);
    if (!rep.algebraic) rep.failure = "decoder output differs from the message sum";

    const std::uint64_t total = input_space_size(sc, cap);
    if (total > cap) return rep;
    const Field& f = sc.field();
    const std::size_t rate = sc.rate(), ell = sc.message_dims(), s = sc.base.num_sources;
    const auto src = secure_source_matrices(sc);
    const auto& ins = n.in_edges(n.sink());
    std::vector<Elem> x(rate * s);
    bool ok = true;
    for (std::uint64_t idx = 0; idx < total && ok; ++idx) {
        detail::decode_digits(idx, f.q(), x);
        const auto y = simulate(sc, n, src, x);
        for (std::size_t a = 0; a < ell && ok; ++a) {
            Elem out = 0, want = 0;
            for (std::size_t k = 0; k < ins.size(); ++k) out = f.add(out, f.mul(y[ins[k]], dec(k, a)));
            for (std::size_t i = 0; i < s; ++i) want = f.add(want, x[i * rate + a]);
            if (out != want) ok = false;
        }
    }
    rep.exhaustive = ok;
    if (!ok && rep.failure.empty()) rep.failure = "simulated decoding differs from the message sum";
    return rep;
}

inline bool check_computability(const SecureNetworkCode& sc, const Network& n,
                                std::uint64_t cap = kDefaultExhaustiveCap) {
    return check_computability_report(sc, n, cap).ok();
}

struct SecurityResult {
    bool secure = true;
    std::optional<EdgeSet> failing_w;
};

/// Rank criterion over every W with |W| <= r.
inline SecurityResult check_security_rank(const SecureNetworkCode& sc, const Network& n, std::size_t r) {
    detail::check_code_shapes(sc, n);
    for (const auto& w : all_wiretap_sets(n, r))
        if (!secure_against(sc, w)) return {false, w};
    return {};
}

/// Counters held at once by the exhaustive security check.
inline constexpr std::uint64_t kExhaustiveTableBudget = std::uint64_t(1) << 24;

/// Enumerates every input and checks that, for each W, the messages are
/// uniform given every observed y_W. With `fast`, only primary W are
/// checked.
inline SecurityResult check_security_exhaustive(const SecureNetworkCode& sc, const Network& n, std::size_t r,
                                                bool fast = false, std::uint64_t cap = kDefaultExhaustiveCap,
                                                std::uint64_t table_budget = kExhaustiveTableBudget) {
    detail::check_code_shapes(sc, n);
    const std::uint64_t total = input_space_size(sc, cap);
    if (total > cap)
        throw Error(ErrorCode::TooLarge, "q^(Rs) exceeds the exhaustive cap of " + std::to_string(cap));
    const Field& f = sc.field();
    const std::size_t rate = sc.rate(), ell = sc.message_dims(), s = sc.base.num_sources;
    std::uint64_t messages = 1;
    for (std::size_t k = 0; k < ell * s; ++k) messages *= f.q();

    const auto family = fast ? primary_wiretap_sets(n, r, false) : all_wiretap_sets(n, r);
    const auto src = secure_source_matrices(sc);

    // Per W: counts of (observed y_W, message). The messages are uniform
    // given y_W iff every observed y_W has equal counts across messages.
    // Dense tables are filled in batches bounded by table_budget counters,
    // one simulation pass per batch; a W whose table alone exceeds the
    // budget is tabulated sparsely in a pass of its own.
    auto table_size = [&](const EdgeSet& w) {
        std::uint64_t size = messages;
        for (std::size_t k = 0; k < w.size() && size <= table_budget; ++k) size *= f.q();
        return size;
    };
    std::vector<Elem> x(rate * s);
    auto for_each_input = [&](auto&& body) {
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            detail::decode_digits(idx, f.q(), x);
            body(simulate(sc, n, src, x), detail::message_index(x, rate, ell, s, f.q()));
        }
    };
    auto uneven = [](const auto* row, std::uint64_t len) {
        return std::any_of(row, row + len, [&](auto c) { return c != row[0]; });
    };

    std::size_t next = 0;
    while (next < family.size()) {
        if (table_size(family[next]) > table_budget) {
            const auto& w = family[next++];
            std::map<std::vector<Elem>, std::vector<std::uint64_t>> table;
            std::vector<Elem> yw;
            for_each_input([&](const std::vector<Elem>& y, std::uint64_t m) {
                yw.clear();
                for (std::size_t e : w) yw.push_back(y[e]);
                auto& counts = table[yw];
                if (counts.empty()) counts.assign(messages, 0);
                ++counts[m];
            });
            for (const auto& [obs, counts] : table)
                if (uneven(counts.data(), messages)) return {false, w};
            continue;
        }
        std::vector<std::size_t> batch, offset;
        std::uint64_t used = 0;
        while (next < family.size() && table_size(family[next]) <= table_budget &&
               used + table_size(family[next]) <= table_budget) {
            batch.push_back(next);
            offset.push_back(used);
            used += table_size(family[next++]);
        }
        std::vector<std::uint32_t> counts(used, 0);
        for_each_input([&](const std::vector<Elem>& y, std::uint64_t m) {
            for (std::size_t b = 0; b < batch.size(); ++b) {
                std::uint64_t key = 0;
                for (std::size_t e : family[batch[b]]) key = key * f.q() + y[e];
                ++counts[offset[b] + key * messages + m];
            }
        });
        for (std::size_t b = 0; b < batch.size(); ++b) {
            const std::uint64_t end = b + 1 < batch.size() ? offset[b + 1] : used;
            for (std::uint64_t at = offset[b]; at < end; at += messages)
                if (uneven(&counts[at], messages)) return {false, family[batch[b]]};
        }
    }
    return {};
}

struct VerifyOptions {
    bool exhaustive = true;  // run the brute-force checks when within the cap
    bool fast = false;
    std::uint64_t cap = kDefaultExhaustiveCap;
};

struct VerifyReport {
    bool computable = false;
    std::optional<bool> computable_exhaustive;
    bool secure_rank = false;
    std::optional<bool> secure_exhaustive;
    std::optional<EdgeSet> failing_w;
    std::string failure;
    std::size_t ell = 0;  // rate = ell / n
    std::size_t n = 1;
    std::size_t upper = 0;
    bool bound_consistent = false;

    bool all_ok() const {
        return computable && secure_rank && secure_exhaustive.value_or(true) && bound_consistent;
    }
};

inline VerifyReport verify(const SecureNetworkCode& sc, const Network& n, std::size_t r, const VerifyOptions& opt = {}) {
    VerifyReport rep;
    const auto comp = check_computability_report(sc, n, opt.exhaustive ? opt.cap : 0);
    rep.computable = comp.ok();
    rep.computable_exhaustive = comp.exhaustive;
    if (!comp.ok()) rep.failure = comp.failure;

    const auto sr = check_security_rank(sc, n, r);
    rep.secure_rank = sr.secure;
    if (!sr.secure) {
        rep.failing_w = sr.failing_w;
        if (rep.failure.empty()) rep.failure = "wiretap set leaks message information (rank)";
    }
    if (opt.exhaustive && input_space_size(sc, opt.cap) <= opt.cap) {
        const auto se = check_security_exhaustive(sc, n, r, opt.fast, opt.cap);
        rep.secure_exhaustive = se.secure;
        if (!se.secure) {
            if (!rep.failing_w) rep.failing_w = se.failing_w;
            if (rep.failure.empty()) rep.failure = "wiretap set leaks message information (exhaustive)";
        }
    }
    rep.ell = sc.message_dims();
    rep.n = 1;
    rep.upper = upper_bound(n, r).upper;
    rep.bound_consistent = rep.ell <= rep.upper * rep.n;
    if (!rep.bound_consistent && rep.failure.empty()) rep.failure = "rate exceeds the upper bound";
    return rep;
}

}  // namespace snfc
