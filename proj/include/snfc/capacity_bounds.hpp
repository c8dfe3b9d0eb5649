#pragma once

// Upper and lower bounds on the secure computing capacity of an algebraic
// sum under an r-edge wiretapper, plus closed-form exactness conditions and
// an exhaustive (W, C) oracle for small networks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snfc/cuts.hpp"
#include "snfc/error.hpp"
#include "snfc/network.hpp"

namespace snfc {

enum class ExactReason { none, r_zero, cmin_equals_cminbar, zero_capacity, cut_structure };

inline constexpr std::string_view reason_name(ExactReason r) {
    switch (r) {
        case ExactReason::none: return "none";
        case ExactReason::r_zero: return "r_zero";
        case ExactReason::cmin_equals_cminbar: return "cmin_equals_cminbar";
        case ExactReason::zero_capacity: return "zero_capacity";
        case ExactReason::cut_structure: return "cut_structure";
    }
    return "none";
}

struct ExactCapacity {
    std::size_t value = 0;
    ExactReason reason = ExactReason::none;
};

struct BoundReport {
    std::size_t r = 0;
    std::size_t upper = 0;
    std::size_t lower = 0;
    std::size_t c_min = 0;
    std::size_t c_min_bar = 0;
    EdgeSet witness_w;
    EdgeSet witness_cut;
    std::optional<ExactCapacity> exact;
};

struct OmegaResult {
    std::size_t value = 0;
    EdgeSet cut;  // C*_W, inside the residual graph G_W
};

/// Omega(W) = |C*_W|, the primary min cut separating rho from D_W in G_W.
/// Omega of the empty set, or of a set no source reaches, is C_min.
inline OmegaResult omega_report(const Network& n, const EdgeSet& w) {
    n.check_edges(w);
    const auto rs = w.empty() ? ReachSets{} : reach_sets(n, w);
    if (rs.d.empty()) {
        // Cut of the first source attaining C_min.
        OmegaResult best{static_cast<std::size_t>(-1), {}};
        for (std::size_t i = 0; i < n.num_sources(); ++i) {
            auto c = min_cut(n, {n.source(i)}, n.sink());
            if (c.capacity < best.value) best = {c.capacity, c.cut_edges};
        }
        return best;
    }
    detail::CutQuery q;
    q.graph = &n.graph();
    q.from = source_nodes(n, rs.d);
    q.to_node = n.sink();
    q.removed.assign(n.num_edges(), false);
    for (std::size_t e : w) q.removed[e] = true;
    const auto raw = detail::solve_cut(q);
    return {raw.capacity, raw.cut};
}

inline std::size_t omega(const Network& n, const EdgeSet& w) { return omega_report(n, w).value; }

namespace detail {

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(static_cast<const std::vector<std::size_t>&>(idx));
        if (k == 0) return;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (std::uint64_t(1) << 40)) return r;
    }
    return r;
}

}  // namespace detail

/// Primary wiretap sets of size <= r (W'_r, including the empty set) or of
/// size exactly r (W*_r), sorted lexicographically by edge index sequence.
inline std::vector<EdgeSet> primary_wiretap_sets(const Network& n, std::size_t r, bool exact_size) {
    std::vector<EdgeSet> out;
    if (!exact_size || r == 0) out.push_back({});
    for (std::size_t k = exact_size ? std::max<std::size_t>(r, 1) : 1; k <= r && k <= n.num_edges(); ++k)
        detail::for_each_combination(n.num_edges(), k, [&](const std::vector<std::size_t>& w) {
            if (is_primary(n, w)) out.push_back(w);
        });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t lower_bound(const Network& n, std::size_t r) {
    const std::size_t cm = c_min(n);
    return r >= cm ? 0 : cm - r;
}

inline bool zero_capacity(const Network& n, std::size_t r) { return r >= c_min_bar(n); }

namespace detail {

/// Some source attaining C_min has a minimum cut C containing r edges that
/// no source outside I_C reaches.
inline bool cut_structure_holds(const Network& n, std::size_t r, std::size_t cm) {
    if (binomial(n.num_edges(), cm) > 5'000'000) return false;
    for (std::size_t i = 0; i < n.num_sources(); ++i) {
        if (min_cut(n, {n.source(i)}, n.sink()).capacity != cm) continue;
        bool found = false;
        for_each_combination(n.num_edges(), cm, [&](const std::vector<std::size_t>& c) {
            if (found) return;
            std::vector<bool> removed(n.num_edges(), false);
            for (std::size_t e : c) removed[e] = true;
            if (n.graph().reachable({n.source(i)}, removed)[n.sink()]) return;
            const auto rs = reach_sets(n, c);
            std::size_t hidden = 0;
            for (std::size_t e : c) {
                bool reached_outside = false;
                for (std::size_t s = 0; s < n.num_sources() && !reached_outside; ++s)
                    if (!std::binary_search(rs.i.begin(), rs.i.end(), s) && n.source_reaches_edge(s, e))
                        reached_outside = true;
                if (!reached_outside) ++hidden;
            }
            if (hidden >= r) found = true;
        });
        if (found) return true;
    }
    return false;
}

}  // namespace detail

inline std::optional<ExactCapacity> exact_capacity(const Network& n, std::size_t r) {
    const std::size_t cm = c_min(n);
    const std::size_t cb = c_min_bar(n);
    if (r == 0) return ExactCapacity{cm, ExactReason::r_zero};
    if (cm == cb) return ExactCapacity{r < cm ? cm - r : 0, ExactReason::cmin_equals_cminbar};
    if (r >= cb) return ExactCapacity{0, ExactReason::zero_capacity};
    if (r <= cm && detail::cut_structure_holds(n, r, cm)) return ExactCapacity{cm - r, ExactReason::cut_structure};
    return std::nullopt;
}

/// min over W in W'_r of Omega(W), with the bracket and exactness checks.
inline BoundReport upper_bound(const Network& n, std::size_t r) {
    BoundReport rep;
    rep.r = r;
    rep.c_min = c_min(n);
    rep.c_min_bar = c_min_bar(n);
    rep.lower = r >= rep.c_min ? 0 : rep.c_min - r;
    bool have = false;
    for (const auto& w : primary_wiretap_sets(n, std::min(r, n.num_edges()), false)) {
        const auto om = omega_report(n, w);
        if (!have || om.value < rep.upper) {
            rep.upper = om.value;
            rep.witness_w = w;
            rep.witness_cut = om.cut;
            have = true;
        }
    }
    rep.exact = exact_capacity(n, r);
    return rep;
}

/// Direct evaluation of min |C| - |W| over cut sets C and wiretap sets
/// W subset of C with |W| <= r and D_W within I_C. Exponential in |E|.
inline std::size_t upper_bound_oracle(const Network& n, std::size_t r) {
    const std::size_t ne = n.num_edges();
    if (ne > 16) throw Error(ErrorCode::TooLarge, std::to_string(ne) + " edges; the oracle is capped at 16");
    const std::size_t s = n.num_sources();

    std::vector<std::uint32_t> reached_by(ne, 0);  // sources reaching each edge
    for (std::size_t e = 0; e < ne; ++e)
        for (std::size_t i = 0; i < s; ++i)
            if (n.source_reaches_edge(i, e)) reached_by[e] |= 1u << i;

    std::size_t best = ne;  // C = E with W empty is always a cut set
    for (std::uint32_t c = 1; c < (1u << ne); ++c) {
        const std::size_t csize = static_cast<std::size_t>(std::popcount(c));
        if (csize > best + r) continue;
        std::vector<bool> removed(ne, false);
        for (std::size_t e = 0; e < ne; ++e) removed[e] = (c >> e) & 1u;
        std::uint32_t isolated = 0;
        for (std::size_t i = 0; i < s; ++i)
            if (!n.graph().reachable({n.source(i)}, removed)[n.sink()]) isolated |= 1u << i;
        if (!isolated) continue;
        // Every W within C, enumerated as submasks.
        for (std::uint32_t w = c;; w = (w - 1) & c) {
            const std::size_t wsize = static_cast<std::size_t>(std::popcount(w));
            if (wsize <= r) {
                std::uint32_t dw = 0;
                for (std::size_t e = 0; e < ne; ++e)
                    if ((w >> e) & 1u) dw |= reached_by[e];
                if ((dw & ~isolated) == 0) best = std::min(best, csize - wsize);
            }
            if (w == 0) break;
        }
    }
    return best;
}

}  // namespace snfc
