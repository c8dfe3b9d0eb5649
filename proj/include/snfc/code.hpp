#pragma once

// Linear codes for computing the algebraic sum: a rate-R multicast code on
// the reversed network, its transpose as an (R,1) sum code, and the
// (R-r,1) secure code obtained by mixing each source's input with B.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "snfc/capacity_bounds.hpp"
#include "snfc/cuts.hpp"
#include "snfc/error.hpp"
#include "snfc/gf.hpp"
#include "snfc/network.hpp"

namespace snfc {

using gf::Elem;
using gf::Field;
using gf::Matrix;

struct ReversedMulticastCode {
    Field field;
    std::size_t rate = 0;
    /// K_v per node: rows indexed by Out(v), columns by In(v) (both in edge
    /// order). For the sink the rows are the R imaginary input edges.
    std::vector<Matrix> local_kernels;
    Matrix global_kernels;                // R x |E|, column e is f_e
    std::vector<Matrix> decode_matrices;  // F_i, R x |Out(sigma_i)|
    std::vector<Matrix> right_inverses;   // K_i, |Out(sigma_i)| x R
};

struct SumNetworkCode {
    Field field;
    std::size_t rate = 0;
    std::size_t num_sources = 0;
    std::vector<Matrix> source_matrices;  // A_i, R x |E|, nonzero only on Out(sigma_i)
    Matrix local;                         // A, |E| x |E|, entry (d, e) = a_{d,e}
    Matrix global;                        // G, Rs x |E|, column e is g_e
    Matrix decoder;                       // D, |In(rho)| x R

    /// g_e^{(i)} for e in the columns listed, as an R x |cols| matrix.
    Matrix block(std::size_t i, const EdgeSet& cols) const {
        Matrix out(field, rate, cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k)
            for (std::size_t a = 0; a < rate; ++a) out(a, k) = global(i * rate + a, cols[k]);
        return out;
    }
};

struct SecureNetworkCode {
    SumNetworkCode base;
    std::size_t r = 0;
    Matrix B;  // R x R
    Matrix H;  // Rs x |E|, column e is h_e

    std::size_t rate() const { return base.rate; }
    std::size_t message_dims() const { return base.rate - r; }
    const Field& field() const { return base.field; }
};

namespace detail {

/// A subspace of F^n kept as reduced row echelon rows.
class Span {
public:
    Span(Field f, std::size_t n) : f_(std::move(f)), n_(n) {}

    std::size_t dim() const { return rows_.size(); }

    /// Residue of v after elimination against the basis.
    std::vector<Elem> reduce(std::vector<Elem> v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Elem c = v[pivots_[k]];
            if (!c) continue;
            for (std::size_t j = 0; j < n_; ++j) v[j] = f_.sub(v[j], f_.mul(c, rows_[k][j]));
        }
        return v;
    }

    bool contains(const std::vector<Elem>& v) const {
        const auto res = reduce(v);
        return std::all_of(res.begin(), res.end(), [](Elem x) { return x == 0; });
    }

    void add(const std::vector<Elem>& v) {
        auto res = reduce(v);
        std::size_t p = 0;
        while (p < n_ && res[p] == 0) ++p;
        if (p == n_) return;
        const Elem inv = f_.inv(res[p]);
        for (auto& x : res) x = f_.mul(x, inv);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Elem c = rows_[k][p];
            if (!c) continue;
            for (std::size_t j = 0; j < n_; ++j) rows_[k][j] = f_.sub(rows_[k][j], f_.mul(c, res[j]));
        }
        rows_.push_back(std::move(res));
        pivots_.push_back(p);
    }

    const std::vector<std::vector<Elem>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Canonical form: rows sorted by pivot. Equal keys mean equal subspaces.
    std::vector<std::vector<Elem>> key() const {
        auto k = rows_;
        std::sort(k.begin(), k.end(), [](const auto& a, const auto& b) {
            return std::find_if(a.begin(), a.end(), [](Elem x) { return x != 0; }) - a.begin() <
                   std::find_if(b.begin(), b.end(), [](Elem x) { return x != 0; }) - b.begin();
        });
        return k;
    }

private:
    Field f_;
    std::size_t n_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Lexicographically first vector of F^n (first coordinate most
/// significant) lying in none of the given subspaces, or nullopt if they
/// cover F^n. Depth-first over prefixes. Each subspace tracks the partial
/// combination of its echelon rows that matches the prefix; once none
/// exists the subspace is dropped for that subtree, and a prefix is dead
/// when a remaining subspace has pivots on every free coordinate.
/// Throws TooLarge after `budget` visited prefixes (0 means unlimited).
inline std::optional<std::vector<Elem>> first_outside(const Field& f, std::size_t n, std::vector<Span> avoid,
                                                      std::uint64_t budget = 0) {
    std::sort(avoid.begin(), avoid.end(), [](const Span& a, const Span& b) { return a.key() < b.key(); });
    avoid.erase(std::unique(avoid.begin(), avoid.end(), [](const Span& a, const Span& b) { return a.key() == b.key(); }),
                avoid.end());
    const std::size_t na = avoid.size();
    // pivot_row[k][t]: echelon row of subspace k with pivot t, or -1.
    // full_tail[k][t]: every coordinate t..n-1 is a pivot of subspace k.
    std::vector<std::vector<int>> pivot_row(na, std::vector<int>(n, -1));
    std::vector<std::vector<bool>> full_tail(na, std::vector<bool>(n + 1, true));
    for (std::size_t k = 0; k < na; ++k) {
        for (std::size_t i = 0; i < avoid[k].pivots().size(); ++i) pivot_row[k][avoid[k].pivots()[i]] = static_cast<int>(i);
        for (std::size_t t = n; t-- > 0;) full_tail[k][t] = full_tail[k][t + 1] && pivot_row[k][t] >= 0;
    }
    struct Live {
        std::size_t k;
        std::vector<Elem> comb;  // combination of rows agreeing with the prefix
    };
    std::vector<Elem> v(n, 0);
    std::uint64_t visited = 0;
    std::function<bool(std::size_t, const std::vector<Live>&)> search = [&](std::size_t depth,
                                                                           const std::vector<Live>& live) {
        if (budget && ++visited > budget)
            throw Error(ErrorCode::TooLarge, "search for a vector outside " + std::to_string(na) +
                                                 " subspaces exceeded " + std::to_string(budget) + " prefixes");
        for (const auto& l : live)
            if (full_tail[l.k][depth]) return false;
        if (depth == n) return true;
        std::vector<Live> next;
        next.reserve(live.size());
        for (Elem x = 0; x < f.q(); ++x) {
            v[depth] = x;
            next.clear();
            for (const auto& l : live) {
                const int row = pivot_row[l.k][depth];
                if (row < 0) {
                    if (l.comb[depth] == x) next.push_back(l);
                    continue;
                }
                Live m = l;
                const Elem c = f.sub(x, l.comb[depth]);
                if (c) {
                    const auto& basis = avoid[l.k].rows()[static_cast<std::size_t>(row)];
                    for (std::size_t t = depth; t < n; ++t) m.comb[t] = f.add(m.comb[t], f.mul(c, basis[t]));
                }
                next.push_back(std::move(m));
            }
            if (search(depth + 1, next)) return true;
        }
        v[depth] = 0;
        return false;
    };
    std::vector<Live> all;
    for (std::size_t k = 0; k < na; ++k) all.push_back({k, std::vector<Elem>(n, 0)});
    if (search(0, all)) return v;
    return std::nullopt;
}

/// Position of e within a sorted edge list.
inline std::size_t index_in(const std::vector<std::size_t>& list, std::size_t e) {
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), e) - list.begin());
}

}  // namespace detail

/// Global vectors of a sum code from its local description, edge by edge
/// in the edge order: g_e^{(i)} = A_i 1_e + sum_d a_{d,e} g_d^{(i)}.
inline Matrix global_vectors(const Network& n, std::size_t rate, const std::vector<Matrix>& source_matrices,
                             const Matrix& local) {
    const Field& f = local.field();
    const std::size_t s = n.num_sources();
    Matrix g(f, rate * s, n.num_edges());
    for (std::size_t e : n.order()) {
        const std::size_t tail = n.edge(e).tail;
        if (auto i = n.source_ordinal(tail)) {
            for (std::size_t a = 0; a < rate; ++a) g(*i * rate + a, e) = source_matrices[*i](a, e);
            continue;
        }
        for (std::size_t d : n.in_edges(tail)) {
            const Elem c = local(d, e);
            if (!c) continue;
            for (std::size_t row = 0; row < g.rows(); ++row) g(row, e) = f.add(g(row, e), f.mul(c, g(row, d)));
        }
    }
    return g;
}

/// Checks that a local description fits the network: A_i lives on
/// Out(sigma_i), a_{d,e} only on adjacent pairs, D has one row per In(rho).
inline void check_shapes(const Network& n, const SumNetworkCode& c) {
    const std::size_t ne = n.num_edges();
    auto bad = [](const std::string& what) { throw Error(ErrorCode::ShapeMismatch, what); };
    if (c.num_sources != n.num_sources() || c.source_matrices.size() != n.num_sources())
        bad("code has " + std::to_string(c.source_matrices.size()) + " source matrices for " +
            std::to_string(n.num_sources()) + " sources");
    for (std::size_t i = 0; i < c.source_matrices.size(); ++i) {
        const Matrix& a = c.source_matrices[i];
        if (a.rows() != c.rate || a.cols() != ne) bad("source matrix " + std::to_string(i) + " is " + a.shape());
        for (std::size_t e = 0; e < ne; ++e)
            if (n.edge(e).tail != n.source(i))
                for (std::size_t k = 0; k < c.rate; ++k)
                    if (a(k, e)) bad("source matrix " + std::to_string(i) + " uses edge '" + n.edge(e).id + "'");
    }
    if (c.local.rows() != ne || c.local.cols() != ne) bad("local coefficient matrix is " + c.local.shape());
    for (std::size_t d = 0; d < ne; ++d)
        for (std::size_t e = 0; e < ne; ++e)
            if (c.local(d, e) && n.edge(d).head != n.edge(e).tail)
                bad("coefficient on non-adjacent pair ('" + n.edge(d).id + "', '" + n.edge(e).id + "')");
    if (c.global.rows() != c.rate * n.num_sources() || c.global.cols() != ne)
        bad("global matrix is " + c.global.shape());
    if (c.decoder.rows() != n.in_edges(n.sink()).size() || c.decoder.cols() != c.rate)
        bad("decoder is " + c.decoder.shape());
}

/// G_rho: the global vectors of the sink's in-edges, Rs x |In(rho)|.
inline Matrix sink_matrix(const Network& n, const Matrix& global) { return global.select_cols(n.in_edges(n.sink())); }

/// The s-fold vertical stack of I_R.
inline Matrix stacked_identity(const Field& f, std::size_t rate, std::size_t s) {
    Matrix out(f, rate * s, rate);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t a = 0; a < rate; ++a) out(i * rate + a, a) = 1;
    return out;
}

/// Rate-R multicast code from the sink to every source on the reversed
/// network, with local kernels drawn from a seeded generator and redrawn
/// until every source can decode.
inline ReversedMulticastCode multicast_code_reversed(const Network& n, std::size_t rate, const Field& field,
                                                     std::uint64_t seed) {
    const std::size_t cm = c_min(n);
    if (rate > cm)
        throw Error(ErrorCode::RateExceedsMinCut, "rate " + std::to_string(rate) + " exceeds C_min = " + std::to_string(cm));
    std::mt19937_64 rng(seed);
    const std::size_t ne = n.num_edges();
    const std::size_t rho = n.sink();
    for (int attempt = 0; attempt < 64; ++attempt) {
        ReversedMulticastCode rc;
        rc.field = field;
        rc.rate = rate;
        for (std::size_t v = 0; v < n.num_nodes(); ++v) {
            const std::size_t rows = v == rho ? rate : n.out_edges(v).size();
            Matrix k(field, rows, n.in_edges(v).size());
            for (std::size_t a = 0; a < k.rows(); ++a)
                for (std::size_t b = 0; b < k.cols(); ++b) k(a, b) = static_cast<Elem>(rng() % field.q());
            rc.local_kernels.push_back(std::move(k));
        }
        rc.global_kernels = Matrix(field, rate, ne);
        const auto& ord = n.order();
        for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
            const std::size_t e = *it;
            const std::size_t h = n.edge(e).head;
            const Matrix& k = rc.local_kernels[h];
            const std::size_t col = detail::index_in(n.in_edges(h), e);
            if (h == rho) {
                for (std::size_t a = 0; a < rate; ++a) rc.global_kernels(a, e) = k(a, col);
                continue;
            }
            const auto& outs = n.out_edges(h);
            for (std::size_t row = 0; row < outs.size(); ++row) {
                const Elem c = k(row, col);
                if (!c) continue;
                for (std::size_t a = 0; a < rate; ++a)
                    rc.global_kernels(a, e) =
                        field.add(rc.global_kernels(a, e), field.mul(c, rc.global_kernels(a, outs[row])));
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < n.num_sources() && ok; ++i) {
            Matrix fi = rc.global_kernels.select_cols(n.out_edges(n.source(i)));
            auto ki = solve_right(fi, Matrix::identity(field, rate));
            if (!ki) {
                ok = false;
                break;
            }
            rc.decode_matrices.push_back(std::move(fi));
            rc.right_inverses.push_back(std::move(*ki));
        }
        if (ok) return rc;
    }
    throw Error(ErrorCode::FieldTooSmallForMulticast,
                "no decodable rate-" + std::to_string(rate) + " code over GF(" + field.to_string() + ") in 64 draws");
}

/// Transposes a reversed multicast code into a sum code on n:
/// A_i = K_i^T on Out(sigma_i), a_{d,e} = k_{e,d}, D = K_rho^T.
inline SumNetworkCode reverse_to_sum_code(const ReversedMulticastCode& rc, const Network& n) {
    const Field& f = rc.field;
    const std::size_t ne = n.num_edges(), s = n.num_sources(), rate = rc.rate;
    if (rc.right_inverses.size() != s || rc.local_kernels.size() != n.num_nodes())
        throw Error(ErrorCode::ReversalInconsistent, "multicast code does not match the network");
    SumNetworkCode c;
    c.field = f;
    c.rate = rate;
    c.num_sources = s;
    for (std::size_t i = 0; i < s; ++i) {
        Matrix a(f, rate, ne);
        const auto& outs = n.out_edges(n.source(i));
        const Matrix& ki = rc.right_inverses[i];
        if (ki.rows() != outs.size() || ki.cols() != rate)
            throw Error(ErrorCode::ReversalInconsistent, "right inverse of source " + std::to_string(i) + " is " + ki.shape());
        for (std::size_t k = 0; k < outs.size(); ++k)
            for (std::size_t b = 0; b < rate; ++b) a(b, outs[k]) = ki(k, b);
        c.source_matrices.push_back(std::move(a));
    }
    c.local = Matrix(f, ne, ne);
    for (std::size_t e = 0; e < ne; ++e) {
        const std::size_t v = n.edge(e).tail;
        if (n.source_ordinal(v)) continue;
        const Matrix& k = rc.local_kernels[v];
        const std::size_t row = detail::index_in(n.out_edges(v), e);
        const auto& ins = n.in_edges(v);
        for (std::size_t col = 0; col < ins.size(); ++col) c.local(ins[col], e) = k(row, col);
    }
    c.global = global_vectors(n, rate, c.source_matrices, c.local);
    c.decoder = rc.local_kernels[n.sink()].transpose();
    if (!(sink_matrix(n, c.global) * c.decoder == stacked_identity(f, rate, s)))
        throw Error(ErrorCode::ReversalInconsistent, "G_rho D is not the stacked identity");
    return c;
}

/// Per-source spans of the global vectors observed on w.
inline std::vector<std::vector<std::vector<Elem>>> observed_vectors(const SumNetworkCode& c, const EdgeSet& w) {
    std::vector<std::vector<std::vector<Elem>>> out(c.num_sources);
    for (std::size_t i = 0; i < c.num_sources; ++i)
        for (std::size_t e : w) {
            std::vector<Elem> v(c.rate);
            for (std::size_t a = 0; a < c.rate; ++a) v[a] = c.global(i * c.rate + a, e);
            out[i].push_back(std::move(v));
        }
    return out;
}

/// Greedy choice of B = [b_1 .. b_R]. For j <= R-r, b_j is the first vector
/// in lexicographic order (first coordinate most significant) outside every
/// span{g_e^{(i)} : e in W} + span{b_1 .. b_{j-1}}; the remaining columns
/// only need to keep B invertible. A nonzero `budget` bounds each column
/// search (TooLarge when exceeded); FieldTooSmall always means no column
/// exists.
inline Matrix choose_B(const SumNetworkCode& c, std::size_t r, const std::vector<EdgeSet>& family,
                       std::uint64_t budget = 0) {
    const Field& f = c.field;
    const std::size_t rate = c.rate;
    if (r > rate) throw Error(ErrorCode::RateInfeasible, "r exceeds the rate");
    std::vector<detail::Span> blocked;
    for (const auto& w : family) {
        if (w.empty()) continue;
        for (const auto& vecs : observed_vectors(c, w)) {
            detail::Span sp(f, rate);
            for (const auto& v : vecs) sp.add(v);
            blocked.push_back(std::move(sp));
        }
    }
    detail::Span chosen(f, rate);
    Matrix b(f, rate, rate);
    for (std::size_t j = 0; j < rate; ++j) {
        std::vector<detail::Span> avoid{chosen};
        if (j < rate - r)
            for (const auto& sp : blocked) {
                avoid.push_back(sp);
                for (std::size_t k = 0; k < j; ++k) avoid.back().add(b.col_values(k));
            }
        const auto pick = detail::first_outside(f, rate, std::move(avoid), budget);
        if (!pick)
            throw Error(ErrorCode::FieldTooSmall, "no admissible column " + std::to_string(j + 1) + " of B over GF(" +
                                                      f.to_string() + ")");
        for (std::size_t a = 0; a < rate; ++a) b(a, j) = (*pick)[a];
        chosen.add(*pick);
    }
    return b;
}

/// h_e^{(i)} = B^{-1} g_e^{(i)} for every source block.
inline Matrix secure_global_vectors(const SumNetworkCode& c, const Matrix& b_inv) {
    return block_diag(b_inv, c.num_sources) * c.global;
}

inline SecureNetworkCode secure_code(const SumNetworkCode& c, const Matrix& b, std::size_t r) {
    if (r > c.rate) throw Error(ErrorCode::RateInfeasible, "r exceeds the rate");
    if (b.rows() != c.rate || b.cols() != c.rate) throw Error(ErrorCode::ShapeMismatch, "B is " + b.shape());
    Matrix b_inv;
    try {
        b_inv = inverse(b);
    } catch (const Error&) {
        throw Error(ErrorCode::SingularB, "B is not invertible");
    }
    SecureNetworkCode sc;
    sc.base = c;
    sc.r = r;
    sc.B = b;
    sc.H = secure_global_vectors(c, b_inv);
    return sc;
}

/// Source matrices of the secure code: B^{-1} A_i.
inline std::vector<Matrix> secure_source_matrices(const SecureNetworkCode& sc) {
    const Matrix b_inv = inverse(sc.B);
    std::vector<Matrix> out;
    for (const auto& a : sc.base.source_matrices) out.push_back(b_inv * a);
    return out;
}

/// Sink-side linear map: y_rho D B, keeping the first R-r coordinates.
inline Matrix decoding_matrix(const SecureNetworkCode& sc) {
    const Matrix db = sc.base.decoder * sc.B;
    std::vector<std::size_t> keep(sc.message_dims());
    for (std::size_t k = 0; k < keep.size(); ++k) keep[k] = k;
    return db.select_cols(keep);
}

/// All W within E with |W| <= r, the empty set first, each size in
/// lexicographic order.
inline std::vector<EdgeSet> all_wiretap_sets(const Network& n, std::size_t r) {
    std::vector<EdgeSet> out{{}};
    for (std::size_t k = 1; k <= r && k <= n.num_edges(); ++k)
        detail::for_each_combination(n.num_edges(), k, [&](const std::vector<std::size_t>& w) { out.push_back(w); });
    return out;
}

/// rank([H_W Gamma]) = rank(H_W) + (R-r)s, where Gamma selects the message
/// coordinates of every source.
inline bool secure_against(const SecureNetworkCode& sc, const EdgeSet& w) {
    const std::size_t rate = sc.rate(), s = sc.base.num_sources, ell = sc.message_dims();
    const Matrix hw = sc.H.select_cols(w);
    Matrix gamma(sc.field(), rate * s, ell * s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t a = 0; a < ell; ++a) gamma(i * rate + a, i * ell + a) = 1;
    return rank(hstack(hw, gamma)) == rank(hw) + ell * s;
}

/// Prefixes choose_B may visit per column inside construct before the
/// field is given up as inconclusive and the next one is tried.
inline constexpr std::uint64_t kChooseBBudget = std::uint64_t(1) << 16;

struct ConstructOptions {
    std::optional<std::size_t> rate;
    std::optional<Field> field;
    std::uint64_t base_prime = 2;
    std::uint64_t seed = 1;
};

struct ConstructResult {
    SecureNetworkCode code;
    std::size_t fields_tried = 0;
    std::string family;  // which wiretap family B was chosen against
};

/// End-to-end construction. Fields GF(p^L) are tried for L = 1, 2, ...
/// (from the requested field upward) until the pipeline yields a code that
/// is secure against every W with |W| <= r.
inline ConstructResult construct_report(const Network& n, std::size_t r, const ConstructOptions& opt = {}) {
    const std::size_t cm = c_min(n);
    const std::size_t rate = opt.rate.value_or(cm);
    if (rate > cm || r > rate)
        throw Error(ErrorCode::RateInfeasible,
                    "need r <= R <= C_min; got r = " + std::to_string(r) + ", R = " + std::to_string(rate) +
                        ", C_min = " + std::to_string(cm));
    if (rate == r)
        throw Error(ErrorCode::RateInfeasible, "R - r = 0: no positive secure rate from this construction (R = " +
                                                   std::to_string(rate) + ", r = " + std::to_string(r) + ")");
    const std::uint64_t p = opt.field ? opt.field->p() : opt.base_prime;
    unsigned degree = opt.field ? opt.field->m() : 1;

    const auto all_w = all_wiretap_sets(n, r);
    const std::vector<std::pair<std::string, std::vector<EdgeSet>>> families = {
        {"primary_exact", primary_wiretap_sets(n, r, true)},
        {"primary", primary_wiretap_sets(n, r, false)},
        {"all", all_w},
    };
    ConstructResult res;
    for (;; ++degree) {
        std::uint64_t q = 1;
        for (unsigned k = 0; k < degree && q <= gf::kMaxFieldSize; ++k) q *= p;
        if (q > gf::kMaxFieldSize) break;
        const Field f = Field::make(p, degree);
        ++res.fields_tried;
        SumNetworkCode base;
        try {
            base = reverse_to_sum_code(multicast_code_reversed(n, rate, f, opt.seed), n);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::FieldTooSmallForMulticast) continue;
            throw;
        }
        if (r == 0) {
            res.code = secure_code(base, Matrix::identity(f, rate), 0);
            res.family = "none";
            return res;
        }
        for (const auto& [name, fam] : families) {
            Matrix b;
            try {
                b = choose_B(base, r, fam, kChooseBBudget);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::FieldTooSmall || e.code() == ErrorCode::TooLarge) break;
                throw;
            }
            auto sc = secure_code(base, b, r);
            if (std::all_of(all_w.begin(), all_w.end(), [&](const EdgeSet& w) { return secure_against(sc, w); })) {
                res.code = std::move(sc);
                res.family = name;
                return res;
            }
        }
    }
    throw Error(ErrorCode::ConstructionFailed,
                "no secure code found over GF(" + std::to_string(p) + "^L) with q <= " + std::to_string(gf::kMaxFieldSize));
}

inline SecureNetworkCode construct(const Network& n, std::size_t r, const ConstructOptions& opt = {}) {
    return construct_report(n, r, opt).code;
}

/// A GF(p^L) code viewed as an ((R-r)L, L) code over GF(p): every entry is
/// replaced by its L x L multiplication matrix.
struct LiftedCode {
    Field base;
    std::size_t ell = 0;
    std::size_t n = 0;
    std::vector<Matrix> source_matrices;  // expanded B^{-1} A_i
    Matrix local;                         // expanded A
    Matrix decoder;                       // expanded D B, first R-r columns
};

inline LiftedCode lift_extension(const SecureNetworkCode& sc) {
    const Field& f = sc.field();
    if (f.m() == 1) throw Error(ErrorCode::PrimeFieldInput, "code is already over a prime field");
    LiftedCode out;
    out.base = Field::make(f.p(), 1);
    out.ell = sc.message_dims() * f.m();
    out.n = f.m();
    for (const auto& a : secure_source_matrices(sc)) out.source_matrices.push_back(companion_expand(a));
    out.local = companion_expand(sc.base.local);
    out.decoder = companion_expand(decoding_matrix(sc));
    return out;
}

}  // namespace snfc
