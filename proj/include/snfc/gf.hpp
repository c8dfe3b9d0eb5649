#pragma once

// Exact arithmetic over GF(p^m) and the dense linear algebra built on it.
//
// Elements are stored as integers in [0, q): the base-p digits of the integer
// are the polynomial-basis coefficients, lowest degree first. Multiplication
// goes through exp/log tables built once per field.

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "snfc/error.hpp"

namespace snfc::gf {

using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxFieldSize = 1u << 16;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Poly = std::vector<Elem>;  // low-to-high coefficients over GF(p)

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Elem inv_mod_p(Elem a, Elem p) {
    // p is small; Fermat.
    std::uint64_t r = 1, b = a % p;
    for (Elem e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<Elem>(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
inline Poly poly_mod(Poly a, const Poly& b, Elem p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const Elem lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Elem factor = static_cast<Elem>(std::uint64_t(a.back()) * lead_inv % p);
        for (std::size_t i = 0; i <= db; ++i) {
            const Elem sub = static_cast<Elem>(std::uint64_t(factor) * b[i] % p);
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
        trim(a);
    }
    return a;
}

inline bool is_irreducible(const Poly& f, Elem p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t k = 0; k < count; ++k) {
            Poly g(d + 1);
            std::uint64_t t = k;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<Elem>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

struct FieldData {
    Elem p = 0;
    unsigned m = 0;
    Elem q = 0;
    Poly modulus;             // monic, length m+1
    std::vector<Elem> exp;    // exp[i] = g^i, i in [0, 2(q-1))
    std::vector<Elem> log;    // log[a] for a != 0
    std::vector<Elem> pow_p;  // p^i, i in [0, m]

    Elem add(Elem a, Elem b) const {
        if (p == 2) return a ^ b;
        if (m == 1) return (a + b) % p;
        Elem r = 0;
        for (unsigned i = 0; i < m; ++i) {
            const Elem da = a % p, db = b % p;
            a /= p;
            b /= p;
            r += ((da + db) % p) * pow_p[i];
        }
        return r;
    }

    Elem neg(Elem a) const {
        if (p == 2) return a;
        if (m == 1) return (p - a) % p;
        Elem r = 0;
        for (unsigned i = 0; i < m; ++i) {
            const Elem da = a % p;
            a /= p;
            r += ((p - da) % p) * pow_p[i];
        }
        return r;
    }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp[log[a] + log[b]];
    }

    // Schoolbook polynomial product reduced by the modulus; only used while
    // building the tables.
    Elem slow_mul(Elem a, Elem b) const {
        Poly pa(m, 0), pb(m, 0), prod(2 * m, 0);
        for (unsigned i = 0; i < m; ++i) {
            pa[i] = a % p;
            a /= p;
            pb[i] = b % p;
            b /= p;
        }
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j)
                prod[i + j] = static_cast<Elem>((prod[i + j] + std::uint64_t(pa[i]) * pb[j]) % p);
        Poly r = poly_mod(prod, modulus, p);
        Elem out = 0;
        for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * pow_p[i];
        return out;
    }
};

}  // namespace detail

/// A finite field GF(p^m). Cheap to copy; all copies share one table set.
class Field {
public:
    Field() = default;

    /// Builds GF(p^m) with the lexicographically smallest monic irreducible
    /// modulus, coefficients compared from the constant term upward.
    static Field make(std::uint64_t p, unsigned m) {
        if (m == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be >= 1");
        if (!detail::is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxFieldSize)
                throw Error(ErrorCode::FieldTooLarge,
                            std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
        }

        auto d = std::make_shared<detail::FieldData>();
        d->p = static_cast<Elem>(p);
        d->m = m;
        d->q = static_cast<Elem>(q);
        d->pow_p.resize(m + 1);
        d->pow_p[0] = 1;
        for (unsigned i = 1; i <= m; ++i) d->pow_p[i] = d->pow_p[i - 1] * d->p;

        if (m == 1) {
            d->modulus = {0, 1};
        } else {
            // Candidate k encodes (c0, ..., c_{m-1}) with c0 as the most
            // significant digit, so increasing k is lexicographic order.
            for (std::uint64_t k = 0; k < q; ++k) {
                detail::Poly f(m + 1);
                std::uint64_t t = k;
                for (unsigned i = 0; i < m; ++i) {
                    f[m - 1 - i] = static_cast<Elem>(t % p);
                    t /= p;
                }
                f[m] = 1;
                if (f[0] != 0 && detail::is_irreducible(f, d->p)) {
                    d->modulus = std::move(f);
                    break;
                }
            }
        }

        build_tables(*d);
        Field out;
        out.d_ = std::move(d);
        return out;
    }

    /// Parses "p^m" (or a bare prime "p").
    static Field parse(std::string_view s) {
        const auto caret = s.find('^');
        try {
            const std::string ps(s.substr(0, caret));
            const std::string ms = caret == std::string_view::npos ? "1" : std::string(s.substr(caret + 1));
            std::size_t used = 0;
            const unsigned long long p = std::stoull(ps, &used);
            if (used != ps.size()) throw std::invalid_argument("p");
            const unsigned long m = std::stoul(ms, &used);
            if (used != ms.size()) throw std::invalid_argument("m");
            return make(p, static_cast<unsigned>(m));
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::MalformedInput, "field string '" + std::string(s) + "' is not of the form p^m");
        }
    }

    bool valid() const noexcept { return d_ != nullptr; }
    Elem p() const { return d_->p; }
    unsigned m() const { return d_->m; }
    Elem q() const { return d_->q; }
    const std::vector<Elem>& modulus() const { return d_->modulus; }
    std::string to_string() const { return std::to_string(p()) + "^" + std::to_string(m()); }

    Elem add(Elem a, Elem b) const { return d_->add(a, b); }
    Elem neg(Elem a) const { return d_->neg(a); }
    Elem sub(Elem a, Elem b) const { return d_->add(a, d_->neg(b)); }
    Elem mul(Elem a, Elem b) const { return d_->mul(a, b); }
    Elem inv(Elem a) const {
        if (a == 0) throw Error(ErrorCode::DivideByZero, "inverse of zero");
        return d_->exp[(q() - 1 - d_->log[a]) % (q() - 1)];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// Polynomial-basis coefficients of a, lowest degree first.
    std::vector<Elem> coeffs(Elem a) const {
        std::vector<Elem> c(m());
        for (unsigned i = 0; i < m(); ++i) {
            c[i] = a % p();
            a /= p();
        }
        return c;
    }

    Elem from_coeffs(const std::vector<Elem>& c) const {
        Elem r = 0;
        for (std::size_t i = 0; i < c.size() && i < m(); ++i) r += (c[i] % p()) * d_->pow_p[i];
        return r;
    }

    bool contains(std::uint64_t a) const { return a < q(); }

    friend bool operator==(const Field& a, const Field& b) {
        if (a.d_ == b.d_) return true;
        if (!a.d_ || !b.d_) return false;
        return a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus;
    }

private:
    static void build_tables(detail::FieldData& d) {
        const Elem q = d.q;
        d.exp.assign(2 * (q - 1), 0);
        d.log.assign(q, 0);
        if (q == 2) {
            d.exp = {1, 1};
            return;
        }
        // Smallest generator of the multiplicative group.
        for (Elem g = 2; g < q; ++g) {
            Elem x = 1;
            Elem order = 0;
            do {
                x = d.slow_mul(x, g);
                ++order;
            } while (x != 1 && order < q);
            if (order != q - 1) continue;
            x = 1;
            for (Elem i = 0; i < q - 1; ++i) {
                d.exp[i] = x;
                d.exp[i + q - 1] = x;
                d.log[x] = i;
                x = d.slow_mul(x, g);
            }
            return;
        }
    }

    std::shared_ptr<const detail::FieldData> d_;
};

/// A field element bound to its field.
class Fe {
public:
    Fe(Field f, std::uint64_t value) : f_(std::move(f)), v_(static_cast<Elem>(value)) {
        if (!f_.contains(value))
            throw Error(ErrorCode::MalformedInput, std::to_string(value) + " not in GF(" + f_.to_string() + ")");
    }

    const Field& field() const { return f_; }
    Elem value() const { return v_; }
    std::vector<Elem> coeffs() const { return f_.coeffs(v_); }
    bool is_zero() const { return v_ == 0; }

    friend Fe operator+(const Fe& a, const Fe& b) { return {same(a, b), a.f_.add(a.v_, b.v_)}; }
    friend Fe operator-(const Fe& a, const Fe& b) { return {same(a, b), a.f_.sub(a.v_, b.v_)}; }
    friend Fe operator*(const Fe& a, const Fe& b) { return {same(a, b), a.f_.mul(a.v_, b.v_)}; }
    friend Fe operator/(const Fe& a, const Fe& b) { return {same(a, b), a.f_.div(a.v_, b.v_)}; }
    Fe operator-() const { return {f_, f_.neg(v_)}; }
    Fe inv() const { return {f_, f_.inv(v_)}; }

    friend bool operator==(const Fe& a, const Fe& b) { return a.f_ == b.f_ && a.v_ == b.v_; }
    friend std::ostream& operator<<(std::ostream& os, const Fe& a) { return os << a.v_; }

private:
    static const Field& same(const Fe& a, const Fe& b) {
        if (!(a.f_ == b.f_))
            throw Error(ErrorCode::FieldMismatch, "GF(" + a.f_.to_string() + ") vs GF(" + b.f_.to_string() + ")");
        return a.f_;
    }

    Field f_;
    Elem v_;
};

/// Dense row-major matrix over one field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows) {
        const std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(f, rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
            for (std::size_t j = 0; j < c; ++j) {
                if (!f.contains(rows[i][j]))
                    throw Error(ErrorCode::MalformedInput, std::to_string(rows[i][j]) + " outside field");
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static Matrix column(const Field& f, const std::vector<Elem>& v) {
        Matrix m(f, v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Fe at(std::size_t i, std::size_t j) const { return {f_, (*this)(i, j)}; }

    std::vector<Elem> row(std::size_t i) const {
        return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }
    std::vector<Elem> col_values(std::size_t j) const {
        std::vector<Elem> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Matrix col(std::size_t j) const { return column(f_, col_values(j)); }

    Matrix select_cols(const std::vector<std::size_t>& js) const {
        Matrix m(f_, rows_, js.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < js.size(); ++k) m(i, k) = (*this)(i, js[k]);
        return m;
    }

    Matrix select_rows(std::size_t first, std::size_t count) const {
        Matrix m(f_, count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
        return m;
    }

    Matrix transpose() const {
        Matrix t(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (Elem x : a_)
            if (x) return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        check_field(a, b);
        if (a.cols_ != b.rows_)
            throw Error(ErrorCode::DimensionMismatch, "product of " + a.shape() + " and " + b.shape());
        Matrix c(a.f_, a.rows_, b.cols_);
        const Field& f = a.f_;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Elem x = a(i, k);
                if (!x) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_field(a, b);
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorCode::DimensionMismatch, "sum of " + a.shape() + " and " + b.shape());
        Matrix c(a.f_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.f_.add(a.a_[i], b.a_[i]);
        return c;
    }

    Matrix operator-() const {
        Matrix c(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = f_.neg(a_[i]);
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_ && (a.a_.empty() || a.f_ == b.f_);
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << '[';
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

    static void check_field(const Matrix& a, const Matrix& b) {
        if (!(a.f_ == b.f_)) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
    }

private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
    Matrix::check_field(a, b);
    if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hstack " + a.shape() + " | " + b.shape());
    Matrix c(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    Matrix::check_field(a, b);
    if (a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "vstack " + a.shape() + " / " + b.shape());
    Matrix c(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
    return c;
}

/// s copies of m along the diagonal.
inline Matrix block_diag(const Matrix& m, std::size_t s) {
    Matrix out(m.field(), m.rows() * s, m.cols() * s);
    for (std::size_t b = 0; b < s; ++b)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(b * m.rows() + i, b * m.cols() + j) = m(i, j);
    return out;
}

/// Reduces m to reduced row echelon form in place; returns the pivot columns.
/// Only the first `limit` columns are eligible as pivots.
inline std::vector<std::size_t> rref(Matrix& m, std::size_t limit = static_cast<std::size_t>(-1)) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t ncols = std::min(limit, m.cols());
    for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const Elem inv = f.inv(m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Elem factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return rref(m).size();
}

inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square " + m.shape());
    const std::size_t n = m.rows();
    Matrix aug = hstack(m, Matrix::identity(m.field(), n));
    if (rref(aug, n).size() != n) throw Error(ErrorCode::Singular, "matrix is singular");
    Matrix out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

/// Solves A X = Y. Free variables are set to zero, so the answer is
/// deterministic. Returns nullopt when the system is inconsistent.
inline std::optional<Matrix> solve_right(const Matrix& a, const Matrix& y) {
    if (a.rows() != y.rows())
        throw Error(ErrorCode::DimensionMismatch, "solve " + a.shape() + " X = " + y.shape());
    Matrix::check_field(a, y);
    Matrix aug = hstack(a, y);
    const auto pivots = rref(aug, a.cols());
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
        for (std::size_t j = a.cols(); j < aug.cols(); ++j)
            if (aug(i, j) != 0) return std::nullopt;
    Matrix x(a.field(), a.cols(), y.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t j = 0; j < y.cols(); ++j) x(pivots[k], j) = aug(k, a.cols() + j);
    return x;
}

/// True iff the column spans of u and v meet only in zero.
inline bool intersects_trivially(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows())
        throw Error(ErrorCode::DimensionMismatch, "column spaces of different dimension");
    return rank(hstack(u, v)) == rank(u) + rank(v);
}

/// Matrix of multiplication by a in the basis {1, x, ..., x^{m-1}}; row i
/// holds the coefficients of a * x^i.
inline Matrix multiplication_matrix(const Field& f, Elem a, const Field& base) {
    const unsigned m = f.m();
    Matrix out(base, m, m);
    Elem xi = 1;
    const Elem x = m > 1 ? f.p() : 0;
    for (unsigned i = 0; i < m; ++i) {
        const auto c = f.coeffs(f.mul(a, xi));
        for (unsigned j = 0; j < m; ++j) out(i, j) = c[j];
        if (m > 1) xi = f.mul(xi, x);
    }
    return out;
}

/// Replaces every entry of m (over GF(p^L), L > 1) by its L x L
/// multiplication matrix over GF(p).
inline Matrix companion_expand(const Matrix& m) {
    const Field& f = m.field();
    if (f.m() == 1) throw Error(ErrorCode::PrimeFieldInput, "companion expansion needs an extension field");
    const Field base = Field::make(f.p(), 1);
    const std::size_t L = f.m();
    Matrix out(base, m.rows() * L, m.cols() * L);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            const Matrix blk = multiplication_matrix(f, m(i, j), base);
            for (std::size_t a = 0; a < L; ++a)
                for (std::size_t b = 0; b < L; ++b) out(i * L + a, j * L + b) = blk(a, b);
        }
    return out;
}

}  // namespace snfc::gf
