#ifndef PFV_MATRIX_HPP
#define PFV_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include <pfv/errors.hpp>
#include <pfv/rational.hpp>
#include <pfv/ratfunck.hpp>

namespace pfv {

template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
        const size_t r = rows.size();
        const size_t c = r ? rows[0].size() : 0;
        Matrix m(r, c);
        for (size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw dimension_mismatch("ragged row list");
            for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    F& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
    const F& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }

    std::vector<F> row(size_t i) const {
        return std::vector<F>(d_.begin() + static_cast<long>(i * cols_),
                              d_.begin() + static_cast<long>((i + 1) * cols_));
    }

    void append_row(const std::vector<F>& r) {
        if (cols_ == 0 && rows_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw dimension_mismatch("row length mismatch");
        d_.insert(d_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

private:
    size_t rows_, cols_;
    std::vector<F> d_;
};

template <class F>
struct RrefResult {
    Matrix<F> reduced;               // zero rows removed
    std::vector<size_t> pivot_cols;  // strictly increasing
    size_t rank = 0;
    // Pivot values encountered during forward elimination, before
    // normalization; used to audit symbolic/concrete agreement.
    std::vector<F> pivots_seen;
};

namespace detail {

// Generic fraction-based Gauss-Jordan.  Pivot choice is deterministic:
// first row (top to bottom) with a nonzero entry in the current column.
template <class F>
RrefResult<F> rref_generic(Matrix<F> m) {
    RrefResult<F> out;
    const size_t rows = m.rows(), cols = m.cols();
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t sel = rows;
        for (size_t r = pr; r < rows; ++r) {
            if (!m(r, c).is_zero()) { sel = r; break; }
        }
        if (sel == rows) continue;
        m.swap_rows(pr, sel);
        out.pivots_seen.push_back(m(pr, c));
        const F inv = F(1) / m(pr, c);
        for (size_t j = c; j < cols; ++j) m(pr, j) = m(pr, j) * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || m(r, c).is_zero()) continue;
            const F f = m(r, c);
            for (size_t j = c; j < cols; ++j) m(r, j) = m(r, j) - f * m(pr, j);
        }
        out.pivot_cols.push_back(c);
        ++pr;
    }
    out.rank = out.pivot_cols.size();
    out.reduced = Matrix<F>(out.rank, cols);
    for (size_t r = 0; r < out.rank; ++r) {
        for (size_t j = 0; j < cols; ++j) out.reduced(r, j) = m(r, j);
    }
    return out;
}

// Fraction-free forward elimination (Bareiss) over the integers,
// followed by exact back-substitution.  The RREF of a matrix is unique,
// so this agrees with rref_generic; it only avoids rational blow-up in
// the elimination phase.
inline RrefResult<Rational> rref_bareiss(const Matrix<Rational>& in) {
    const size_t rows = in.rows(), cols = in.cols();
    // Clear denominators row by row.
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (size_t i = 0; i < rows; ++i) {
        mpz_class lcm(1);
        for (size_t j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), in(i, j).den().get_mpz_t());
        for (size_t j = 0; j < cols; ++j) m[i][j] = in(i, j).num() * (lcm / in(i, j).den());
    }

    RrefResult<Rational> out;
    mpz_class prev(1);
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t sel = rows;
        for (size_t r = pr; r < rows; ++r) {
            if (m[r][c] != 0) { sel = r; break; }
        }
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        const mpz_class piv = m[pr][c];
        out.pivots_seen.push_back(Rational(piv));
        for (size_t r = pr + 1; r < rows; ++r) {
            for (size_t j = c + 1; j < cols; ++j) {
                mpz_class t = m[r][j] * piv - m[r][c] * m[pr][j];
                mpz_divexact(m[r][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[r][c] = 0;
        }
        prev = piv;
        out.pivot_cols.push_back(c);
        ++pr;
    }
    out.rank = out.pivot_cols.size();

    // Back substitution in rational arithmetic on the echelon rows.
    Matrix<Rational> red(out.rank, cols);
    for (size_t r = 0; r < out.rank; ++r) {
        for (size_t j = 0; j < cols; ++j) red(r, j) = Rational(m[r][j]);
    }
    for (size_t r = out.rank; r-- > 0;) {
        const size_t pc = out.pivot_cols[r];
        const Rational inv = red(r, pc).inv();
        for (size_t j = pc; j < cols; ++j) red(r, j) = red(r, j) * inv;
        for (size_t up = 0; up < r; ++up) {
            if (red(up, pc).is_zero()) continue;
            const Rational f = red(up, pc);
            for (size_t j = pc; j < cols; ++j) red(up, j) = red(up, j) - f * red(r, j);
        }
    }
    out.reduced = std::move(red);
    return out;
}

} // namespace detail

template <class F>
RrefResult<F> rref(const Matrix<F>& m) {
    if constexpr (std::is_same_v<F, Rational>) {
        return detail::rref_bareiss(m);
    } else {
        return detail::rref_generic(m);
    }
}

// Basis of the right kernel {x : m x = 0}, one row per basis vector.
// Deterministic: one vector per free column, in column order, with the
// free variable set to 1.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
    const RrefResult<F> r = rref(m);
    const size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;
    Matrix<F> out(0, cols);
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> v(cols, F(0));
        v[fc] = F(1);
        for (size_t i = 0; i < r.rank; ++i) {
            v[r.pivot_cols[i]] = -r.reduced(i, fc);
        }
        out.append_row(v);
    }
    return out;
}

// Decides whether target lies in the row span of basis_rows; on success
// returns coefficients c with sum_i c_i * basis_rows[i] == target.
template <class F>
std::optional<std::vector<F>> solve_in_span(const Matrix<F>& basis_rows,
                                            const std::vector<F>& target) {
    if (target.size() != basis_rows.cols()) throw dimension_mismatch("target length mismatch");
    const size_t n = basis_rows.rows();
    // Solve basis_rows^T c = target.
    Matrix<F> aug(basis_rows.cols(), n + 1);
    for (size_t i = 0; i < basis_rows.cols(); ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = basis_rows(j, i);
        aug(i, n) = target[i];
    }
    const RrefResult<F> r = rref(aug);
    std::vector<F> c(n, F(0));
    for (size_t i = 0; i < r.rank; ++i) {
        if (r.pivot_cols[i] == n) return std::nullopt;  // inconsistent
        c[r.pivot_cols[i]] = r.reduced(i, n);
    }
    return c;
}

template <class F>
Matrix<Rational> instantiate_matrix(const Matrix<F>& m, const Rational& k0) {
    Matrix<Rational> out(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = instantiate_k<F>(m(i, j), k0);
    }
    return out;
}

} // namespace pfv

#endif
