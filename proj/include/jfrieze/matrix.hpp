#ifndef JFRIEZE_MATRIX_HPP
#define JFRIEZE_MATRIX_HPP

// Dense exact matrices over Q.
//
// Indices into Matrix are 0-based.  The cyclic column selection A_I used
// throughout the frieze code is 1-based and periodic: an integer column label
// c refers to column residue(c, n) in [1, n].

#include "jfrieze/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jfrieze {

// Representative of a mod n in [1, n].
inline long residue(long a, long n) {
    long r = a % n;
    if (r <= 0) r += n;
    return r;
}

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (long x : r) data_.emplace_back(x);
        }
    }

    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
        std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const {
        return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
    }
    std::vector<Rational> col(std::size_t j) const {
        std::vector<Rational> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        Matrix p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Rational& x = a(i, l);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(l, j);
            }
        return p;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: dimension mismatch");
        std::vector<Rational> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Rows and columns picked by 0-based index lists, in the order given.
inline Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    Matrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return s;
}

// A_I: the columns of A whose 1-based index is a residue of some element of I,
// in ascending residue order.  Repeated residues are taken once.
inline Matrix cyclic_submatrix(const Matrix& A, const std::vector<long>& I, long n) {
    if (static_cast<long>(A.cols()) != n)
        throw std::invalid_argument("cyclic_submatrix: matrix has " + std::to_string(A.cols()) +
                                    " columns, period is " + std::to_string(n));
    std::set<long> res;
    for (long i : I) res.insert(residue(i, n));
    std::vector<std::size_t> cols;
    for (long r : res) cols.push_back(static_cast<std::size_t>(r - 1));
    std::vector<std::size_t> rows(A.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return submatrix(A, rows, cols);
}

namespace detail {

// Each row scaled by the lcm of its denominators; returns the product of the
// scale factors.
inline Integer clear_denominators(const Matrix& m, std::vector<std::vector<Integer>>& out) {
    Integer scale = 1;
    out.assign(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
        scale *= l;
    }
    return scale;
}

// Fraction-free (Bareiss) forward elimination in place.  Returns the number of
// pivots; sign tracks row swaps.  All divisions are exact.
inline std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, int& sign) {
    std::size_t rows = a.size();
    std::size_t r = 0;
    Integer prev = 1;
    sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = (a[i][j] * a[r][c] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace detail

// Exact determinant by Bareiss elimination on the integer-cleared matrix.
// det of the 0x0 matrix is 1.
inline Rational det(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det: matrix is " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()) + ", not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> a;
    Integer scale = detail::clear_denominators(m, a);
    int sign = 1;
    std::size_t r = detail::bareiss(a, n, sign);
    if (r < n || a[n - 1][n - 1] == 0) return 0;
    Integer d = a[n - 1][n - 1];
    if (sign < 0) d = -d;
    return Rational(d, scale);
}

// Plain Gaussian elimination over Q; kept as an independent route to det.
inline Rational det_gaussian(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_gaussian: matrix not square");
    std::size_t n = m.rows();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

inline std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    std::vector<std::vector<Integer>> a;
    detail::clear_denominators(m, a);
    int sign = 1;
    return detail::bareiss(a, m.cols(), sign);
}

// Reduced row echelon form; pivot columns are written to *pivots if given.
inline Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = piv;
    return m;
}

// Rows form a basis of {v : m v = 0}, one row per free column of the RREF
// (back substitution with that free variable set to 1).
inline Matrix kernel_basis(const Matrix& m) {
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    Matrix k(basis.size(), m.cols());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) k(i, j) = basis[i][j];
    return k;
}

inline std::vector<Rational> solve_square(const Matrix& m, const std::vector<Rational>& v) {
    if (m.rows() != m.cols()) throw std::invalid_argument("solve_square: matrix not square");
    if (v.size() != m.rows()) throw std::invalid_argument("solve_square: right-hand side length mismatch");
    std::size_t n = m.rows();
    Matrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = v[i];
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (piv.size() < n || piv.back() >= n) throw std::domain_error("solve_square: singular matrix");
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = r(i, n);
    return x;
}

// All k-element subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

// Maximal minors (Pluecker coordinates) of a k x n matrix, subsets in
// lexicographic order.
inline std::vector<Rational> maximal_minors(const Matrix& A) {
    std::vector<std::size_t> rows(A.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    std::vector<Rational> out;
    for (const auto& I : subsets(A.cols(), A.rows())) out.push_back(det(submatrix(A, rows, I)));
    return out;
}

// Same maximal minors; for full-rank matrices this is equality of SL-orbits.
inline bool same_maximal_minors(const Matrix& A, const Matrix& B) {
    return A.rows() == B.rows() && A.cols() == B.cols() && maximal_minors(A) == maximal_minors(B);
}

}  // namespace jfrieze

#endif
