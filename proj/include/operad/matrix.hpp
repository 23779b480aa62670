#pragma once

// Dense exact-rational matrices.  Rank and nullspace run over mpq with
// automatic canonicalization; determinants and characteristic polynomials
// of integer matrices use fraction-free (Bareiss) elimination, the
// characteristic polynomial by evaluation at dim+1 integer points followed
// by exact Newton interpolation.  Convention: P_M(x) = det(M - xI).

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "operad/polynomial.hpp"
#include "operad/rational.hpp"

namespace operad::linalg {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    // Anti-diagonal identity, (i, n-1-i) entries equal to 1.
    static RationalMatrix anti_identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const Rat& v : e_)
            if (v != 0) return false;
        return true;
    }
    bool is_integer() const {
        for (const Rat& v : e_)
            if (v.get_den() != 1) return false;
        return true;
    }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RationalMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
        RationalMatrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j) s.at(static_cast<int>(i), static_cast<int>(j)) = at(row_idx[i], col_idx[j]);
        return s;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        RationalMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rat& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
        RationalMatrix c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
        return c;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

namespace detail {
// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(std::vector<std::vector<Rat>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < static_cast<int>(m.size()); ++col) {
        int p = -1;
        for (int i = row; i < static_cast<int>(m.size()); ++i)
            if (m[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        Rat inv = 1 / m[row][col];
        for (int j = col; j < cols; ++j) m[row][j] *= inv;
        for (int i = 0; i < static_cast<int>(m.size()); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}
}  // namespace detail

inline int rank(const RationalMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
    return static_cast<int>(detail::rref(a).size());
}

// Basis of {x : Mx = 0}, one vector per free column, size cols - rank.
inline std::vector<std::vector<Rat>> nullspace_basis(const RationalMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
    std::vector<int> pivots = detail::rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Fraction-free determinant of an integer matrix (Bareiss).
inline Int bareiss_determinant(std::vector<std::vector<Int>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sgn = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sgn * a[n - 1][n - 1];
}

inline std::vector<std::vector<Int>> integer_entries(const RationalMatrix& m) {
    if (!m.is_integer()) throw std::invalid_argument("matrix has non-integer entries");
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j).get_num();
    return a;
}

// det(M - kI) for an integer square matrix, evaluated fraction-free.
inline Int shifted_determinant(const RationalMatrix& m, const Int& k) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    auto a = integer_entries(m);
    for (int i = 0; i < m.rows(); ++i) a[i][i] -= k;
    return bareiss_determinant(std::move(a));
}

// det(M - xI) by evaluation at dim+1 integers symmetric around zero and
// exact Newton interpolation; the result must come out integral.
inline IntPolynomial charpoly(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly of non-square matrix");
    const int d = m.rows();
    if (d == 0) return IntPolynomial::constant(1);
    std::vector<Int> xs(d + 1);
    std::vector<Rat> dd(d + 1);
    for (int i = 0; i <= d; ++i) {
        xs[i] = Int(i - d / 2);
        dd[i] = Rat(shifted_determinant(m, xs[i]));
    }
    // Divided differences in place, then expand the Newton form.
    for (int level = 1; level <= d; ++level)
        for (int i = d; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);
    std::vector<Rat> coef(d + 1, Rat(0)), basis(d + 1, Rat(0));
    basis[0] = 1;
    for (int k = 0; k <= d; ++k) {
        for (int j = 0; j <= k; ++j) coef[j] += dd[k] * basis[j];
        if (k < d) {
            for (int j = k + 1; j >= 1; --j) basis[j] = basis[j - 1] - Rat(xs[k]) * basis[j];
            basis[0] = -Rat(xs[k]) * basis[0];
        }
    }
    std::vector<Int> out(d + 1);
    for (int j = 0; j <= d; ++j) {
        if (coef[j].get_den() != 1)
            throw std::logic_error("charpoly interpolation produced a non-integer coefficient");
        out[j] = coef[j].get_num();
    }
    return IntPolynomial(std::move(out));
}

// Incrementally maintained reduced row echelon basis of a subspace.
class RowSpace {
public:
    explicit RowSpace(int cols) : cols_(cols) {}

    int dimension() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

    // Reduces v against the basis in place; afterwards v is the residual.
    void reduce(std::vector<Rat>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rat& c = v[pivots_[r]];
            if (c == 0) continue;
            Rat f = c;
            const auto& row = rows_[r];
            for (int j = pivots_[r]; j < cols_; ++j) v[j] -= f * row[j];
        }
    }

    bool contains(std::vector<Rat> v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
    }

    // Returns true when v enlarges the span.
    bool insert(std::vector<Rat> v) {
        reduce(v);
        int p = -1;
        for (int j = 0; j < cols_; ++j)
            if (v[j] != 0) { p = j; break; }
        if (p < 0) return false;
        Rat inv = 1 / v[p];
        for (int j = p; j < cols_; ++j) v[j] *= inv;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            Rat f = rows_[r][p];
            if (f == 0) continue;
            for (int j = p; j < cols_; ++j) rows_[r][j] -= f * v[j];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

private:
    int cols_;
    std::vector<std::vector<Rat>> rows_;  // RREF rows, sorted by pivot column
    std::vector<int> pivots_;
};

}  // namespace operad::linalg
