#pragma once

#include <vector>

#include "ksys/error.hpp"

namespace ksys {

// Dense row-major matrix over a field.
template <class T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<T> row(int i) const {
        return std::vector<T>(a_.begin() + static_cast<size_t>(i) * cols_,
                              a_.begin() + static_cast<size_t>(i + 1) * cols_);
    }
    std::vector<T> col(int j) const {
        std::vector<T> v(rows_, T(0));
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    Matrix transposed() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    T trace() const {
        T t(0);
        for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        KSYS_INVARIANT(a.cols_ == b.rows_, "matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& f = a.at(i, k);
                if (f == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const T& g = b.at(k, j);
                    if (g == T(0)) continue;
                    r.at(i, j) += f * g;
                }
            }
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        KSYS_INVARIANT(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        KSYS_INVARIANT(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }
    Matrix scaled(const T& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x *= s;
        return r;
    }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

    std::vector<T> apply(const std::vector<T>& v) const {  // matrix * column vector
        KSYS_INVARIANT(static_cast<int>(v.size()) == cols_, "matrix apply shape mismatch");
        std::vector<T> r(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                if (at(i, j) == T(0) || v[j] == T(0)) continue;
                r[i] += at(i, j) * v[j];
            }
        return r;
    }

    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (a.at(i, j) == T(0)) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l) {
                        if (b.at(k, l) == T(0)) continue;
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
                    }
            }
        return r;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

  private:
    int rows_, cols_;
    std::vector<T> a_;
};

// Reduced row echelon basis of a subspace, built incrementally. Rows are kept
// pivot-sorted, pivots normalized to 1 and cleared in every other row, so a
// vector's coordinates in this basis are just its entries at the pivots.
template <class T>
class RowBasis {
  public:
    explicit RowBasis(int cols) : cols_(cols) {}

    int cols() const { return cols_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<T>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Reduce v modulo the span in place (canonical representative).
    void reduce(std::vector<T>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const T& f = v[pivots_[r]];
            if (f == T(0)) continue;
            T factor = f;  // pivot entries are 1
            const auto& row = rows_[r];
            for (int j = pivots_[r]; j < cols_; ++j) {
                if (row[j] == T(0)) continue;
                v[j] -= factor * row[j];
            }
        }
    }

    // Insert v's residue; returns true if the rank grew.
    bool insert(std::vector<T> v) {
        reduce(v);
        int p = -1;
        for (int j = 0; j < cols_; ++j)
            if (!(v[j] == T(0))) {
                p = j;
                break;
            }
        if (p < 0) return false;
        T inv = T(1) / v[p];
        for (int j = p; j < cols_; ++j) {
            if (v[j] == T(0)) continue;
            v[j] *= inv;
        }
        // Clear the new pivot column from existing rows.
        for (size_t r = 0; r < rows_.size(); ++r) {
            T f = rows_[r][p];
            if (f == T(0)) continue;
            auto& row = rows_[r];
            for (int j = p; j < cols_; ++j) {
                if (v[j] == T(0)) continue;
                row[j] -= f * v[j];
            }
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    bool contains(std::vector<T> v) const {
        reduce(v);
        for (const auto& x : v)
            if (!(x == T(0))) return false;
        return true;
    }

    // Coordinates of v in this basis; requires v in the span (checked).
    std::vector<T> coords(const std::vector<T>& v) const {
        std::vector<T> c(rows_.size(), T(0));
        std::vector<T> w = v;
        for (size_t r = 0; r < rows_.size(); ++r) {
            c[r] = w[pivots_[r]];
            if (c[r] == T(0)) continue;
            const auto& row = rows_[r];
            for (int j = pivots_[r]; j < cols_; ++j) {
                if (row[j] == T(0)) continue;
                w[j] -= c[r] * row[j];
            }
        }
        for (const auto& x : w) KSYS_INVARIANT(x == T(0), "vector not in row space");
        return c;
    }

    std::vector<int> nonpivots() const {
        std::vector<int> np;
        size_t r = 0;
        for (int j = 0; j < cols_; ++j) {
            if (r < pivots_.size() && pivots_[r] == j)
                ++r;
            else
                np.push_back(j);
        }
        return np;
    }

    Matrix<T> basis_matrix() const {
        Matrix<T> m(dim(), cols_);
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = rows_[i][j];
        return m;
    }

  private:
    int cols_;
    std::vector<std::vector<T>> rows_;
    std::vector<int> pivots_;
};

// Basis of the right null space {x : m x = 0}.
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    RowBasis<T> rref(m.cols());
    for (int i = 0; i < m.rows(); ++i) rref.insert(m.row(i));
    std::vector<std::vector<T>> out;
    for (int c : rref.nonpivots()) {
        std::vector<T> v(m.cols(), T(0));
        v[c] = T(1);
        for (int r = 0; r < rref.dim(); ++r) v[rref.pivots()[r]] = -rref.rows()[r][c];
        out.push_back(std::move(v));
    }
    return out;
}

template <class T>
int rank_of(const Matrix<T>& m) {
    RowBasis<T> b(m.cols());
    for (int i = 0; i < m.rows(); ++i) b.insert(m.row(i));
    return b.dim();
}

// Gauss-Jordan inverse; errors with factorization_failed on singular input.
template <class T>
Matrix<T> inverse_of(const Matrix<T>& m) {
    KSYS_INVARIANT(m.rows() == m.cols(), "inverse of non-square matrix");
    int n = m.rows();
    Matrix<T> a = m, inv = Matrix<T>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!(a.at(i, col) == T(0))) {
                piv = i;
                break;
            }
        KSYS_REQUIRE(piv >= 0, Errc::factorization_failed, "singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        T f = T(1) / a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= f;
            inv.at(col, j) *= f;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            T g = a.at(i, col);
            if (g == T(0)) continue;
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= g * a.at(col, j);
                inv.at(i, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace ksys
