#pragma once

#include <stdexcept>
#include <vector>

namespace lgould {

/// Dense matrix over an exact field scalar (FracBi in most of this project).
/// Dimensions stay small (at most 64x64 for the Yang-Baxter checks), so a
/// dense representation with fraction-free access is the right trade-off.
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const {
        check_same(o);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        check_same(o);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch");
        Mat r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == T()) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const T& y = o(k, j);
                    if (y == T()) continue;
                    r(i, j) += x * y;
                }
            }
        }
        return r;
    }

    Mat scaled(const T& c) const {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : a_) if (!(x == T())) return false;
        return true;
    }

    /// Kronecker product, row-major index convention: (i1,i2) -> i1*o.rows + i2.
    Mat kron(const Mat& o) const {
        Mat r(rows_ * o.rows_, cols_ * o.cols_);
        for (size_t i1 = 0; i1 < rows_; ++i1)
            for (size_t j1 = 0; j1 < cols_; ++j1) {
                const T& x = (*this)(i1, j1);
                if (x == T()) continue;
                for (size_t i2 = 0; i2 < o.rows_; ++i2)
                    for (size_t j2 = 0; j2 < o.cols_; ++j2) {
                        const T& y = o(i2, j2);
                        if (y == T()) continue;
                        r(i1 * o.rows_ + i2, j1 * o.cols_ + j2) = x * y;
                    }
            }
        return r;
    }

    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    Mat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat: inverse of non-square");
        size_t n = rows_;
        Mat a(*this);
        Mat inv = identity(n);
        for (size_t col = 0; col < n; ++col) {
            size_t piv = col;
            while (piv < n && a(piv, col) == T()) ++piv;
            if (piv == n) throw std::domain_error("Mat: singular matrix");
            if (piv != col) {
                for (size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            }
            T d = a(col, col);
            for (size_t j = 0; j < n; ++j) {
                a(col, j) = a(col, j) / d;
                inv(col, j) = inv(col, j) / d;
            }
            for (size_t i = 0; i < n; ++i) {
                if (i == col) continue;
                T f = a(i, col);
                if (f == T()) continue;
                for (size_t j = 0; j < n; ++j) {
                    a(i, j) -= f * a(col, j);
                    inv(i, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    size_t rank() const {
        Mat a(*this);
        size_t r = 0;
        for (size_t col = 0; col < cols_ && r < rows_; ++col) {
            size_t piv = r;
            while (piv < rows_ && a(piv, col) == T()) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(r, j));
            T d = a(r, col);
            for (size_t j = col; j < cols_; ++j) a(r, j) = a(r, j) / d;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                T f = a(i, col);
                if (f == T()) continue;
                for (size_t j = col; j < cols_; ++j) a(i, j) -= f * a(r, j);
            }
            ++r;
        }
        return r;
    }

    /// Basis of the right nullspace (columns x with Ax = 0).
    std::vector<std::vector<T>> nullspace() const {
        Mat a(*this);
        size_t n = cols_;
        std::vector<long> pivot_of_col(n, -1);
        size_t r = 0;
        for (size_t col = 0; col < n && r < rows_; ++col) {
            size_t piv = r;
            while (piv < rows_ && a(piv, col) == T()) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(r, j));
            T d = a(r, col);
            for (size_t j = col; j < n; ++j) a(r, j) = a(r, j) / d;
            for (size_t i = 0; i < rows_; ++i) {
                if (i == r) continue;
                T f = a(i, col);
                if (f == T()) continue;
                for (size_t j = col; j < n; ++j) a(i, j) -= f * a(r, j);
            }
            pivot_of_col[col] = static_cast<long>(r);
            ++r;
        }
        std::vector<std::vector<T>> basis;
        for (size_t free_col = 0; free_col < n; ++free_col) {
            if (pivot_of_col[free_col] >= 0) continue;
            std::vector<T> v(n);
            v[free_col] = T(1);
            for (size_t col = 0; col < n; ++col) {
                long pr = pivot_of_col[col];
                if (pr >= 0) v[col] = T() - a(static_cast<size_t>(pr), free_col);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Mat: vector dimension mismatch");
        std::vector<T> r(rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                if ((*this)(i, j) == T() || v[j] == T()) continue;
                r[i] += (*this)(i, j) * v[j];
            }
        return r;
    }

private:
    void check_same(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Mat: dimension mismatch");
    }
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

}  // namespace lgould
