#pragma once

#include <utility>
#include <vector>

#include "specchart/errors.hpp"
#include "specchart/gaussian.hpp"

namespace specchart {

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Mat {
  public:
    Mat() : r_(0), c_(0) {}
    Mat(int rows, int cols, const T& fill = T())
        : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    T& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat transpose() const {
        Mat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat m(a.r_, a.c_);
        for (size_t t = 0; t < a.a_.size(); ++t) m.a_[t] = a.a_[t] + b.a_[t];
        return m;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat m(a.r_, a.c_);
        for (size_t t = 0; t < a.a_.size(); ++t) m.a_[t] = a.a_[t] - b.a_[t];
        return m;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int l = 0; l < a.c_; ++l) {
                const T& s = a.at(i, l);
                for (int j = 0; j < b.c_; ++j) m.at(i, j) = m.at(i, j) + s * b.at(l, j);
            }
        return m;
    }
    friend Mat operator*(const Mat& a, const T& s) {
        Mat m(a.r_, a.c_);
        for (size_t t = 0; t < a.a_.size(); ++t) m.a_[t] = a.a_[t] * s;
        return m;
    }
    friend Mat operator*(const T& s, const Mat& a) { return a * s; }
    friend Mat operator-(const Mat& a) { return a * T(-1); }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  private:
    int r_, c_;
    std::vector<T> a_;
};

using MatQ = Mat<GQ>;

inline MatQ conj_transpose(const MatQ& m) {
    MatQ out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j).conj();
    return out;
}

inline MatQ conj_entries(const MatQ& m) {
    MatQ out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).conj();
    return out;
}

/// Row-major flattening.
std::vector<GQ> vec(const MatQ& m);

/// Stacks row vectors into a matrix; rows must agree in length.
MatQ stack_rows(const std::vector<std::vector<GQ>>& rows);

/// Exact rank by fraction-free (Bareiss) elimination after clearing row
/// denominators; independent of row/column order.
int mat_rank(const MatQ& m);

struct Signature {
    int p = 0, q = 0, z = 0;
    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p == b.p && a.q == b.q && a.z == b.z;
    }
};

/// Counts of positive/negative/zero eigenvalues of a hermitian matrix via
/// exact congruence diagonalization; zero diagonals are handled by the
/// standard hyperbolic 2x2 step. Throws NotHermitian naming the entry pair.
Signature hermitian_signature(const MatQ& h);

/// Basis of the right kernel {x : m x = 0} by Gauss-Jordan elimination.
std::vector<std::vector<GQ>> kernel_basis(const MatQ& m);

/// Solves m x = rhs; returns false when inconsistent. On success x is one
/// solution (free variables set to zero).
bool solve_linear(const MatQ& m, const std::vector<GQ>& rhs, std::vector<GQ>& x);

/// Invertibility test for square matrices.
bool is_invertible(const MatQ& m);

/// Inverse of a square invertible matrix; throws DivisionByZero otherwise.
MatQ inverse(const MatQ& m);

/// Fraction-free determinant over any exact integral domain providing
/// is_zero(), operator*, operator-, and exact_div.
template <class T>
T bareiss_det(Mat<T> m) {
    const int n = m.rows();
    if (n != m.cols()) throw OutOfRange("determinant of non-square matrix");
    if (n == 0) return T(1);
    T prev(1);
    bool negate = false;
    for (int t = 0; t + 1 < n; ++t) {
        int pivot = -1;
        for (int i = t; i < n; ++i)
            if (!m.at(i, t).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return T(0);
        if (pivot != t) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(t, j));
            negate = !negate;
        }
        for (int i = t + 1; i < n; ++i) {
            for (int j = t + 1; j < n; ++j) {
                T num = m.at(i, j) * m.at(t, t) - m.at(i, t) * m.at(t, j);
                m.at(i, j) = num.exact_div(prev);
            }
            m.at(i, t) = T(0);
        }
        prev = m.at(t, t);
    }
    T det = m.at(n - 1, n - 1);
    return negate ? T(0) - det : det;
}

}  // namespace specchart
