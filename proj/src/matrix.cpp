#include "specchart/matrix.hpp"

#include <string>

namespace specchart {

std::vector<GQ> vec(const MatQ& m) {
    std::vector<GQ> v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

MatQ stack_rows(const std::vector<std::vector<GQ>>& rows) {
    if (rows.empty()) return MatQ();
    MatQ m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw OutOfRange("stack_rows: ragged rows");
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    }
    return m;
}

namespace {

// Scales each row to Gaussian-integer entries; rank-preserving.
void clear_row_denominators(MatQ& m) {
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols(); ++j) {
            mpz_class d1 = m.at(i, j).re().get_den();
            mpz_class d2 = m.at(i, j).im().get_den();
            mpz_class g;
            mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), d1.get_mpz_t());
            mpz_lcm(l.get_mpz_t(), g.get_mpz_t(), d2.get_mpz_t());
        }
        if (l == 1) continue;
        GQ s{mpq_class(l), mpq_class(0)};
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= s;
    }
}

}  // namespace

int mat_rank(const MatQ& input) {
    if (input.empty()) return 0;
    MatQ m = input;
    clear_row_denominators(m);
    const int rows = m.rows(), cols = m.cols();
    GQ prev(1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(row, col) - m.at(i, col) * m.at(row, j)) / prev;
            m.at(i, col) = GQ(0);
        }
        prev = m.at(row, col);
        ++row;
    }
    return row;
}

Signature hermitian_signature(const MatQ& h) {
    const int n = h.rows();
    if (n != h.cols()) throw NotHermitian("matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (h.at(i, j) != h.at(j, i).conj())
                throw NotHermitian("entries (" + std::to_string(i) + "," +
                                   std::to_string(j) + ") and (" + std::to_string(j) +
                                   "," + std::to_string(i) + ") are not conjugate");

    MatQ m = h;
    Signature sig;
    auto add_scaled_row = [&](int dst, int src, const GQ& f) {
        for (int j = 0; j < n; ++j) m.at(dst, j) += f * m.at(src, j);
    };
    auto add_scaled_col = [&](int dst, int src, const GQ& f) {
        for (int i = 0; i < n; ++i) m.at(i, dst) += f * m.at(i, src);
    };
    auto swap_sym = [&](int a, int b) {
        for (int j = 0; j < n; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (int i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
    };

    for (int t = 0; t < n; ++t) {
        if (m.at(t, t).is_zero()) {
            int s = -1;
            for (int i = t + 1; i < n; ++i)
                if (!m.at(i, i).is_zero()) {
                    s = i;
                    break;
                }
            if (s >= 0) {
                swap_sym(t, s);
            } else {
                // All remaining diagonal entries vanish; manufacture one from a
                // nonzero off-diagonal pair: x'Hx = 2 Re(w h) for x = e_i + w e_j.
                int pi = -1, pj = -1;
                for (int i = t; i < n && pi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (!m.at(i, j).is_zero()) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi < 0) {
                    sig.z += n - t;
                    return sig;
                }
                GQ w = (sgn(m.at(pi, pj).re()) != 0) ? GQ(1) : GQ::i();
                add_scaled_col(pi, pj, w);
                add_scaled_row(pi, pj, w.conj());
                if (pi != t) swap_sym(t, pi);
            }
        }
        const GQ pivot = m.at(t, t);
        if (sgn(pivot.re()) > 0)
            ++sig.p;
        else
            ++sig.q;
        for (int i = t + 1; i < n; ++i) {
            if (m.at(i, t).is_zero()) continue;
            GQ f = m.at(i, t) / pivot;
            add_scaled_row(i, t, -f);
            add_scaled_col(i, t, -f.conj());
        }
    }
    return sig;
}

namespace {

// Reduced row echelon form; returns pivot column of each pivot row.
std::vector<int> rref(MatQ& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        GQ inv = m.at(row, col).inverse();
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            GQ f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<GQ>> kernel_basis(const MatQ& input) {
    MatQ m = input;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<GQ>> basis;
    for (int freec = 0; freec < m.cols(); ++freec) {
        if (is_pivot[static_cast<size_t>(freec)]) continue;
        std::vector<GQ> v(static_cast<size_t>(m.cols()), GQ(0));
        v[static_cast<size_t>(freec)] = GQ(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve_linear(const MatQ& m, const std::vector<GQ>& rhs, std::vector<GQ>& x) {
    MatQ aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[static_cast<size_t>(i)];
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == m.cols()) return false;  // row (0 ... 0 | 1): inconsistent
    x.assign(static_cast<size_t>(m.cols()), GQ(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols());
    return true;
}

bool is_invertible(const MatQ& m) {
    return m.rows() == m.cols() && mat_rank(m) == m.rows();
}

MatQ inverse(const MatQ& m) {
    const int n = m.rows();
    if (n != m.cols()) throw DivisionByZero("inverse of non-square matrix");
    MatQ aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = GQ(1);
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[static_cast<size_t>(n - 1)] >= n)
        throw DivisionByZero("matrix is singular");
    MatQ out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

}  // namespace specchart
