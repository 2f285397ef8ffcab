#include "specchart/matrix_poly.hpp"

#include <string>

#include "specchart/errors.hpp"

namespace specchart {

MatrixPoly::MatrixPoly(int k, int d, std::vector<MatQ> coeffs)
    : k_(k), d_(d), c_(std::move(coeffs)) {
    if (k < 1) throw OutOfRange("matrix polynomial needs k >= 1");
    if (d < 0) throw OutOfRange("negative degree bound");
    if (c_.size() != static_cast<size_t>(d) + 1)
        throw OutOfRange("coefficient list must have length d+1");
    for (const MatQ& m : c_)
        if (m.rows() != k || m.cols() != k)
            throw OutOfRange("coefficient matrix is not k x k");
}

Poly MatrixPoly::entry(int i, int j) const {
    std::vector<GQ> v(static_cast<size_t>(d_) + 1);
    for (int t = 0; t <= d_; ++t) v[static_cast<size_t>(t)] = c_[static_cast<size_t>(t)].at(i, j);
    return Poly(std::move(v));
}

Mat<Poly> MatrixPoly::as_poly_matrix() const {
    Mat<Poly> m(k_, k_, Poly());
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) m.at(i, j) = entry(i, j);
    return m;
}

MatrixPoly MatrixPoly::from_poly_matrix(const Mat<Poly>& m, int d) {
    const int k = m.rows();
    MatrixPoly out(k, d);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Poly& p = m.at(i, j);
            if (p.degree() > d) throw DegreeBoundViolated("entry degree exceeds bound");
            for (int t = 0; t <= p.degree(); ++t) out.coeff(t).at(i, j) = p.coeff(t);
        }
    return out;
}

MatQ MatrixPoly::eval(const GQ& z) const {
    MatQ acc = c_.back();
    for (int j = d_ - 1; j >= 0; --j) acc = acc * z + c_[static_cast<size_t>(j)];
    return acc;
}

Mat<QElem> MatrixPoly::eval_ring(const QRingPtr& ring) const {
    Mat<QElem> out(k_, k_, QElem::zero(ring));
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) out.at(i, j) = eval_poly(entry(i, j), ring);
    return out;
}

Mat<QElem> MatrixPoly::eval_point(const RingPoint& pt) const {
    if (!pt.at_infinity) return eval_ring(make_ring(pt.modulus));
    QRingPtr triv = make_ring(Poly::x());
    Mat<QElem> out(k_, k_, QElem::zero(triv));
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            out.at(i, j) = QElem::from_scalar(c_.back().at(i, j), triv);
    return out;
}

MatrixPoly MatrixPoly::transpose() const {
    MatrixPoly out(k_, d_);
    for (int j = 0; j <= d_; ++j) out.coeff(j) = coeff(j).transpose();
    return out;
}

MatrixPoly MatrixPoly::conj_coeffs() const {
    MatrixPoly out(k_, d_);
    for (int j = 0; j <= d_; ++j) out.coeff(j) = conj_entries(coeff(j));
    return out;
}

MatrixPoly operator+(const MatrixPoly& a, const MatrixPoly& b) {
    const int d = std::max(a.d_, b.d_);
    MatrixPoly out(a.k_, d);
    for (int j = 0; j <= d; ++j) {
        if (j <= a.d_) out.coeff(j) = out.coeff(j) + a.coeff(j);
        if (j <= b.d_) out.coeff(j) = out.coeff(j) + b.coeff(j);
    }
    return out;
}

MatrixPoly operator-(const MatrixPoly& a, const MatrixPoly& b) {
    const int d = std::max(a.d_, b.d_);
    MatrixPoly out(a.k_, d);
    for (int j = 0; j <= d; ++j) {
        if (j <= a.d_) out.coeff(j) = out.coeff(j) + a.coeff(j);
        if (j <= b.d_) out.coeff(j) = out.coeff(j) - b.coeff(j);
    }
    return out;
}

MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
    MatrixPoly out(a.k_, a.d_ + b.d_);
    for (int p = 0; p <= a.d_; ++p)
        for (int q = 0; q <= b.d_; ++q)
            out.coeff(p + q) = out.coeff(p + q) + a.coeff(p) * b.coeff(q);
    return out;
}

MatrixPoly MatrixPoly::scale(const GQ& s) const {
    MatrixPoly out(k_, d_);
    for (int j = 0; j <= d_; ++j) out.coeff(j) = coeff(j) * s;
    return out;
}

MatrixPoly MatrixPoly::conjugate_by(const MatQ& g) const {
    MatQ gi = inverse(g);
    MatrixPoly out(k_, d_);
    for (int j = 0; j <= d_; ++j) out.coeff(j) = g * coeff(j) * gi;
    return out;
}

MatrixPoly MatrixPoly::pow(int i) const {
    if (i < 0) throw OutOfRange("negative matrix power");
    MatrixPoly out(k_, 0);
    out.coeff(0) = MatQ::identity(k_);
    for (int t = 0; t < i; ++t) out = out * *this;
    return out;
}

QuadraticDatum::QuadraticDatum(MatrixPoly a) : A(std::move(a)) {
    if (A.deg_bound() != 2)
        throw OutOfRange("quadratic datum requires declared degree 2");
}

namespace {

Poly trace_poly(const Mat<Poly>& m) {
    Poly t;
    for (int i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

Mat<Poly> poly_identity(int k) {
    Mat<Poly> m(k, k, Poly());
    for (int i = 0; i < k; ++i) m.at(i, i) = Poly::one();
    return m;
}

}  // namespace

CharData faddeev_leverrier(const MatrixPoly& A) {
    const int k = A.k();
    CharData out;
    Mat<Poly> a = A.as_poly_matrix();
    Mat<Poly> m = poly_identity(k);
    out.M.push_back(m);
    for (int step = 1; step <= k; ++step) {
        Mat<Poly> n = a * m;
        Poly am = trace_poly(n) * GQ(mpq_class(-1, step));
        out.a.push_back(am);
        Mat<Poly> next = n;
        for (int i = 0; i < k; ++i) next.at(i, i) += am;
        if (step < k) {
            out.M.push_back(next);
            m = std::move(next);
        } else {
            // Cayley-Hamilton: the recursion must terminate at zero.
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (!next.at(i, j).is_zero())
                        throw InternalError("Faddeev-LeVerrier did not terminate at zero");
        }
    }
    std::vector<Poly> eta(static_cast<size_t>(k) + 1);
    eta[static_cast<size_t>(k)] = Poly::one();
    for (int mi = 1; mi <= k; ++mi) eta[static_cast<size_t>(k - mi)] = out.a[static_cast<size_t>(mi - 1)];
    out.char_poly = BiPoly(std::move(eta));

    Mat<BiPoly> adj(k, k, BiPoly());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::vector<Poly> e(static_cast<size_t>(k));
            for (int mi = 0; mi < k; ++mi)
                e[static_cast<size_t>(k - 1 - mi)] = out.M[static_cast<size_t>(mi)].at(i, j);
            adj.at(i, j) = BiPoly(std::move(e));
        }
    out.adjugate = std::move(adj);
    return out;
}

BiPoly mp_char_poly(const MatrixPoly& A) { return faddeev_leverrier(A).char_poly; }

Mat<BiPoly> mp_adjugate(const MatrixPoly& A) { return faddeev_leverrier(A).adjugate; }

std::vector<MatQ> mp_power_coeffs(const MatrixPoly& A, int i) {
    if (i < 1 || i > A.k() - 1)
        throw OutOfRange("power index must satisfy 1 <= i <= k-1, got " + std::to_string(i));
    return A.pow(i).coeffs();
}

MatQ sylvester_matrix(const MatQ& m) {
    const int k = m.rows();
    MatQ s(k * k, k * k);
    // (X m - m X)_{ij} entry of unknown X_{ab}.
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) {
                    GQ v(0);
                    if (a == i) v += m.at(b, j);
                    if (b == j) v -= m.at(i, a);
                    s.at(i * k + j, a * k + b) = v;
                }
    return s;
}

Mat<QElem> sylvester_matrix_ring(const Mat<QElem>& m) {
    const int k = m.rows();
    QRingPtr ring;
    for (int i = 0; i < k && !ring; ++i)
        for (int j = 0; j < k && !ring; ++j) ring = m.at(i, j).ring();
    Mat<QElem> s(k * k, k * k, QElem::zero(ring));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) {
                    QElem v = QElem::zero(ring);
                    if (a == i) v = v + m.at(b, j);
                    if (b == j) v = v - m.at(i, a);
                    s.at(i * k + j, a * k + b) = v;
                }
    return s;
}

std::vector<MatQ> centralizer_basis(const MatQ& m) {
    const int k = m.rows();
    auto null_vecs = kernel_basis(sylvester_matrix(m));
    std::vector<MatQ> basis;
    basis.reserve(null_vecs.size());
    for (const auto& v : null_vecs) {
        MatQ x(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) x.at(i, j) = v[static_cast<size_t>(i * k + j)];
        basis.push_back(std::move(x));
    }
    return basis;
}

int CentralizerDims::min_dim() const {
    int m = branches.empty() ? 0 : branches[0].dim;
    for (const auto& b : branches) m = std::min(m, b.dim);
    return m;
}

int CentralizerDims::max_dim() const {
    int m = 0;
    for (const auto& b : branches) m = std::max(m, b.dim);
    return m;
}

CentralizerDims centralizer_dims(const MatrixPoly& A, const RingPoint& pt) {
    CentralizerDims out;
    const int k = A.k();
    if (pt.at_infinity) {
        out.at_infinity = true;
        const int dim = k * k - mat_rank(sylvester_matrix(A.eval_infinity()));
        out.branches.push_back({Poly(), dim});
        return out;
    }
    auto branches = for_each_branch<int>(pt.modulus, [&](const QRingPtr& ring) {
        Mat<QElem> m = A.eval_ring(ring);
        return k * k - ring_rank(sylvester_matrix_ring(m));
    });
    for (auto& [mod, dim] : branches) out.branches.push_back({mod, dim});
    return out;
}

}  // namespace specchart
