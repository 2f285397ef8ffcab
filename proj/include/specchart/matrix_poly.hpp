#pragma once

#include <utility>
#include <vector>

#include "specchart/bipoly.hpp"
#include "specchart/matrix.hpp"
#include "specchart/ring.hpp"

namespace specchart {

/// k x k matrix polynomial A(zeta) = sum A_j zeta^j with a declared degree
/// bound d: the coefficient list always has length d+1 and the leading
/// coefficient may vanish (d is a bound, not the exact degree).
class MatrixPoly {
  public:
    MatrixPoly() : k_(0), d_(0) {}
    MatrixPoly(int k, int d)
        : k_(k), d_(d), c_(static_cast<size_t>(d) + 1, MatQ(k, k)) {}
    MatrixPoly(int k, int d, std::vector<MatQ> coeffs);

    int k() const { return k_; }
    int deg_bound() const { return d_; }
    const MatQ& coeff(int j) const { return c_[static_cast<size_t>(j)]; }
    MatQ& coeff(int j) { return c_[static_cast<size_t>(j)]; }
    const std::vector<MatQ>& coeffs() const { return c_; }

    Poly entry(int i, int j) const;
    Mat<Poly> as_poly_matrix() const;
    static MatrixPoly from_poly_matrix(const Mat<Poly>& m, int d);

    MatQ eval(const GQ& z) const;
    /// Value in the chart 1/zeta after the O(d)-twist: the top coefficient.
    MatQ eval_infinity() const { return c_.back(); }
    Mat<QElem> eval_ring(const QRingPtr& ring) const;
    /// Evaluation at a projective point (top coefficient at infinity).
    Mat<QElem> eval_point(const RingPoint& pt) const;

    MatrixPoly transpose() const;
    MatrixPoly conj_coeffs() const;

    friend MatrixPoly operator+(const MatrixPoly& a, const MatrixPoly& b);
    friend MatrixPoly operator-(const MatrixPoly& a, const MatrixPoly& b);
    friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b);
    MatrixPoly scale(const GQ& s) const;
    MatrixPoly conjugate_by(const MatQ& g) const;  // g A g^{-1}, coefficientwise
    MatrixPoly pow(int i) const;

    friend bool operator==(const MatrixPoly& a, const MatrixPoly& b) {
        return a.k_ == b.k_ && a.d_ == b.d_ && a.c_ == b.c_;
    }
    friend bool operator!=(const MatrixPoly& a, const MatrixPoly& b) {
        return !(a == b);
    }

  private:
    int k_, d_;
    std::vector<MatQ> c_;
};

/// Quadratic chart datum A(zeta) = A0 + A1 zeta + A2 zeta^2.
struct QuadraticDatum {
    MatrixPoly A;

    explicit QuadraticDatum(MatrixPoly a);
    int k() const { return A.k(); }
    const MatQ& A0() const { return A.coeff(0); }
    const MatQ& A1() const { return A.coeff(1); }
    const MatQ& A2() const { return A.coeff(2); }
};

/// Characteristic data of A(zeta) from the Faddeev-LeVerrier recursion
///   M_0 = I,  M_m = A M_{m-1} + a_m I,  a_m = -tr(A M_{m-1})/m,
/// giving det(eta I - A) = eta^k + sum a_m eta^{k-m} and
/// adj(eta I - A) = sum_m M_m eta^{k-1-m}.
struct CharData {
    std::vector<Poly> a;         // a[m-1] = a_m, m = 1..k
    std::vector<Mat<Poly>> M;    // M_0 .. M_{k-1}
    BiPoly char_poly;
    Mat<BiPoly> adjugate;
};

CharData faddeev_leverrier(const MatrixPoly& A);
BiPoly mp_char_poly(const MatrixPoly& A);
Mat<BiPoly> mp_adjugate(const MatrixPoly& A);

/// zeta-coefficient matrices of A(zeta)^i, 1 <= i <= k-1 (list length d*i+1).
std::vector<MatQ> mp_power_coeffs(const MatrixPoly& A, int i);

/// The commutant {X : X m = m X} as an exact basis.
std::vector<MatQ> centralizer_basis(const MatQ& m);

/// Sylvester operator X -> X m - m X on row-major vec(X).
MatQ sylvester_matrix(const MatQ& m);
Mat<QElem> sylvester_matrix_ring(const Mat<QElem>& m);

/// Centralizer dimension of A at a point, one entry per ring branch.
struct CentralizerDims {
    struct Branch {
        Poly modulus;  // meaningful for finite points
        int dim = 0;
    };
    bool at_infinity = false;
    std::vector<Branch> branches;

    int min_dim() const;
    int max_dim() const;
};

CentralizerDims centralizer_dims(const MatrixPoly& A, const RingPoint& pt);

}  // namespace specchart
