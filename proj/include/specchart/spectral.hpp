#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specchart/matrix_poly.hpp"

namespace specchart {

/// Spectral curve P(zeta,eta) = eta^k + sum a_i(zeta) eta^{k-i} with the
/// section bound deg a_i <= 2i.
struct SpectralCurve {
    int k = 0;
    std::vector<Poly> a;  // a[i-1] = a_i, i = 1..k

    SpectralCurve() = default;
    SpectralCurve(int k_, std::vector<Poly> a_);

    BiPoly as_bipoly() const;
    /// Coefficients of the curve in the chart 1/zeta (each a_i reversed
    /// within its weight 2i).
    SpectralCurve infinity_chart() const;
};

/// A0 = T2 + i T3, A1 = 2 i T1, A2 = T2 - i T3 for anti-hermitian T_j.
/// Throws NotAntiHermitian naming the offending matrix.
QuadraticDatum datum_from_triple(const MatQ& t1, const MatQ& t2, const MatQ& t3);

/// Inverse of the normal form: T1 = A1/(2i), T2 = (A0+A2)/2, T3 = (A0-A2)/(2i).
void triple_from_datum(const QuadraticDatum& A, MatQ& t1, MatQ& t2, MatQ& t3);

/// Twistor-line reality A1 = A1^dag, A2 = -A0^dag (and the redundant
/// A0 = -A2^dag), equivalently A(-1/conj(zeta)) = -A(zeta)^dag / conj(zeta)^2.
struct DatumRealityReport {
    bool a1_hermitian = false;
    bool a2_matches = false;  // A2 == -A0^dag
    bool a0_matches = false;  // A0 == -A2^dag
    bool ok() const { return a1_hermitian && a2_matches && a0_matches; }
};

DatumRealityReport datum_reality_check(const QuadraticDatum& A);

SpectralCurve curve_from_datum(const MatrixPoly& A);

/// Coefficient rule c_{i,2i-j} = (-1)^{i+j} conj(c_{i,j}) for every i;
/// the fixed-point condition of the weight-2i antipodal twist.
struct CurveRealityReport {
    bool ok = true;
    std::vector<int> failing_indices;  // the i with a_i violating the rule
};

CurveRealityReport curve_reality_check(const SpectralCurve& s);

struct CurveInvariants {
    bool reduced = false;
    Poly disc;                       // affine discriminant in the zeta chart
    int branch_degree = -1;          // homogenized degree 2k(k-1) when reduced
    int genus_pushforward = 0;       // (k-1)^2 via the splitting sum
    std::optional<int> genus_rh;     // 1 - k + branch_degree/2 when reduced
    std::optional<int> genus;        // set when reduced and both routes agree
};

CurveInvariants curve_invariants(const SpectralCurve& s);

/// Nonderogatory test at one point: every branch of the centralizer has
/// dimension exactly k.
bool regular_at(const MatrixPoly& A, const RingPoint& pt);

struct SuspectWitness {
    bool at_infinity = false;
    Poly modulus;           // branch modulus for finite suspects
    int centralizer_dim = 0;
    bool pass = false;
};

struct RegularityCertificate {
    bool verdict = false;
    std::string mode = "exact";
    bool nonreduced_warning = false;
    bool generic_ok = true;  // meaningful on the non-reduced path
    std::vector<SuspectWitness> witnesses;
};

/// Exact sweep: eigenvalues can only collide at roots of disc_eta (plus
/// infinity), so those fibers are checked over quotient rings. Non-reduced
/// curves take the identically-collapsed branch: generic regularity via the
/// Krylov wedge plus the finite zero locus of its scalar content.
RegularityCertificate regular_everywhere(const MatrixPoly& A);

struct StrongRegularity {
    bool verdict = false;
    int definition_rank = 0;  // rank of span {I} u {coeffs of A^i, i < k}
    int remark_rank = 0;      // same span without adjoining I
};

StrongRegularity strongly_regular(const MatrixPoly& A);

struct JointCentralizer {
    int dim = 0;
    bool connected = false;  // dim == 1
};

/// Kernel of the stacked commutator system over all coefficients.
/// Requires regular_everywhere (NotRegularEverywhere otherwise).
JointCentralizer joint_centralizer_dim(const MatrixPoly& A);

/// Degree of the line of wedges I ^ A ^ ... ^ A^{k-1}, homogenized over both
/// charts with scalar content removed; k - k^2 for any regular-everywhere A.
/// Throws NotRegularEverywhere / ContentNotRemovable.
int centralizer_bundle_degree(const MatrixPoly& A);

/// All k x k minors of the k^2 x k matrix [vec I, vec A, ..., vec A^{k-1}].
std::vector<Poly> krylov_wedge_minors(const MatrixPoly& A);

}  // namespace specchart
