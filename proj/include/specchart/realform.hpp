#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specchart/petri.hpp"
#include "specchart/spectral.hpp"

namespace specchart {

/// Twisted conjugate pullback B(zeta) = -zeta^2 conj(A(-1/conj(zeta))),
/// coefficientwise B_j = (-1)^{j+1} conj(A_{2-j}). An involution; equals
/// A^T exactly on twistor-line (normal-form) data.
MatrixPoly sigma_conjugate(const QuadraticDatum& A);

struct IntertwinerResult {
    int solution_dim = 0;
    std::optional<MatQ> H;  // one kernel vector when solution_dim >= 1
};

/// Solves H B_j = A_j^T H, j = 0,1,2, exactly. Requires a real spectral
/// curve (CurveNotReal otherwise); returns dimension 0 when the sheaf is
/// not sigma-invariant even though the curve is real.
IntertwinerResult solve_intertwiner(const QuadraticDatum& A);

struct GramCertificate {
    MatQ H;                    // hermitian, sign-normalized
    Signature signature;       // of the normalized H
    GQ normalization;          // scalar applied to the raw kernel vector
    int solution_dim = 1;
    bool definite = false;
    std::string real_form_label;  // "U(p,q)" with p >= q
};

/// Hermitian normalization of the intertwiner line plus exact signature.
/// The raw solution satisfies H^dag = lambda H with |lambda| = 1; scaling by
/// (1 + lambda) (or i when lambda = -1) hermitianizes inside Q(i), so no
/// quadratic extension is ever needed. The residual sign ambiguity is fixed
/// by making the leading nonzero diagonal entry positive.
GramCertificate gram_certificate(const QuadraticDatum& A);

struct ProductSection {
    BiPoly b;          // (Ht)^dag adj(eta I - A) s
    GQ gamma;          // eta^{k-1} coefficient, constant by the degree profile
    bool gamma_matches = false;  // gamma == t^dag H s
    std::optional<GQ> kappa;     // self-conjugacy constant when s == t
};

/// Realizes the product pairing through the adjugate and extracts the
/// distinguished coordinate. For s = t also reports the constant kappa with
/// b^sigma = kappa b, where b^sigma is the weight-(2k-2) twist normalized by
/// (-1)^{k-1}.
ProductSection product_section(const QuadraticDatum& A, const MatQ& H,
                               const std::vector<GQ>& s, const std::vector<GQ>& t);

struct TransportResult {
    QuadraticDatum conjugated;
    MatQ H_predicted;
    bool matches_solver = false;   // solver returns the prediction up to scalar
    Signature signature;           // of the transported certificate
};

/// A -> g A g^{-1} with the intertwiner transported by H' = g^{-T} H conj(g)^{-1}
/// (the congruence by conj(g)^{-1}, so the signature is preserved).
TransportResult conjugation_transport(const QuadraticDatum& A, const MatQ& g);

struct ChartCertificate {
    bool datum_real = false;
    bool curve_real = false;
    bool reduced = false;
    bool connected = false;
    std::optional<int> genus;
    bool genus_ok = false;
    bool regular = false;
    bool strongly_regular_ok = false;
    bool petri_iso = false;
    bool petri_consistent = false;
    int intertwiner_dim = 0;
    std::optional<Signature> signature;
    bool definite = false;
    std::string real_form_label;
    std::string verdict;  // "M(C,pi) point" | "real chart point" | "rejected"
    std::vector<std::string> failures;

    bool accepted() const { return verdict != "rejected"; }
};

/// Runs the full gate: curve reality, reduced + connected curve of the
/// expected genus, regularity, strong regularity with the multiplication
/// crosscheck, and the Gram signature. Definite signature lands in the
/// definite locus; indefinite-but-otherwise-valid data is a real chart
/// point labelled by its real form.
ChartCertificate certify_chart(const QuadraticDatum& A);

}  // namespace specchart
