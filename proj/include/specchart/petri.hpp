#pragma once

#include <utility>
#include <vector>

#include "specchart/spectral.hpp"

namespace specchart {

/// The multiplication pairing in the quadratic chart: row (i,j) holds the
/// adjugate entry adj(eta I - A)_{j,i} expanded in the monomial basis
/// eta^m zeta^l, 0 <= m <= k-1, 0 <= l <= 2(k-1-m). Rank k^2 is the
/// isomorphism condition (the complement of the degeneracy divisor).
struct PetriReport {
    MatQ matrix;                                 // k^2 x k^2
    int rank = 0;
    bool is_iso = false;
    std::vector<std::pair<int, int>> monomial_basis;  // (m, l) column order
};

PetriReport petri_matrix(const QuadraticDatum& A);

struct PetriStrongRegConsistency {
    bool petri_iso = false;
    bool strongly_regular_verdict = false;
    bool consistent = false;
};

/// The two ranks come from disjoint pipelines (adjugate rows vs power
/// coefficients); any mismatch is a build-stopping bug.
PetriStrongRegConsistency petri_strongreg_crosscheck(const QuadraticDatum& A);

struct ThetaSkewDiagnostic {
    int skew_rank = 0;   // rank of the antisymmetrized rows
    int full_rank = 0;   // k(k-1)/2 when the skew part pairs fully
};

ThetaSkewDiagnostic theta_skew_example(const QuadraticDatum& A);

/// Arithmetic identities from the pushforward splittings, self-checked.
struct SectionCounts {
    int k = 0;
    int h0_kc2 = 0;        // k^2
    int h0_kc1 = 0;        // k^2 - k
    int h1_oc_minus1 = 0;  // k^2 - k
    int h0_phi_t = 0;      // 2k^2 - 2k
    int genus = 0;         // (k-1)^2
    int gamma_codim = 0;   // 1
};

SectionCounts section_count_validators(int k);

}  // namespace specchart
