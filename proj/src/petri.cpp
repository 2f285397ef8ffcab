#include "specchart/petri.hpp"

#include "specchart/errors.hpp"

namespace specchart {

PetriReport petri_matrix(const QuadraticDatum& A) {
    const int k = A.k();
    PetriReport out;
    for (int m = k - 1; m >= 0; --m)
        for (int l = 0; l <= 2 * (k - 1 - m); ++l) out.monomial_basis.emplace_back(m, l);

    Mat<BiPoly> adj = mp_adjugate(A.A);
    out.matrix = MatQ(k * k, k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const BiPoly& b = adj.at(j, i);
            for (int m = 0; m <= b.degree_eta(); ++m)
                if (b.coeff_eta(m).degree() > 2 * (k - 1 - m))
                    throw DegreeBoundViolated("adjugate stripe exceeds its weight");
            for (size_t col = 0; col < out.monomial_basis.size(); ++col) {
                auto [m, l] = out.monomial_basis[col];
                out.matrix.at(i * k + j, static_cast<int>(col)) = b.coeff(m, l);
            }
        }
    out.rank = mat_rank(out.matrix);
    out.is_iso = (out.rank == k * k);
    return out;
}

PetriStrongRegConsistency petri_strongreg_crosscheck(const QuadraticDatum& A) {
    PetriStrongRegConsistency out;
    out.petri_iso = petri_matrix(A).is_iso;
    out.strongly_regular_verdict = strongly_regular(A.A).verdict;
    out.consistent = (out.petri_iso == out.strongly_regular_verdict);
    return out;
}

ThetaSkewDiagnostic theta_skew_example(const QuadraticDatum& A) {
    const int k = A.k();
    PetriReport rep = petri_matrix(A);
    std::vector<std::vector<GQ>> rows;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            std::vector<GQ> r(static_cast<size_t>(k * k));
            for (int c = 0; c < k * k; ++c)
                r[static_cast<size_t>(c)] =
                    rep.matrix.at(i * k + j, c) - rep.matrix.at(j * k + i, c);
            rows.push_back(std::move(r));
        }
    ThetaSkewDiagnostic out;
    out.full_rank = k * (k - 1) / 2;
    out.skew_rank = rows.empty() ? 0 : mat_rank(stack_rows(rows));
    return out;
}

SectionCounts section_count_validators(int k) {
    if (k < 2) throw OutOfRange("section counts need k >= 2");
    SectionCounts out;
    out.k = k;

    // Pushforward of K_C(m) splits as sum_{j<k} O(2j - 2 + m); h^0/h^1 of
    // O(n) on the line are the usual n+1 / -n-1 counts.
    auto h0_line = [](int n) { return n >= 0 ? n + 1 : 0; };
    auto h1_line = [](int n) { return n <= -2 ? -n - 1 : 0; };

    for (int j = 0; j < k; ++j) {
        out.h0_kc2 += h0_line(2 * j);
        out.h0_kc1 += h0_line(2 * j - 1);
        out.h1_oc_minus1 += h1_line(-2 * j - 1);
    }
    if (out.h0_kc2 != k * k) throw InternalError("h0(K_C(2)) != k^2");
    if (out.h0_kc1 != k * k - k) throw InternalError("h0(K_C(1)) != k^2-k");
    if (out.h1_oc_minus1 != k * k - k) throw InternalError("h1(O_C(-1)) != k^2-k");

    // chi from the twisted Euler sequence: h0(phi*T) = k^2 - 1 + g.
    int chi_oc = 0;
    for (int j = 0; j < k; ++j) chi_oc += 1 - 2 * j;
    out.genus = 1 - chi_oc;
    out.h0_phi_t = k * k - 1 + out.genus;
    if (out.genus != (k - 1) * (k - 1)) throw InternalError("genus != (k-1)^2");
    if (out.h0_phi_t != 2 * k * k - 2 * k) throw InternalError("h0(phi*T) != 2k^2-2k");

    // Image of H0(K_C(1)) (x) C^2 in H0(K_C(2)): every summand O(2j) with
    // j >= 1 is covered by multiplication from O(2j-1); the j = 0 constant
    // line receives nothing from H0(O(-1)) and survives the quotient.
    int image_dim = 0;
    for (int j = 1; j < k; ++j) image_dim += h0_line(2 * j);
    out.gamma_codim = out.h0_kc2 - image_dim;
    if (out.gamma_codim != 1) throw InternalError("gamma target is not a line");
    return out;
}

}  // namespace specchart
