#include "specchart/realform.hpp"

#include <string>

#include "specchart/errors.hpp"

namespace specchart {

MatrixPoly sigma_conjugate(const QuadraticDatum& A) {
    const int k = A.k();
    MatrixPoly B(k, 2);
    for (int j = 0; j <= 2; ++j) {
        MatQ c = conj_entries(A.A.coeff(2 - j));
        B.coeff(j) = (j % 2 == 0) ? -c : c;  // (-1)^{j+1}
    }
    return B;
}

namespace {

// Rows of the system H B_j = A_j^T H over the k^2 unknowns vec(H).
MatQ intertwiner_system(const QuadraticDatum& A, const MatrixPoly& B) {
    const int k = A.k();
    MatQ sys(3 * k * k, k * k);
    for (int j = 0; j <= 2; ++j) {
        const MatQ& bj = B.coeff(j);
        const MatQ at = A.A.coeff(j).transpose();
        // (H bj - at H)_{r,c} as a function of H_{a,b}.
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) {
                        GQ v(0);
                        if (a == r) v += bj.at(b, c);
                        if (b == c) v -= at.at(r, a);
                        sys.at(j * k * k + r * k + c, a * k + b) = v;
                    }
    }
    return sys;
}

MatQ from_vec(const std::vector<GQ>& v, int k) {
    MatQ m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = v[static_cast<size_t>(i * k + j)];
    return m;
}

}  // namespace

IntertwinerResult solve_intertwiner(const QuadraticDatum& A) {
    if (!curve_reality_check(curve_from_datum(A.A)).ok)
        throw CurveNotReal("spectral curve fails the reality rule");
    MatrixPoly B = sigma_conjugate(A);
    auto null_vecs = kernel_basis(intertwiner_system(A, B));
    IntertwinerResult out;
    out.solution_dim = static_cast<int>(null_vecs.size());
    if (!null_vecs.empty()) out.H = from_vec(null_vecs.front(), A.k());
    return out;
}

namespace {

// Sign normalization: leading nonzero diagonal entry positive; if the
// diagonal vanishes entirely, the first nonzero off-diagonal entry gets a
// positive real (or else positive imaginary) part.
MatQ fix_sign(const MatQ& h) {
    const int k = h.rows();
    for (int i = 0; i < k; ++i) {
        if (h.at(i, i).is_zero()) continue;
        return sgn(h.at(i, i).re()) > 0 ? h : -h;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const GQ& v = h.at(i, j);
            if (v.is_zero()) continue;
            if (sgn(v.re()) != 0) return sgn(v.re()) > 0 ? h : -h;
            return sgn(v.im()) > 0 ? h : -h;
        }
    return h;
}

}  // namespace

GramCertificate gram_certificate(const QuadraticDatum& A) {
    IntertwinerResult ir = solve_intertwiner(A);
    if (ir.solution_dim != 1)
        throw NotUniquelyIntertwined("solution space has dimension " +
                                     std::to_string(ir.solution_dim));
    MatQ h = *ir.H;
    // H^dag is a solution of the same system, so H^dag = lambda H on the
    // one-dimensional solution line, with |lambda| = 1 forced.
    MatQ hd = conj_transpose(h);
    GQ lambda;
    bool found = false;
    for (int i = 0; i < h.rows() && !found; ++i)
        for (int j = 0; j < h.cols() && !found; ++j)
            if (!h.at(i, j).is_zero()) {
                lambda = hd.at(i, j) / h.at(i, j);
                found = true;
            }
    if (!found) throw InternalError("zero intertwiner on a 1-dimensional line");
    if (hd != h * lambda)
        throw NotUniquelyIntertwined("H^dag is not proportional to H");
    if (lambda.norm2() != 1)
        throw HermitianizationObstructed("lambda off the unit circle: " + lambda.str());

    // mu conj(mu)^{-1} ... the rescale mu = 1 + lambda (or i at lambda = -1)
    // satisfies conj(mu) lambda = mu, making mu H hermitian inside Q(i).
    GQ mu = (lambda == GQ(-1)) ? GQ::i() : GQ(1) + lambda;
    GramCertificate cert;
    MatQ herm = h * mu;
    if (conj_transpose(herm) != herm)
        throw HermitianizationObstructed("rescale failed for lambda = " + lambda.str());
    MatQ fixed = fix_sign(herm);
    cert.normalization = (fixed == herm) ? mu : -mu;
    cert.H = fixed;
    cert.signature = hermitian_signature(cert.H);
    cert.solution_dim = 1;
    cert.definite = (cert.signature.q == 0 || cert.signature.p == 0) && cert.signature.z == 0;
    const int p = std::max(cert.signature.p, cert.signature.q);
    const int q = std::min(cert.signature.p, cert.signature.q);
    cert.real_form_label = "U(" + std::to_string(p) + (q > 0 ? "," + std::to_string(q) : "") + ")";
    return cert;
}

ProductSection product_section(const QuadraticDatum& A, const MatQ& H,
                               const std::vector<GQ>& s, const std::vector<GQ>& t) {
    const int k = A.k();
    Mat<BiPoly> adj = mp_adjugate(A.A);
    ProductSection out;

    // (Ht)^dag adj s with vectors as columns.
    std::vector<GQ> ht(static_cast<size_t>(k), GQ(0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) ht[static_cast<size_t>(i)] += H.at(i, j) * t[static_cast<size_t>(j)];
    BiPoly b;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Poly w(ht[static_cast<size_t>(i)].conj() * s[static_cast<size_t>(j)]);
            b += adj.at(i, j) * w;
        }
    out.b = b;

    for (int m = 0; m <= b.degree_eta(); ++m)
        if (b.coeff_eta(m).degree() > 2 * (k - 1 - m))
            throw DegreeProfileViolated("product section stripe exceeds its weight");
    Poly top = b.coeff_eta(k - 1);
    if (top.degree() > 0)
        throw DegreeProfileViolated("distinguished coordinate is not constant");
    out.gamma = top.coeff(0);

    GQ expected(0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            expected += t[static_cast<size_t>(i)].conj() * H.at(i, j) * s[static_cast<size_t>(j)];
    out.gamma_matches = (out.gamma == expected);

    if (s == t && !b.is_zero()) {
        // b^sigma coefficients: (-1)^{k-1} (-1)^{m+l} conj(b_{m, 2(k-1-m)-l}).
        std::vector<Poly> twisted(static_cast<size_t>(k));
        for (int m = 0; m < k; ++m) {
            const int w = 2 * (k - 1 - m);
            std::vector<GQ> row(static_cast<size_t>(w) + 1, GQ(0));
            for (int l = 0; l <= w; ++l) {
                GQ c = b.coeff(m, w - l).conj();
                if (((m + l) % 2) != 0) c = -c;
                if (((k - 1) % 2) != 0) c = -c;
                row[static_cast<size_t>(l)] = c;
            }
            twisted[static_cast<size_t>(m)] = Poly(std::move(row));
        }
        BiPoly bsigma(std::move(twisted));
        // kappa with b^sigma = kappa b, if proportional by a constant.
        GQ kappa;
        bool found = false;
        for (int m = 0; m < k && !found; ++m) {
            const Poly& c = b.coeff_eta(m);
            for (int l = 0; l <= c.degree() && !found; ++l)
                if (!c.coeff(l).is_zero()) {
                    kappa = bsigma.coeff(m, l) / c.coeff(l);
                    found = true;
                }
        }
        if (found) {
            bool match = true;
            for (int m = 0; m < k && match; ++m)
                if (bsigma.coeff_eta(m) != b.coeff_eta(m) * kappa) match = false;
            if (match) out.kappa = kappa;
        }
    }
    return out;
}

TransportResult conjugation_transport(const QuadraticDatum& A, const MatQ& g) {
    GramCertificate base = gram_certificate(A);
    MatQ gi = inverse(g);
    TransportResult out{QuadraticDatum(A.A.conjugate_by(g)),
                        gi.transpose() * base.H * conj_entries(gi), false, Signature{}};
    GramCertificate moved = gram_certificate(out.conjugated);
    out.signature = moved.signature;

    // The solver's line must contain the prediction.
    IntertwinerResult ir = solve_intertwiner(out.conjugated);
    if (ir.solution_dim == 1 && ir.H) {
        const MatQ& hs = *ir.H;
        GQ ratio;
        bool found = false;
        for (int i = 0; i < hs.rows() && !found; ++i)
            for (int j = 0; j < hs.cols() && !found; ++j)
                if (!hs.at(i, j).is_zero()) {
                    ratio = out.H_predicted.at(i, j) / hs.at(i, j);
                    found = true;
                }
        if (found) out.matches_solver = (hs * ratio == out.H_predicted);
    }
    return out;
}

ChartCertificate certify_chart(const QuadraticDatum& A) {
    const int k = A.k();
    ChartCertificate cert;
    cert.datum_real = datum_reality_check(A).ok();

    SpectralCurve curve = curve_from_datum(A.A);
    cert.curve_real = curve_reality_check(curve).ok;
    if (!cert.curve_real) cert.failures.push_back("curve fails the reality rule");

    CurveInvariants inv = curve_invariants(curve);
    cert.reduced = inv.reduced;
    cert.genus = inv.genus;
    cert.genus_ok = inv.genus.has_value() && *inv.genus == (k - 1) * (k - 1);
    if (!cert.reduced) cert.failures.push_back("curve is not reduced");
    else if (!cert.genus_ok) cert.failures.push_back("genus is not (k-1)^2");

    RegularityCertificate reg = regular_everywhere(A.A);
    cert.regular = reg.verdict;
    if (!cert.regular) cert.failures.push_back("section is not regular everywhere");

    if (cert.regular) {
        cert.connected = joint_centralizer_dim(A.A).connected;
        if (!cert.connected) cert.failures.push_back("curve is not connected");
    }

    PetriStrongRegConsistency cross = petri_strongreg_crosscheck(A);
    cert.strongly_regular_ok = cross.strongly_regular_verdict;
    cert.petri_iso = cross.petri_iso;
    cert.petri_consistent = cross.consistent;
    if (!cert.petri_consistent)
        throw InternalError("multiplication-map and span ranks disagree");
    if (!cert.strongly_regular_ok)
        cert.failures.push_back("section is not strongly regular (degeneracy divisor)");

    if (cert.curve_real) {
        IntertwinerResult ir = solve_intertwiner(A);
        cert.intertwiner_dim = ir.solution_dim;
        if (ir.solution_dim == 1 && cert.failures.empty()) {
            GramCertificate gram = gram_certificate(A);
            cert.signature = gram.signature;
            cert.definite = gram.definite;
            cert.real_form_label = gram.real_form_label;
        } else if (ir.solution_dim != 1) {
            cert.failures.push_back("sheaf is not uniquely sigma-intertwined (dim " +
                                    std::to_string(ir.solution_dim) + ")");
        }
    }

    if (!cert.failures.empty()) {
        cert.verdict = "rejected";
    } else {
        cert.verdict = cert.definite ? "M(C,pi) point" : "real chart point";
    }
    return cert;
}

}  // namespace specchart
