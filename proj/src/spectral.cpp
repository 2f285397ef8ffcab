#include "specchart/spectral.hpp"

#include <algorithm>
#include <string>

#include "specchart/errors.hpp"

namespace specchart {

SpectralCurve::SpectralCurve(int k_, std::vector<Poly> a_) : k(k_), a(std::move(a_)) {
    if (k < 1) throw OutOfRange("spectral curve needs k >= 1");
    if (a.size() != static_cast<size_t>(k))
        throw OutOfRange("spectral curve needs exactly k coefficient sections");
    for (int i = 1; i <= k; ++i)
        if (a[static_cast<size_t>(i - 1)].degree() > 2 * i)
            throw DegreeBoundViolated("deg a_" + std::to_string(i) + " exceeds " +
                                      std::to_string(2 * i));
}

BiPoly SpectralCurve::as_bipoly() const {
    std::vector<Poly> e(static_cast<size_t>(k) + 1);
    e[static_cast<size_t>(k)] = Poly::one();
    for (int i = 1; i <= k; ++i) e[static_cast<size_t>(k - i)] = a[static_cast<size_t>(i - 1)];
    return BiPoly(std::move(e));
}

SpectralCurve SpectralCurve::infinity_chart() const {
    std::vector<Poly> b(a.size());
    for (int i = 1; i <= k; ++i)
        b[static_cast<size_t>(i - 1)] = a[static_cast<size_t>(i - 1)].reverse_padded(2 * i);
    return SpectralCurve(k, std::move(b));
}

namespace {

bool is_anti_hermitian(const MatQ& t) { return conj_transpose(t) == -t; }

}  // namespace

QuadraticDatum datum_from_triple(const MatQ& t1, const MatQ& t2, const MatQ& t3) {
    const char* names[3] = {"T1", "T2", "T3"};
    const MatQ* ts[3] = {&t1, &t2, &t3};
    for (int j = 0; j < 3; ++j)
        if (!is_anti_hermitian(*ts[j]))
            throw NotAntiHermitian(std::string(names[j]) + " fails T^dag = -T");
    const int k = t1.rows();
    MatrixPoly A(k, 2);
    const GQ i2 = GQ::i() * GQ(2);
    A.coeff(0) = t2 + GQ::i() * t3;
    A.coeff(1) = i2 * t1;
    A.coeff(2) = t2 - GQ::i() * t3;
    return QuadraticDatum(std::move(A));
}

void triple_from_datum(const QuadraticDatum& A, MatQ& t1, MatQ& t2, MatQ& t3) {
    const GQ half{mpq_class(1, 2), mpq_class(0)};
    const GQ inv2i = GQ::i().inverse() * half;  // 1/(2i)
    t1 = A.A1() * inv2i;
    t2 = (A.A0() + A.A2()) * half;
    t3 = (A.A0() - A.A2()) * inv2i;
}

DatumRealityReport datum_reality_check(const QuadraticDatum& A) {
    DatumRealityReport r;
    r.a1_hermitian = (conj_transpose(A.A1()) == A.A1());
    r.a2_matches = (A.A2() == -conj_transpose(A.A0()));
    r.a0_matches = (A.A0() == -conj_transpose(A.A2()));
    return r;
}

SpectralCurve curve_from_datum(const MatrixPoly& A) {
    if (A.deg_bound() > 2)
        throw DegreeBoundViolated("chart data must have declared degree <= 2");
    CharData cd = faddeev_leverrier(A);
    return SpectralCurve(A.k(), std::move(cd.a));
}

CurveRealityReport curve_reality_check(const SpectralCurve& s) {
    CurveRealityReport r;
    for (int i = 1; i <= s.k; ++i) {
        const Poly& ai = s.a[static_cast<size_t>(i - 1)];
        if (poly_sigma_twist(ai, 2 * i) != ai) {
            r.ok = false;
            r.failing_indices.push_back(i);
        }
    }
    return r;
}

CurveInvariants curve_invariants(const SpectralCurve& s) {
    const int k = s.k;
    CurveInvariants out;
    BiPoly p = s.as_bipoly();
    out.disc = discriminant_eta(p);
    out.reduced = !out.disc.is_zero();
    const bool gcd_trivial = (bivariate_gcd_eta_degree(p) == 0);
    if (gcd_trivial != out.reduced)
        throw InternalError("discriminant and function-field gcd disagree on reducedness");

    // chi(O_C) from the pushforward splitting sum_{j<k} O(-2j).
    int chi = 0;
    for (int j = 0; j < k; ++j) chi += 1 - 2 * j;
    out.genus_pushforward = 1 - chi;

    if (out.reduced) {
        const int full = 2 * k * (k - 1);
        Poly disc_inf = discriminant_eta(s.infinity_chart().as_bipoly());
        if (disc_inf != out.disc.reverse_padded(full))
            throw InternalError("discriminants of the two charts are not reversals");
        out.branch_degree = full;
        out.genus_rh = 1 - k + full / 2;
        if (*out.genus_rh != out.genus_pushforward)
            throw InternalError("genus computations disagree");
        out.genus = out.genus_pushforward;
    }
    return out;
}

bool regular_at(const MatrixPoly& A, const RingPoint& pt) {
    CentralizerDims dims = centralizer_dims(A, pt);
    for (const auto& b : dims.branches)
        if (b.dim != A.k()) return false;
    return true;
}

std::vector<Poly> krylov_wedge_minors(const MatrixPoly& A) {
    const int k = A.k();
    const int n = k * k;
    // Columns: vec of A^i as polynomial vectors.
    std::vector<std::vector<Poly>> cols;
    for (int i = 0; i < k; ++i) {
        MatrixPoly p = A.pow(i);
        std::vector<Poly> col(static_cast<size_t>(n));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) col[static_cast<size_t>(r * k + c)] = p.entry(r, c);
        cols.push_back(std::move(col));
    }
    std::vector<Poly> minors;
    std::vector<int> pick(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
        Mat<Poly> m(k, k, Poly());
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                m.at(r, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(pick[static_cast<size_t>(r)])];
        minors.push_back(bareiss_det(m));
        int t = k - 1;
        while (t >= 0 && pick[static_cast<size_t>(t)] == n - k + t) --t;
        if (t < 0) break;
        ++pick[static_cast<size_t>(t)];
        for (int u = t + 1; u < k; ++u) pick[static_cast<size_t>(u)] = pick[static_cast<size_t>(u - 1)] + 1;
    }
    return minors;
}

namespace {

void check_suspects(const MatrixPoly& A, const Poly& modulus,
                    RegularityCertificate& cert) {
    const int k = A.k();
    CentralizerDims dims = centralizer_dims(A, RingPoint::algebraic(modulus));
    for (const auto& b : dims.branches) {
        SuspectWitness w;
        w.modulus = b.modulus;
        w.centralizer_dim = b.dim;
        w.pass = (b.dim == k);
        if (!w.pass) cert.verdict = false;
        cert.witnesses.push_back(std::move(w));
    }
}

void check_infinity(const MatrixPoly& A, RegularityCertificate& cert) {
    const int k = A.k();
    SuspectWitness w;
    w.at_infinity = true;
    w.centralizer_dim = k * k - mat_rank(sylvester_matrix(A.eval_infinity()));
    w.pass = (w.centralizer_dim == k);
    if (!w.pass) cert.verdict = false;
    cert.witnesses.push_back(std::move(w));
}

}  // namespace

RegularityCertificate regular_everywhere(const MatrixPoly& A) {
    RegularityCertificate cert;
    cert.verdict = true;
    BiPoly p = mp_char_poly(A);
    Poly disc = discriminant_eta(p);
    if (!disc.is_zero()) {
        Poly f = squarefree_part(disc);
        if (f.degree() >= 1) check_suspects(A, f, cert);
        check_infinity(A, cert);
        return cert;
    }

    // Identically-collapsed spectrum: decide generically via the Krylov
    // wedge, then check the finite zero locus of its content.
    cert.nonreduced_warning = true;
    std::vector<Poly> minors = krylov_wedge_minors(A);
    Poly content;
    bool any_nonzero = false;
    for (const Poly& m : minors) {
        if (!m.is_zero()) any_nonzero = true;
        content = poly_gcd(content, m);
        if (content.degree() == 0 && !content.is_zero()) break;
    }
    cert.generic_ok = any_nonzero;
    if (!any_nonzero) {
        cert.verdict = false;
        check_infinity(A, cert);
        return cert;
    }
    if (content.degree() >= 1) check_suspects(A, squarefree_part(content), cert);
    check_infinity(A, cert);
    return cert;
}

StrongRegularity strongly_regular(const MatrixPoly& A) {
    const int k = A.k();
    std::vector<std::vector<GQ>> rows;
    for (int i = 1; i <= k - 1; ++i)
        for (const MatQ& c : mp_power_coeffs(A, i)) rows.push_back(vec(c));
    StrongRegularity out;
    out.remark_rank = rows.empty() ? 0 : mat_rank(stack_rows(rows));
    rows.push_back(vec(MatQ::identity(k)));
    out.definition_rank = mat_rank(stack_rows(rows));
    out.verdict = (out.definition_rank == k * k);
    return out;
}

JointCentralizer joint_centralizer_dim(const MatrixPoly& A) {
    RegularityCertificate reg = regular_everywhere(A);
    if (!reg.verdict)
        throw NotRegularEverywhere("joint centralizer requires a regular-everywhere section");
    const int k = A.k();
    const int d = A.deg_bound();
    MatQ stacked((d + 1) * k * k, k * k);
    for (int j = 0; j <= d; ++j) {
        MatQ s = sylvester_matrix(A.coeff(j));
        for (int r = 0; r < k * k; ++r)
            for (int c = 0; c < k * k; ++c) stacked.at(j * k * k + r, c) = s.at(r, c);
    }
    JointCentralizer out;
    out.dim = k * k - mat_rank(stacked);
    out.connected = (out.dim == 1);
    return out;
}

int centralizer_bundle_degree(const MatrixPoly& A) {
    RegularityCertificate reg = regular_everywhere(A);
    if (!reg.verdict)
        throw NotRegularEverywhere("bundle degree requires a regular-everywhere section");
    const int k = A.k();
    const int homog = A.deg_bound() * (0 + k - 1) * k / 2;  // sum of column weights

    std::vector<Poly> minors = krylov_wedge_minors(A);
    Poly content;
    for (const Poly& m : minors) content = poly_gcd(content, m);
    if (content.is_zero())
        throw ContentNotRemovable("wedge vanishes identically");
    if (content.degree() > 0)
        throw ContentNotRemovable("wedge content has finite zeros: " + content.str());

    // Infinity chart: coefficients reversed within the declared bound.
    std::vector<MatQ> rev(A.coeffs().rbegin(), A.coeffs().rend());
    MatrixPoly Ainf(A.k(), A.deg_bound(), std::move(rev));
    std::vector<Poly> minors_inf = krylov_wedge_minors(Ainf);
    int ord_inf = homog;
    for (size_t t = 0; t < minors_inf.size(); ++t) {
        const Poly& m = minors_inf[t];
        if (m.is_zero()) continue;
        if (minors[t].reverse_padded(homog) != m)
            throw InternalError("wedge charts are not degree-" + std::to_string(homog) +
                                " reversals");
        int ord = 0;
        while (m.coeff(ord).is_zero()) ++ord;
        ord_inf = std::min(ord_inf, ord);
    }
    if (ord_inf > 0)
        throw ContentNotRemovable("wedge content vanishes at infinity");
    return -homog;
}

}  // namespace specchart
