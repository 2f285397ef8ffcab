#include "specchart/bipoly.hpp"

#include <sstream>

#include "specchart/errors.hpp"
#include "specchart/matrix.hpp"

namespace specchart {

BiPoly BiPoly::eta_monomial(int m, Poly c) {
    if (m < 0) throw OutOfRange("eta_monomial exponent must be nonnegative");
    std::vector<Poly> e(static_cast<size_t>(m) + 1);
    e.back() = std::move(c);
    return BiPoly(std::move(e));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.e_.size() > e_.size()) e_.resize(o.e_.size());
    for (size_t m = 0; m < o.e_.size(); ++m) e_[m] += o.e_[m];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.e_.size() > e_.size()) e_.resize(o.e_.size());
    for (size_t m = 0; m < o.e_.size(); ++m) e_[m] -= o.e_[m];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    std::vector<Poly> e(a.e_.size() + b.e_.size() - 1);
    for (size_t p = 0; p < a.e_.size(); ++p)
        for (size_t q = 0; q < b.e_.size(); ++q) e[p + q] += a.e_[p] * b.e_[q];
    return BiPoly(std::move(e));
}

BiPoly operator*(const BiPoly& a, const Poly& s) {
    std::vector<Poly> e(a.e_.size());
    for (size_t m = 0; m < a.e_.size(); ++m) e[m] = a.e_[m] * s;
    return BiPoly(std::move(e));
}

BiPoly BiPoly::d_eta() const {
    if (e_.size() <= 1) return BiPoly();
    std::vector<Poly> d(e_.size() - 1);
    for (size_t m = 1; m < e_.size(); ++m)
        d[m - 1] = e_[m] * GQ(static_cast<long>(m));
    return BiPoly(std::move(d));
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int m = degree_eta(); m >= 0; --m) {
        if (coeff_eta(m).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (m == 0) {
            os << coeff_eta(m).str();
        } else {
            os << "(" << coeff_eta(m).str() << ")*eta";
            if (m > 1) os << "^" << m;
        }
    }
    return os.str();
}

Poly discriminant_eta(const BiPoly& p) {
    if (!p.monic_in_eta()) throw NotMonic("discriminant requires monic input in eta");
    const int k = p.degree_eta();
    if (k < 1) throw NotMonic("discriminant requires positive eta-degree");
    const BiPoly dp = p.d_eta();
    const int dk = k - 1;
    // Sylvester matrix of (p, dp) in eta over Q(i)[zeta]; size 2k-1.
    const int n = 2 * k - 1;
    Mat<Poly> s(n, n, Poly());
    for (int r = 0; r < dk; ++r)
        for (int j = 0; j <= k; ++j) s.at(r, r + j) = p.coeff_eta(k - j);
    for (int r = 0; r < k; ++r)
        for (int j = 0; j <= dk; ++j) s.at(dk + r, r + j) = dp.coeff_eta(dk - j);
    Poly res = bareiss_det(s);
    if ((k * (k - 1) / 2) % 2 != 0) res = -res;
    return res;
}

namespace {

// Polynomials in eta with Poly coefficients, for the function-field gcd.
using EtaPoly = std::vector<Poly>;  // index = eta power, trimmed

void fftrim(EtaPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

Poly content_of(const EtaPoly& f) {
    Poly g;
    for (const Poly& c : f) g = poly_gcd(g, c);
    return g;
}

EtaPoly primitive_part(EtaPoly f) {
    Poly c = content_of(f);
    if (c.is_zero() || c.degree() == 0) return f;
    for (Poly& e : f) e = e.exact_div(c);
    return f;
}

// Pseudo-remainder of f by g in eta: lc(g)^(deg f - deg g + 1) * f mod g.
EtaPoly pseudo_rem(EtaPoly f, const EtaPoly& g) {
    fftrim(f);
    const int dg = static_cast<int>(g.size()) - 1;
    const Poly& lg = g.back();
    while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
        const int df = static_cast<int>(f.size()) - 1;
        Poly lf = f.back();
        for (Poly& e : f) e = e * lg;
        for (int j = 0; j <= dg; ++j)
            f[static_cast<size_t>(df - dg + j)] -= lf * g[static_cast<size_t>(j)];
        fftrim(f);
    }
    return f;
}

EtaPoly to_etapoly(const BiPoly& p) {
    EtaPoly f;
    for (int m = 0; m <= p.degree_eta(); ++m) f.push_back(p.coeff_eta(m));
    fftrim(f);
    return f;
}

}  // namespace

int bivariate_gcd_eta_degree(const BiPoly& p) {
    EtaPoly f = to_etapoly(p);
    EtaPoly g = to_etapoly(p.d_eta());
    fftrim(f);
    fftrim(g);
    if (g.empty()) return f.empty() ? -1 : static_cast<int>(f.size()) - 1;
    f = primitive_part(std::move(f));
    g = primitive_part(std::move(g));
    while (true) {
        EtaPoly r = pseudo_rem(f, g);
        if (r.empty()) return static_cast<int>(g.size()) - 1;
        f = std::move(g);
        g = primitive_part(std::move(r));
    }
}

}  // namespace specchart
