#include "specchart/poly.hpp"

#include <sstream>

#include "specchart/errors.hpp"

namespace specchart {

Poly Poly::monomial(int j, const GQ& c) {
    if (j < 0) throw OutOfRange("monomial exponent must be nonnegative");
    std::vector<GQ> v(static_cast<size_t>(j) + 1, GQ(0));
    v.back() = c;
    return Poly(std::move(v));
}

GQ Poly::eval(const GQ& z) const {
    GQ acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GQ> d(c_.size() - 1);
    for (size_t j = 1; j < c_.size(); ++j) d[j - 1] = c_[j] * GQ(static_cast<long>(j));
    return Poly(std::move(d));
}

Poly Poly::conj_coeffs() const {
    std::vector<GQ> d(c_.size());
    for (size_t j = 0; j < c_.size(); ++j) d[j] = c_[j].conj();
    return Poly(std::move(d));
}

Poly Poly::reverse_padded(int d) const {
    if (degree() > d) throw OutOfRange("reverse_padded: degree exceeds declared bound");
    std::vector<GQ> v(static_cast<size_t>(d) + 1, GQ(0));
    for (int j = 0; j <= degree(); ++j) v[static_cast<size_t>(d - j)] = coeff(j);
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), GQ(0));
    for (size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), GQ(0));
    for (size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

Poly& Poly::operator*=(const GQ& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GQ> v(a.c_.size() + b.c_.size() - 1, GQ(0));
    for (size_t p = 0; p < a.c_.size(); ++p)
        for (size_t q = 0; q < b.c_.size(); ++q) v[p + q] += a.c_[p] * b.c_[q];
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly r = num;
    if (num.degree() < den.degree()) return {Poly(), r};
    std::vector<GQ> q(static_cast<size_t>(num.degree() - den.degree()) + 1, GQ(0));
    GQ lead_inv = den.lead().inverse();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        int shift = r.degree() - den.degree();
        GQ f = r.lead() * lead_inv;
        q[static_cast<size_t>(shift)] = f;
        r -= Poly::monomial(shift, f) * den;
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::exact_div(const Poly& den) const {
    auto [q, r] = divrem(*this, den);
    if (!r.is_zero()) throw InternalError("exact_div left a remainder");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lead().inverse();
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = degree(); j >= 0; --j) {
        GQ c = coeff(j);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0) {
            os << "(" << c.str() << ")";
        } else {
            if (c != GQ(1)) os << "(" << c.str() << ")*";
            os << var;
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = Poly::divrem(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return u.monic();
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree_part of zero polynomial");
    if (f.degree() == 0) return Poly::one();
    Poly g = poly_gcd(f, f.derivative());
    return f.exact_div(g).monic();
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

Poly poly_sigma_twist(const Poly& f, int d) {
    if (f.degree() > d) throw OutOfRange("sigma twist: degree exceeds weight");
    GQ unit(1);
    for (int t = 0; t < (d % 4); ++t) unit *= GQ::i();
    std::vector<GQ> g(static_cast<size_t>(d) + 1, GQ(0));
    for (int j = 0; j <= d; ++j) {
        GQ c = f.coeff(d - j).conj();
        if (((d + j) % 2) != 0) c = -c;
        g[static_cast<size_t>(j)] = unit * c;
    }
    return Poly(std::move(g));
}

}  // namespace specchart
