#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "specchart/gaussian.hpp"

namespace specchart {

/// Univariate polynomial in zeta over the Gaussian rationals.
/// Canonical form: no stored trailing zero coefficients; degree() of the
/// zero polynomial is -1.
class Poly {
  public:
    Poly() = default;
    Poly(const GQ& c) { c_.push_back(c); trim(); }  // NOLINT
    Poly(long c) : Poly(GQ(c)) {}                   // NOLINT
    explicit Poly(std::vector<GQ> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<GQ> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(GQ(1)); }
    static Poly x() { return monomial(1, GQ(1)); }
    static Poly monomial(int j, const GQ& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    GQ coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[j] : GQ(0);
    }
    const std::vector<GQ>& coeffs() const { return c_; }
    GQ lead() const { return is_zero() ? GQ(0) : c_.back(); }

    GQ eval(const GQ& z) const;
    Poly derivative() const;
    Poly conj_coeffs() const;

    // Coefficient reversal padded to declared degree d (requires degree() <= d).
    Poly reverse_padded(int d) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const GQ& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GQ& s) { return a *= s; }
    friend Poly operator*(const GQ& s, Poly a) { return a *= s; }
    friend Poly operator-(const Poly& a) { return a * GQ(-1); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; divisor must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& num, const Poly& den);
    // Division asserting a zero remainder.
    Poly exact_div(const Poly& den) const;

    Poly monic() const;

    std::string str(const std::string& var = "zeta") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GQ> c_;
};

/// Monic gcd via the Euclidean algorithm (field coefficients).
Poly poly_gcd(const Poly& a, const Poly& b);

/// f / gcd(f, f'), monic; no repeated roots. Throws ZeroPolynomial.
Poly squarefree_part(const Poly& f);

/// True when gcd(f, f') is constant.
bool is_squarefree(const Poly& f);

/// Twisted conjugate pullback of a weight-d section under the antipodal map:
///   f^sigma(zeta) = i^d * zeta^d * conj(f(-1/conj(zeta))),
/// i.e. coefficientwise g_j = i^d * (-1)^(d+j) * conj(f_{d-j}).
/// Fixed points for even d = 2w are exactly the coefficient rule
/// c_{2w-j} = (-1)^(w+j) conj(c_j); the unit i^d makes the twist
/// multiplicative across weights. Requires degree() <= d.
Poly poly_sigma_twist(const Poly& f, int d);

}  // namespace specchart
