#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specchart/poly.hpp"

namespace specchart {

/// Bivariate polynomial in (zeta, eta), stored densely by eta-power.
/// Canonical form: no trailing zero eta-coefficients.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(Poly constant) { e_.push_back(std::move(constant)); trim(); }
    explicit BiPoly(std::vector<Poly> eta_coeffs) : e_(std::move(eta_coeffs)) { trim(); }

    static BiPoly eta_monomial(int m, Poly c);

    int degree_eta() const { return static_cast<int>(e_.size()) - 1; }
    bool is_zero() const { return e_.empty(); }
    Poly coeff_eta(int m) const {
        return (m >= 0 && m < static_cast<int>(e_.size())) ? e_[m] : Poly();
    }
    GQ coeff(int m, int l) const { return coeff_eta(m).coeff(l); }
    const std::vector<Poly>& eta_coeffs() const { return e_; }

    bool monic_in_eta() const {
        return !is_zero() && e_.back() == Poly::one();
    }

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const Poly& s);
    friend BiPoly operator*(const Poly& s, const BiPoly& a) { return a * s; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.e_ == b.e_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    /// Partial derivative with respect to eta.
    BiPoly d_eta() const;

    std::string str() const;

  private:
    void trim() {
        while (!e_.empty() && e_.back().is_zero()) e_.pop_back();
    }
    std::vector<Poly> e_;
};

/// Resultant in eta of P (monic in eta) and dP/deta, as a polynomial in zeta.
/// Computed as the determinant of the Sylvester matrix by fraction-free
/// elimination over Q(i)[zeta]. Throws NotMonic.
Poly discriminant_eta(const BiPoly& p);

/// gcd of P and dP/deta as polynomials in eta over the rational-function
/// field Q(i)(zeta); returns the degree of the gcd (0 means squarefree).
int bivariate_gcd_eta_degree(const BiPoly& p);

}  // namespace specchart
