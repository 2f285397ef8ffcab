#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "specchart/matrix.hpp"
#include "specchart/poly.hpp"

namespace specchart {

/// Quotient ring K = Q(i)[z]/(f) with f monic squarefree. Algebraic points
/// (roots of discriminants and similar) live here; no numerical root
/// isolation happens on any verdict path.
class QRing {
  public:
    explicit QRing(Poly modulus);
    const Poly& modulus() const { return f_; }
    int degree() const { return f_.degree(); }

  private:
    Poly f_;
};

using QRingPtr = std::shared_ptr<const QRing>;

QRingPtr make_ring(Poly modulus);

/// Thrown when an inversion meets a zero divisor: `factor` is a proper monic
/// factor of the level-1 modulus. Drivers split the modulus and rerun.
struct RingSplit {
    Poly factor;
};

/// Element of K. A default-constructed element is the literal zero with no
/// ring attached; arithmetic coalesces it with any ring.
class QElem {
  public:
    QElem() = default;
    QElem(long v) : QElem(Poly(GQ(v)), nullptr) {}  // NOLINT: for generic code
    QElem(Poly rep, QRingPtr ring);

    static QElem zero(QRingPtr ring) { return QElem(Poly(), std::move(ring)); }
    static QElem one(QRingPtr ring) { return QElem(Poly::one(), std::move(ring)); }
    static QElem generator(QRingPtr ring) { return QElem(Poly::x(), std::move(ring)); }
    static QElem from_scalar(const GQ& c, QRingPtr ring) {
        return QElem(Poly(c), std::move(ring));
    }

    const Poly& rep() const { return rep_; }
    const QRingPtr& ring() const { return ring_; }
    bool is_zero() const { return rep_.is_zero(); }

    /// Throws DivisionByZero on literal zero, RingSplit on a zero divisor.
    QElem inverse() const;

    QElem conj_base() const { return QElem(rep_.conj_coeffs(), ring_); }

    friend QElem operator+(const QElem& a, const QElem& b);
    friend QElem operator-(const QElem& a, const QElem& b);
    friend QElem operator*(const QElem& a, const QElem& b);
    friend QElem operator-(const QElem& a) { return QElem(-a.rep_, a.ring_); }
    friend bool operator==(const QElem& a, const QElem& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const QElem& a, const QElem& b) { return !(a == b); }

    std::string str() const { return rep_.str("z"); }

  private:
    Poly rep_;       // reduced mod f
    QRingPtr ring_;  // null for the detached literal zero / integer literals
};

/// Evaluation of a zeta-polynomial at the ring generator.
QElem eval_poly(const Poly& p, const QRingPtr& ring);

/// Polynomials in eta over K, trimmed; coefficient ring carried separately.
struct EPoly {
    std::vector<QElem> c;  // index = eta power
    QRingPtr ring;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    QElem coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(c.size())) ? c[static_cast<size_t>(j)]
                                                          : QElem::zero(ring);
    }
    QElem lead() const { return is_zero() ? QElem::zero(ring) : c.back(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

EPoly epoly_zero(QRingPtr ring);
EPoly epoly_from(std::vector<QElem> coeffs, QRingPtr ring);
EPoly epoly_add(const EPoly& a, const EPoly& b);
EPoly epoly_sub(const EPoly& a, const EPoly& b);
EPoly epoly_mul(const EPoly& a, const EPoly& b);
EPoly epoly_scale(const EPoly& a, const QElem& s);
EPoly epoly_derivative(const EPoly& a);
/// Monic-normalizes (may split the base ring).
EPoly epoly_monic(const EPoly& a);
/// Division by a monic divisor.
std::pair<EPoly, EPoly> epoly_divrem_monic(const EPoly& num, const EPoly& den);
EPoly epoly_exact_div_monic(const EPoly& num, const EPoly& den);
/// Monic gcd over K (splits propagate via RingSplit).
EPoly epoly_gcd(const EPoly& a, const EPoly& b);

/// Squarefree decomposition f = prod h_i^{m_i} with h_i monic pairwise
/// coprime; returned as (h_i, m_i), multiplicities ascending.
std::vector<std::pair<EPoly, int>> epoly_squarefree_decomposition(const EPoly& f);

/// Level-2 extension L = K[eta]/(h), h monic squarefree over K.
class ERing {
  public:
    ERing(EPoly h, QRingPtr base) : h_(std::move(h)), base_(std::move(base)) {}
    const EPoly& modulus() const { return h_; }
    const QRingPtr& base() const { return base_; }
    int degree() const { return h_.degree(); }

  private:
    EPoly h_;
    QRingPtr base_;
};

using ERingPtr = std::shared_ptr<const ERing>;

/// Thrown when a level-2 inversion meets a zero divisor: `factor` is a proper
/// monic factor of the eta-modulus over the (unchanged) base ring.
struct EtaSplit {
    EPoly factor;
};

class EElem {
  public:
    EElem() = default;
    EElem(long v);  // NOLINT: detached literal for generic code
    EElem(EPoly rep, ERingPtr ring);

    static EElem zero(ERingPtr ring);
    static EElem from_qelem(const QElem& c, ERingPtr ring);
    static EElem generator(ERingPtr ring);

    const EPoly& rep() const { return rep_; }
    const ERingPtr& ring() const { return ring_; }
    bool is_zero() const { return rep_.is_zero(); }

    /// Throws DivisionByZero / EtaSplit / RingSplit.
    EElem inverse() const;

    friend EElem operator+(const EElem& a, const EElem& b);
    friend EElem operator-(const EElem& a, const EElem& b);
    friend EElem operator*(const EElem& a, const EElem& b);
    friend EElem operator-(const EElem& a);

  private:
    EPoly rep_;
    ERingPtr ring_;
};

/// Rank of a matrix over K or L by Gaussian elimination; every pivot is a
/// verified unit, so the count is uniform over all residue fields of the
/// (possibly refined) modulus. Splits escape as exceptions.
template <class E>
int ring_rank(Mat<E> m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(row, j));
        E inv = m.at(row, col).inverse();
        for (int i = row + 1; i < rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            E f = m.at(i, col) * inv;
            for (int j = col; j < cols; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        ++rank;
        ++row;
    }
    return rank;
}

/// Runs `fn` over every branch of the squarefree modulus, refining on
/// RingSplit; results are tagged with the branch modulus.
template <class R, class F>
std::vector<std::pair<Poly, R>> for_each_branch(const Poly& modulus, F fn) {
    std::vector<Poly> work{modulus.monic()};
    std::vector<std::pair<Poly, R>> out;
    while (!work.empty()) {
        Poly f = work.back();
        work.pop_back();
        try {
            QRingPtr ring = make_ring(f);
            out.emplace_back(f, fn(ring));
        } catch (const RingSplit& s) {
            Poly g = s.factor.monic();
            work.push_back(g);
            work.push_back(f.exact_div(g).monic());
        }
    }
    return out;
}

/// A point of the projective line over an exact coefficient ring: either
/// infinity or the class of z in Q(i)[z]/(f) for a squarefree modulus f
/// (a rational point being the special case f = z - c).
struct RingPoint {
    bool at_infinity = false;
    Poly modulus;  // monic squarefree, ignored at infinity

    static RingPoint infinity() {
        RingPoint p;
        p.at_infinity = true;
        return p;
    }
    static RingPoint rational(const GQ& z0) {
        RingPoint p;
        p.modulus = Poly({-z0, GQ(1)});
        return p;
    }
    static RingPoint algebraic(const Poly& modulus);

    std::string str() const;
};

}  // namespace specchart
