#include "specchart/ring.hpp"

#include "specchart/errors.hpp"

namespace specchart {

QRing::QRing(Poly modulus) : f_(modulus.monic()) {
    if (f_.degree() < 1) throw InvalidRing("modulus must be nonconstant");
    if (!is_squarefree(f_)) throw InvalidRing("modulus is not squarefree: " + f_.str());
}

QRingPtr make_ring(Poly modulus) { return std::make_shared<QRing>(std::move(modulus)); }

namespace {

QRingPtr coalesce(const QRingPtr& a, const QRingPtr& b) {
    if (a && b && a != b && a->modulus() != b->modulus())
        throw InternalError("mixing elements of different quotient rings");
    return a ? a : b;
}

}  // namespace

QElem::QElem(Poly rep, QRingPtr ring) : rep_(std::move(rep)), ring_(std::move(ring)) {
    if (ring_) rep_ = Poly::divrem(rep_, ring_->modulus()).second;
}

QElem operator+(const QElem& a, const QElem& b) {
    return QElem(a.rep_ + b.rep_, coalesce(a.ring_, b.ring_));
}

QElem operator-(const QElem& a, const QElem& b) {
    return QElem(a.rep_ - b.rep_, coalesce(a.ring_, b.ring_));
}

QElem operator*(const QElem& a, const QElem& b) {
    return QElem(a.rep_ * b.rep_, coalesce(a.ring_, b.ring_));
}

QElem QElem::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero ring element");
    if (!ring_) return QElem(Poly(rep_.coeff(0).inverse()), nullptr);
    // Extended Euclid: u*rep + v*f = g. g constant -> unit; otherwise g is a
    // proper factor of the modulus and the branch must split.
    Poly r0 = ring_->modulus(), r1 = rep_;
    Poly s0, s1 = Poly::one();  // s tracks the rep-coefficient
    while (!r1.is_zero()) {
        auto [q, r] = Poly::divrem(r0, r1);
        Poly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() > 0) {
        if (r0.degree() == ring_->modulus().degree())
            throw InternalError("gcd equals modulus for nonzero representative");
        throw RingSplit{r0.monic()};
    }
    return QElem(s0 * r0.coeff(0).inverse(), ring_);
}

QElem eval_poly(const Poly& p, const QRingPtr& ring) {
    return QElem(p, ring);
}

EPoly epoly_zero(QRingPtr ring) { return EPoly{{}, std::move(ring)}; }

EPoly epoly_from(std::vector<QElem> coeffs, QRingPtr ring) {
    EPoly p{std::move(coeffs), std::move(ring)};
    p.trim();
    return p;
}

EPoly epoly_add(const EPoly& a, const EPoly& b) {
    EPoly out = a;
    if (b.c.size() > out.c.size()) out.c.resize(b.c.size(), QElem::zero(a.ring));
    for (size_t j = 0; j < b.c.size(); ++j) out.c[j] = out.c[j] + b.c[j];
    out.trim();
    return out;
}

EPoly epoly_sub(const EPoly& a, const EPoly& b) {
    EPoly out = a;
    if (b.c.size() > out.c.size()) out.c.resize(b.c.size(), QElem::zero(a.ring));
    for (size_t j = 0; j < b.c.size(); ++j) out.c[j] = out.c[j] - b.c[j];
    out.trim();
    return out;
}

EPoly epoly_mul(const EPoly& a, const EPoly& b) {
    if (a.is_zero() || b.is_zero()) return epoly_zero(a.ring ? a.ring : b.ring);
    std::vector<QElem> v(a.c.size() + b.c.size() - 1, QElem::zero(a.ring));
    for (size_t p = 0; p < a.c.size(); ++p)
        for (size_t q = 0; q < b.c.size(); ++q) v[p + q] = v[p + q] + a.c[p] * b.c[q];
    return epoly_from(std::move(v), a.ring);
}

EPoly epoly_scale(const EPoly& a, const QElem& s) {
    std::vector<QElem> v = a.c;
    for (auto& e : v) e = e * s;
    return epoly_from(std::move(v), a.ring);
}

EPoly epoly_derivative(const EPoly& a) {
    if (a.c.size() <= 1) return epoly_zero(a.ring);
    std::vector<QElem> v(a.c.size() - 1, QElem::zero(a.ring));
    for (size_t j = 1; j < a.c.size(); ++j)
        v[j - 1] = a.c[j] * QElem::from_scalar(GQ(static_cast<long>(j)), a.ring);
    return epoly_from(std::move(v), a.ring);
}

EPoly epoly_monic(const EPoly& a) {
    if (a.is_zero()) return a;
    return epoly_scale(a, a.lead().inverse());
}

std::pair<EPoly, EPoly> epoly_divrem_monic(const EPoly& num, const EPoly& den) {
    if (den.is_zero()) throw DivisionByZero("epoly division by zero");
    EPoly r = num;
    std::vector<QElem> q(
        num.degree() >= den.degree() ? static_cast<size_t>(num.degree() - den.degree()) + 1 : 0,
        QElem::zero(num.ring));
    while (!r.is_zero() && r.degree() >= den.degree()) {
        int shift = r.degree() - den.degree();
        QElem f = r.lead();
        q[static_cast<size_t>(shift)] = f;
        std::vector<QElem> sub(static_cast<size_t>(shift), QElem::zero(num.ring));
        sub.push_back(f);
        r = epoly_sub(r, epoly_mul(epoly_from(std::move(sub), num.ring), den));
    }
    return {epoly_from(std::move(q), num.ring), r};
}

EPoly epoly_exact_div_monic(const EPoly& num, const EPoly& den) {
    auto [q, r] = epoly_divrem_monic(num, den);
    if (!r.is_zero()) throw InternalError("epoly exact division left a remainder");
    return q;
}

EPoly epoly_gcd(const EPoly& a, const EPoly& b) {
    EPoly u = a, v = b;
    while (!v.is_zero()) {
        v = epoly_monic(v);  // may split the base ring
        EPoly r = epoly_divrem_monic(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    return u.is_zero() ? u : epoly_monic(u);
}

std::vector<std::pair<EPoly, int>> epoly_squarefree_decomposition(const EPoly& f) {
    std::vector<std::pair<EPoly, int>> out;
    EPoly fm = epoly_monic(f);
    if (fm.degree() < 1) return out;
    EPoly g = epoly_gcd(fm, epoly_derivative(fm));
    EPoly c = epoly_exact_div_monic(fm, g);
    int i = 1;
    while (c.degree() > 0) {
        EPoly d = epoly_gcd(c, g);
        EPoly part = epoly_exact_div_monic(c, d);
        if (part.degree() > 0) out.emplace_back(part, i);
        g = epoly_exact_div_monic(g, d);
        c = std::move(d);
        ++i;
    }
    return out;
}

EElem::EElem(long v)
    : rep_{std::vector<QElem>{QElem(v)}, nullptr}, ring_(nullptr) {
    rep_.trim();
}

EElem::EElem(EPoly rep, ERingPtr ring) : rep_(std::move(rep)), ring_(std::move(ring)) {
    if (ring_) rep_ = epoly_divrem_monic(rep_, ring_->modulus()).second;
}

EElem EElem::zero(ERingPtr ring) {
    QRingPtr base = ring ? ring->base() : nullptr;
    return EElem(epoly_zero(base), std::move(ring));
}

EElem EElem::from_qelem(const QElem& c, ERingPtr ring) {
    return EElem(epoly_from({c}, ring->base()), ring);
}

EElem EElem::generator(ERingPtr ring) {
    QRingPtr base = ring->base();
    return EElem(epoly_from({QElem::zero(base), QElem::one(base)}, base), std::move(ring));
}

namespace {

ERingPtr coalesce_e(const ERingPtr& a, const ERingPtr& b) {
    if (a && b && a != b) throw InternalError("mixing elements of different eta-extensions");
    return a ? a : b;
}

}  // namespace

EElem operator+(const EElem& a, const EElem& b) {
    return EElem(epoly_add(a.rep_, b.rep_), coalesce_e(a.ring_, b.ring_));
}

EElem operator-(const EElem& a, const EElem& b) {
    return EElem(epoly_sub(a.rep_, b.rep_), coalesce_e(a.ring_, b.ring_));
}

EElem operator*(const EElem& a, const EElem& b) {
    return EElem(epoly_mul(a.rep_, b.rep_), coalesce_e(a.ring_, b.ring_));
}

EElem operator-(const EElem& a) {
    return EElem(epoly_scale(a.rep_, QElem(Poly(GQ(-1)), nullptr)), a.ring_);
}

EElem EElem::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero extension element");
    if (!ring_) {
        std::vector<QElem> v{rep_.c[0].inverse()};
        return EElem(epoly_from(std::move(v), rep_.ring), nullptr);
    }
    // Extended Euclid over K[eta] against the eta-modulus.
    EPoly r0 = ring_->modulus(), r1 = rep_;
    EPoly s0 = epoly_zero(ring_->base());
    EPoly s1 = epoly_from({QElem::one(ring_->base())}, ring_->base());
    while (!r1.is_zero()) {
        QElem lead_inv = r1.lead().inverse();  // may raise RingSplit
        EPoly r1m = epoly_scale(r1, lead_inv);
        auto [q, r] = epoly_divrem_monic(r0, r1m);
        EPoly s2 = epoly_sub(s0, epoly_mul(epoly_scale(q, lead_inv), s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() > 0) {
        if (r0.degree() == ring_->modulus().degree())
            throw InternalError("eta-gcd equals modulus for nonzero representative");
        throw EtaSplit{epoly_monic(r0)};
    }
    return EElem(epoly_scale(s0, r0.c[0].inverse()), ring_);
}

RingPoint RingPoint::algebraic(const Poly& modulus) {
    RingPoint p;
    Poly m = modulus.monic();
    if (m.degree() < 1) throw InvalidRing("point modulus must be nonconstant");
    if (!is_squarefree(m)) throw InvalidRing("point modulus is not squarefree");
    p.modulus = m;
    return p;
}

std::string RingPoint::str() const {
    if (at_infinity) return "inf";
    if (modulus.degree() == 1) return (-modulus.coeff(0)).str();
    return "root of " + modulus.str("z");
}

}  // namespace specchart
