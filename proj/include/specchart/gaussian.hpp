#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "specchart/errors.hpp"

namespace specchart {

/// Gaussian rational a + b*i with exact rational components.
/// Components are kept canonical (lowest terms, positive denominator);
/// this is the ground field of every verdict-producing computation.
class GQ {
  public:
    GQ() : re_(0), im_(0) {}
    GQ(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    GQ(mpq_class re, mpq_class im = mpq_class(0))
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GQ i() { return GQ(mpq_class(0), mpq_class(1)); }
    static GQ of(long num, long den, long inum = 0, long iden = 1);

    // Accepts strings like "0", "-3", "1/2", "2+i", "1/2-3*i", "-3*i".
    static GQ from_string(const std::string& s);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GQ conj() const { return GQ(re_, -im_); }
    mpq_class norm2() const { return re_ * re_ + im_ * im_; }
    GQ inverse() const;

    GQ& operator+=(const GQ& o);
    GQ& operator-=(const GQ& o);
    GQ& operator*=(const GQ& o);
    GQ& operator/=(const GQ& o);

    friend GQ operator+(GQ a, const GQ& b) { return a += b; }
    friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
    friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
    friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
    friend GQ operator-(const GQ& a) { return GQ(-a.re_, -a.im_); }

    friend bool operator==(const GQ& a, const GQ& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GQ& z);

  private:
    mpq_class re_, im_;
};

}  // namespace specchart
