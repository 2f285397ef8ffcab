#include "specchart/gaussian.hpp"

#include <cctype>
#include <ostream>

namespace specchart {

GQ GQ::of(long num, long den, long inum, long iden) {
    if (den == 0 || iden == 0) throw DivisionByZero("rational with zero denominator");
    return GQ(mpq_class(num, den), mpq_class(inum, iden));
}

GQ GQ::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of 0");
    mpq_class n = norm2();
    return GQ(re_ / n, -im_ / n);
}

GQ& GQ::operator+=(const GQ& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GQ& GQ::operator-=(const GQ& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GQ& GQ::operator*=(const GQ& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GQ& GQ::operator/=(const GQ& o) { return *this *= o.inverse(); }

namespace {

std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses one signed rational starting at s[pos]; advances pos.
mpq_class parse_rat(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
        ++digits;
    }
    if (digits == 0) throw ParseError("expected digits in scalar '" + s + "'");
    mpz_class num(s.substr(start, pos - start));
    mpz_class den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw ParseError("expected denominator in scalar '" + s + "'");
        den = mpz_class(s.substr(dstart, pos - dstart));
        if (den == 0) throw ParseError("zero denominator in scalar '" + s + "'");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

GQ GQ::from_string(const std::string& raw) {
    std::string s;
    s.reserve(raw.size());
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar string");

    mpq_class re(0), im(0);
    size_t pos = 0;
    while (pos < s.size()) {
        // A term is either a rational, optionally "*i", or a bare (signed) "i".
        int sign = 1;
        size_t mark = pos;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = (s[pos] == '-') ? -1 : 1;
            size_t next = pos + 1;
            if (next < s.size() && s[next] == 'i') {
                im += sign;
                pos = next + 1;
                continue;
            }
        } else if (s[pos] == 'i') {
            im += 1;
            ++pos;
            continue;
        }
        mpq_class q = parse_rat(s, pos);
        (void)sign;
        (void)mark;
        if (pos < s.size() && (s[pos] == '*' || s[pos] == 'i')) {
            if (s[pos] == '*') {
                ++pos;
                if (pos >= s.size() || s[pos] != 'i')
                    throw ParseError("expected 'i' after '*' in '" + raw + "'");
            }
            ++pos;  // consume 'i'
            im += q;
        } else {
            re += q;
        }
    }
    return GQ(re, im);
}

std::string GQ::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out += rat_str(re_);
    if (sgn(im_) != 0) {
        if (!out.empty() && sgn(im_) > 0) out += "+";
        out += rat_str(im_) + "*i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GQ& z) { return os << z.str(); }

}  // namespace specchart
