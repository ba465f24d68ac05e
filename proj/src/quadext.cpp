#include "holant/quadext.hpp"

#include "holant/errors.hpp"

namespace holant {

QuadExt::QuadExt(const Rat& r, const Rat& s, const Rat& d) : r_(r), s_(s), d_(d) { normalize(); }

QuadExt QuadExt::sqrt_of(const Rat& d) {
    if (d < 0) throw internal_error("QuadExt: negative radicand");
    return QuadExt(Rat(0), Rat(1), d);
}

void QuadExt::normalize() {
    if (d_ < 0) throw internal_error("QuadExt: negative radicand");
    if (s_ == 0 || d_ == 0) {
        s_ = 0;
        d_ = 0;
        return;
    }
    Rat root;
    if (rat_sqrt_exact(d_, root)) {
        r_ += s_ * root;
        s_ = 0;
        d_ = 0;
    }
}

Rat QuadExt::as_rat() const {
    if (!is_rational()) throw internal_error("QuadExt: not rational: " + str());
    return r_;
}

void QuadExt::align(QuadExt& a, QuadExt& b) {
    if (a.d_ == b.d_) return;
    if (a.s_ == 0) {
        a.d_ = b.d_;
        return;
    }
    if (b.s_ == 0) {
        b.d_ = a.d_;
        return;
    }
    // Same field iff the radicand ratio is a rational square.
    Rat ratio = a.d_ / b.d_, t;
    if (rat_sqrt_exact(ratio, t)) {
        // a = r + s*sqrt(d_a) = r + (s*t)*sqrt(d_b)
        a.s_ *= t;
        a.d_ = b.d_;
        return;
    }
    throw internal_error("QuadExt: mixing distinct radicands sqrt(" + rat_str(a.d_) +
                         ") and sqrt(" + rat_str(b.d_) + ")");
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    QuadExt x = a, y = b;
    QuadExt::align(x, y);
    return QuadExt(x.r_ + y.r_, x.s_ + y.s_, x.d_);
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    QuadExt x = a, y = b;
    QuadExt::align(x, y);
    return QuadExt(x.r_ * y.r_ + x.s_ * y.s_ * x.d_, x.r_ * y.s_ + x.s_ * y.r_, x.d_);
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw internal_error("QuadExt: inverse of zero");
    Rat n = field_norm();
    if (n == 0) throw internal_error("QuadExt: zero norm on nonzero value (radicand a square?)");
    return QuadExt(r_ / n, -s_ / n, d_);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * b.inverse(); }

bool operator==(const QuadExt& a, const QuadExt& b) {
    QuadExt x = a, y = b;
    try {
        QuadExt::align(x, y);
    } catch (const internal_error&) {
        return false;  // distinct fields, distinct values
    }
    return x.r_ == y.r_ && x.s_ == y.s_;
}

QuadExt QuadExt::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadExt acc(Rat(1)), base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string QuadExt::str() const {
    if (s_ == 0) return rat_str(r_);
    std::string surd;
    if (s_ == 1)
        surd = "sqrt(" + rat_str(d_) + ")";
    else if (s_ == -1)
        surd = "-sqrt(" + rat_str(d_) + ")";
    else
        surd = rat_str(s_) + "*sqrt(" + rat_str(d_) + ")";
    if (r_ == 0) return surd;
    if (s_ > 0) return rat_str(r_) + "+" + surd;
    return rat_str(r_) + surd;
}

}  // namespace holant
