#pragma once

#include "holant/rational.hpp"

#include <string>

namespace holant {

// An exact element r + s*sqrt(d) of a real quadratic extension of Q.
//
// Normal form: d >= 0; if s == 0 then d == 0; if d is the square of a
// rational the surd is folded into the rational part eagerly, so equality is
// syntactic.  Arithmetic is closed for a fixed radicand; combining values
// whose radicands do not differ by a rational square factor is an error.
class QuadExt {
public:
    QuadExt() : r_(0), s_(0), d_(0) {}
    QuadExt(const Rat& r) : r_(r), s_(0), d_(0) {}
    QuadExt(long v) : r_(v), s_(0), d_(0) {}
    QuadExt(int v) : r_(v), s_(0), d_(0) {}
    QuadExt(const Rat& r, const Rat& s, const Rat& d);

    // sqrt(d) for d >= 0.
    static QuadExt sqrt_of(const Rat& d);

    const Rat& rational_part() const { return r_; }
    const Rat& surd_part() const { return s_; }
    const Rat& radicand() const { return d_; }

    bool is_rational() const { return s_ == 0; }
    bool is_zero() const { return r_ == 0 && s_ == 0; }
    Rat as_rat() const;  // throws internal_error when a surd remains

    QuadExt conj() const { return QuadExt(r_, -s_, d_); }
    // r^2 - s^2 d = value * conj(value), a rational.
    Rat field_norm() const { return r_ * r_ - s_ * s_ * d_; }

    QuadExt operator-() const { return QuadExt(-r_, -s_, d_); }
    QuadExt inverse() const;
    QuadExt pow(long e) const;

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b);
    friend bool operator==(const QuadExt& a, const QuadExt& b);
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    // "3", "1/2", "sqrt(10)", "3/2+5*sqrt(10)", "1-sqrt(2)" ...
    std::string str() const;

private:
    Rat r_, s_, d_;
    void normalize();
    // Rewrites b (and/or a) so both share one radicand; throws on a genuine mix.
    static void align(QuadExt& a, QuadExt& b);
};

}  // namespace holant
