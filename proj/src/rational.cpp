#include "holant/rational.hpp"

#include "holant/errors.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>

namespace holant {

Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

Rat rat_parse(const std::string& s) {
    auto bad = [&]() -> input_error {
        return input_error("not a rational: '" + s + "' (expected p or p/q)");
    };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) throw bad();
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw bad();
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw bad();
    };
    try {
        if (slash == std::string::npos) {
            check_int(s);
            return Rat(Int(s));
        }
        std::string p = s.substr(0, slash);
        std::string q = s.substr(slash + 1);
        check_int(p);
        check_int(q);
        Int den(q);
        if (den == 0) throw bad();
        return Rat(Int(p), den);
    } catch (const std::exception&) {
        throw bad();
    }
}

std::string rat_str(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && r == 0) throw internal_error("rat_pow: 0 to a negative power");
    Rat base = r, acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    if (inv) acc = Rat(1) / acc;
    return acc;
}

bool int_sqrt_exact(const Int& n, Int& root) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) {
        root = r;
        return true;
    }
    return false;
}

bool rat_sqrt_exact(const Rat& r, Rat& root) {
    if (r < 0) return false;
    Int np, dp;
    if (!int_sqrt_exact(rat_num(r), np)) return false;
    if (!int_sqrt_exact(rat_den(r), dp)) return false;
    root = Rat(np, dp);
    return true;
}

int rat_sign(const Rat& r) { return r.sign(); }

}  // namespace holant
