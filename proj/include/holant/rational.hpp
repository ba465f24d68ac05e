#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace holant {

// Exact arithmetic backbone.  Rat is always stored in lowest terms with a
// positive denominator; equality is canonical-form equality.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int rat_num(const Rat& r);
Int rat_den(const Rat& r);

// Parses "p", "-p", or "p/q".  No floats, ever.
Rat rat_parse(const std::string& s);

// "p" or "p/q".
std::string rat_str(const Rat& r);

// r^e with e possibly negative (r must be nonzero then).
Rat rat_pow(const Rat& r, long e);

// True iff n is a perfect square; root receives the nonnegative root.
bool int_sqrt_exact(const Int& n, Int& root);

// True iff r is the square of a rational; root receives the nonnegative root.
bool rat_sqrt_exact(const Rat& r, Rat& root);

int rat_sign(const Rat& r);

}  // namespace holant
