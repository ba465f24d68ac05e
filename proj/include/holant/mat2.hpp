#pragma once

#include "holant/quadext.hpp"

#include <array>
#include <optional>
#include <utility>

namespace holant {

struct Mat2 {
    std::array<std::array<QuadExt, 2>, 2> a;

    Mat2() : a{{{QuadExt(0), QuadExt(0)}, {QuadExt(0), QuadExt(0)}}} {}
    Mat2(QuadExt m00, QuadExt m01, QuadExt m10, QuadExt m11)
        : a{{{std::move(m00), std::move(m01)}, {std::move(m10), std::move(m11)}}} {}
    static Mat2 from_rats(const Rat& m00, const Rat& m01, const Rat& m10, const Rat& m11);
    static Mat2 identity();
    static Mat2 hadamard();  // [[1,1],[1,-1]]

    const QuadExt& operator()(int i, int j) const { return a[i][j]; }
    QuadExt& operator()(int i, int j) { return a[i][j]; }

    QuadExt det() const;
    QuadExt trace() const;
    bool is_rational() const;
    Mat2 inverse() const;  // throws internal_error when singular

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend bool operator==(const Mat2& x, const Mat2& y);
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

    std::string str() const;
};

// Exact s-fold product; s = 0 gives the identity.
Mat2 mat_pow(const Mat2& m, unsigned long s);

// Eigen machinery for a rational 2x2 matrix [[w, b'], [a', c']].
//
//   disc  = (w - c')^2 + 4 a' b'            (discriminant of the char. poly)
//   delta = sqrt(disc)
//   lambda = (w + c' - delta) / 2,  mu = (w + c' + delta) / 2
//   x = (delta - (w - c')) / (2 a'),  y = (delta + (w - c')) / (2 a')  when a' != 0
//
// When disc >= 0 and a' != 0, M = P diag(lambda, mu) P^{-1} exactly with
// P = [[-x, y], [1, 1]].  A negative discriminant (complex eigenvalue pair)
// is reported through complex_pair rather than as an exception; only the
// root-of-unity predicate consumes that case.
struct EigenData {
    Rat disc;
    QuadExt delta, lambda, mu, x, y;
    bool degenerate = false;    // det(M) == 0
    bool complex_pair = false;  // disc < 0; delta/lambda/mu/x/y not populated
    bool has_xy = false;        // a' != 0 and !complex_pair
};

EigenData eigen2(const Mat2& m);

// Root-of-unity test for the eigenvalue ratio lambda/mu of a nonsingular
// rational matrix.  Two independent routes that must agree:
//
//  (1) five polynomial conditions in A = trace, B = discriminant:
//        1: A = 0          (ratio -1)
//        2: B = 0          (ratio  1)
//        3: A^2 +  B = 0   (ratio +-i)
//        4: A^2 + 3B = 0   (primitive 6th root)
//        5: 3A^2 + B = 0   (primitive 3rd root)
//  (2) checking that the ratio satisfies a cyclotomic polynomial of degree
//      <= 2, i.e. has order in {1, 2, 3, 4, 6}, by exact powering in the
//      (possibly imaginary) quadratic extension determined by B.
struct RouResult {
    bool is_rou = false;
    int condition = 0;  // 1..5 per the list above, 0 when not a root of unity
    int order = 0;      // 1, 2, 3, 4, or 6
};

RouResult ratio_rou_by_conditions(const Mat2& m);
RouResult ratio_rou_by_cyclotomic(const Mat2& m);

// Runs both routes, checks they agree, returns (is_rou, matched condition).
std::pair<bool, std::optional<int>> ratio_is_root_of_unity(const Mat2& m);

}  // namespace holant
