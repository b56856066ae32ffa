#pragma once

#include <array>
#include <numeric>
#include <ostream>

#include "csd/errors.hpp"
#include "csd/rational.hpp"

namespace csd {

// Lattice vector. Most operations require membership in
// N+ = {(a, b) in Z^2 : a, b >= 0, (a, b) != (0, 0)}.
struct Vec {
    long a = 0;
    long b = 0;

    long degree() const { return a + b; }
    bool in_nplus() const { return a >= 0 && b >= 0 && (a != 0 || b != 0); }

    friend bool operator==(const Vec& p, const Vec& q) { return p.a == q.a && p.b == q.b; }
    friend bool operator!=(const Vec& p, const Vec& q) { return !(p == q); }
    friend Vec operator+(const Vec& p, const Vec& q) { return {p.a + q.a, p.b + q.b}; }
};

inline std::ostream& operator<<(std::ostream& os, const Vec& v) {
    return os << "(" << v.a << "," << v.b << ")";
}

// Skew form {(a,b),(c,d)} = bc - ad.
inline long skew_form(const Vec& p, const Vec& q) {
    return p.b * q.a - p.a * q.b;
}

enum class Ordering { less, equal, greater };

// Total order on N+: p < q iff {p, q} < 0, with parallel vectors compared
// by length (q = k p with rational k >= 1 means p <= q).
inline Ordering compare(const Vec& p, const Vec& q) {
    if (!p.in_nplus() || !q.in_nplus())
        throw PreconditionError("compare: arguments must lie in N+");
    long s = skew_form(p, q);
    if (s < 0) return Ordering::less;
    if (s > 0) return Ordering::greater;
    // Parallel: compare by length along the common ray.
    long lp = p.degree(), lq = q.degree();
    if (lp < lq) return Ordering::less;
    if (lp > lq) return Ordering::greater;
    return Ordering::equal;
}

inline bool vec_less(const Vec& p, const Vec& q) { return compare(p, q) == Ordering::less; }
inline bool vec_greater(const Vec& p, const Vec& q) { return compare(p, q) == Ordering::greater; }

inline long gcd_of(const Vec& v) {
    if (!v.in_nplus()) throw PreconditionError("gcd_of: argument must lie in N+");
    return std::gcd(v.a, v.b);
}

// d(a, b) = 1 / gcd(a, b).
inline Rational normalization_factor(const Vec& v) {
    return Rational(1, gcd_of(v));
}

// Covector m -> skew_form(m, p), returned as its coefficients on (m1, m2):
// skew_form((m1, m2), (a, b)) = -b m1 + a m2.
inline std::array<long, 2> p_star(const Vec& p) {
    if (!p.in_nplus()) throw PreconditionError("p_star: argument must lie in N+");
    return {-p.b, p.a};
}

// 2x2 integer matrix, stored by columns.
struct Mat2 {
    Vec col1;
    Vec col2;

    long det() const { return col1.a * col2.b - col1.b * col2.a; }
    Vec apply(const Vec& v) const {
        return {col1.a * v.a + col2.a * v.b, col1.b * v.a + col2.b * v.b};
    }
    bool nonneg() const { return col1.a >= 0 && col1.b >= 0 && col2.a >= 0 && col2.b >= 0; }
    bool is_identity() const { return col1 == Vec{1, 0} && col2 == Vec{0, 1}; }

    friend bool operator==(const Mat2& f, const Mat2& g) {
        return f.col1 == g.col1 && f.col2 == g.col2;
    }
};

// Formal symbol Psi[vector]^(exponent_scale), the image of a dilogarithm
// element under a similarity transformation.
struct DilogSymbol {
    Vec vector;
    Rational exponent_scale;
};

// F . Psi[n] = Psi[F n]^(1/det F) for F with nonnegative entries and
// nonzero determinant.
inline DilogSymbol similarity(const Mat2& f, const Vec& n) {
    if (!f.nonneg()) throw PreconditionError("similarity: matrix entries must be nonnegative");
    if (!n.in_nplus()) throw PreconditionError("similarity: vector must lie in N+");
    long d = f.det();
    if (d == 0) throw PreconditionError("similarity: matrix must be nonsingular");
    return {f.apply(n), Rational(1) / d};
}

} // namespace csd
