#pragma once

#include <map>
#include <ostream>
#include <utility>
#include <vector>

#include "csd/errors.hpp"
#include "csd/rational.hpp"

namespace csd {

// Polynomial in binomial coefficients in two variables:
//   f(m, n) = sum alpha_{k,l} C(m, k) C(n, l),  k, l >= 0.
// Coefficients are exact rationals; the zero coefficients are never stored.
class Pbc {
public:
    using Key = std::pair<long, long>; // (k, l)
    using Terms = std::map<Key, Rational>;

    Pbc() = default;

    static Pbc constant(const Rational& c);
    // C(m, k) C(n, l)
    static Pbc basis(long k, long l);

    const Terms& terms() const { return terms_; }
    Rational coeff(long k, long l) const;
    void set_coeff(long k, long l, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    // All coefficients are integers (hence f is integer-valued, and conversely).
    bool has_integer_coeffs() const;
    // All coefficients are nonnegative.
    bool has_nonneg_coeffs() const;

    long deg_m() const; // max k over stored terms, -1 if zero
    long deg_n() const; // max l over stored terms, -1 if zero

    Rational eval(const Int& m, const Int& n) const;

    Pbc& operator+=(const Pbc& g);
    Pbc& operator-=(const Pbc& g);
    Pbc& operator*=(const Rational& c);
    Pbc operator-() const;

    friend Pbc operator+(Pbc f, const Pbc& g) { return f += g; }
    friend Pbc operator-(Pbc f, const Pbc& g) { return f -= g; }
    friend Pbc operator*(Pbc f, const Rational& c) { return f *= c; }
    friend Pbc operator*(const Rational& c, Pbc f) { return f *= c; }
    friend Pbc operator*(const Pbc& f, const Pbc& g);
    friend bool operator==(const Pbc& f, const Pbc& g) { return f.terms_ == g.terms_; }
    friend bool operator!=(const Pbc& f, const Pbc& g) { return !(f == g); }

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Pbc& f);

// C(f, a): binomial coefficient of a PBC, itself a PBC.
// Requires f to have nonnegative integer coefficients.
Pbc binom_of(const Pbc& f, long a);

// u(f(m, n), g(m, n)) for a PBC u and nonnegative integer PBCs f, g.
Pbc substitute(const Pbc& u, const Pbc& f, const Pbc& g);

// sum_{j=0}^{m-1} f(j, n) and sum_{j=0}^{n-1} f(m, j), closed under PBCs
// via sum_{j=0}^{m-1} C(j, k) = C(m, k+1).
Pbc prefix_sum_m(const Pbc& f);
Pbc prefix_sum_n(const Pbc& f);

// f(m+1, n) and f(m, n+1), via Pascal's rule.
Pbc shift_m(const Pbc& f);
Pbc shift_n(const Pbc& f);

// Partial evaluations: f(m, n0) as a PBC in m alone, and f(m0, n) in n alone.
Pbc eval_n(const Pbc& f, const Int& n0);
Pbc eval_m(const Pbc& f, const Int& m0);

} // namespace csd
