#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csd/lattice.hpp"
#include "csd/ordering.hpp"
#include "csd/pbc.hpp"

namespace csd {

// Coefficient matrix of a wall exponent:
//   u_{(a,b)}(m,n) = (1/gcd(a,b)) sum_{1<=i<=a, 1<=j<=b} alpha(i,j) C(m,i) C(n,j)
// with nonnegative integer alpha.
struct AlphaMatrix {
    long a = 0;
    long b = 0;
    std::vector<Int> alpha; // row-major, (i-1)*b + (j-1)

    const Int& at(long i, long j) const { return alpha[(i - 1) * b + (j - 1)]; }
    Int& at(long i, long j) { return alpha[(i - 1) * b + (j - 1)]; }

    friend bool operator==(const AlphaMatrix& x, const AlphaMatrix& y) {
        return x.a == y.a && x.b == y.b && x.alpha == y.alpha;
    }
};

// Extract the alpha matrix of a wall exponent; throws when the support or
// integrality constraints fail.
AlphaMatrix alpha_matrix(const Vec& v, const Pbc& u);
Pbc from_alpha(const AlphaMatrix& am);

// u with the roles of (m, k) and (n, l) swapped; u_{(b,a)}(n,m) as a PBC.
Pbc transpose(const Pbc& u);

// Closed forms of wall exponents.
Pbc closed_form_a1(long a); // wall (a, 1): C(m,a) C(n,1)
Pbc closed_form_1b(long b); // wall (1, b): C(m,1) C(n,b)
Pbc closed_form_a2(long a); // wall (a, 2), a >= 1

// Recurrence kernels for b = 2, defining sums.
Int kernel_a_sum(long a, long k); // sum_{x=a-k}^{floor(a/2)} (a-2x) C(a-x, k-x)   C(k, a-x)
Int kernel_b_sum(long a, long k); // sum_{x=a-k}^{floor(a/2)} (a-2x) C(a-x, k-x+1) C(k, a-x)
// Brief closed forms of the kernels.
Int kernel_a_brief(long a, long k); // ceil((2k-a)/2) C(2k-a, ceil((2k-a)/2)) C(k, 2k-a)
// ((2k-a)/2) C(2k-a-1, ceil((2k-a-1)/2)) - 2^{2k-a-2}, times C(k-1, 2k-a-1)
Int kernel_b_brief(long a, long k);
// The alternating sum the brief b-kernel equals:
// sum_{x=a-k+1}^{floor(a/2)} (a-2x) C(a-x, k-x) C(k-1, a-x)
Int kernel_b_alt_sum(long a, long k);

// Two-term recurrences satisfied by the b = 2 closed forms (checked as PBC
// identities; they use closed_form_a2 internally).
bool recurrence_b2_in_n(long a);
bool recurrence_b2_in_m(long a);

// sum_{x=0}^{floor(u/2)} (u-2x) C(u,x) = ceil(u/2) C(u, ceil(u/2))
Int weighted_half_sum(long u);
// sum_{x=0}^{floor(u/2)} C(u,x) = 2^{u-1} + (u even ? C(u,u/2)/2 : 0)
Int half_sum(long u);

// Recover the alpha matrix from the special values u(i, j), 1 <= i <= a,
// 1 <= j <= b, by inclusion-exclusion.
AlphaMatrix inverse_formula(const Vec& v, const std::function<Rational(long, long)>& u_values);
AlphaMatrix inverse_formula(const Vec& v, const Pbc& u);

// Structural checks over a full table; return a description of the first
// counterexample, or nothing when the property holds.
std::optional<std::string> check_reciprocity(const ExponentTable& table);
std::optional<std::string> check_support(const ExponentTable& table);
std::optional<std::string> check_lower_zeros(const ExponentTable& table);
std::optional<std::string> check_closed_forms(const ExponentTable& table);

} // namespace csd
