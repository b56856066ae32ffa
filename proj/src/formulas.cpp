#include "csd/formulas.hpp"

#include <numeric>

#include "csd/errors.hpp"

namespace csd {

namespace {

long ceil_half(long u) { return (u + 1) / 2; } // ceil(u/2) for u >= 0

Int pow2(long e) {
    if (e < 0) throw PreconditionError("pow2: negative exponent");
    return Int(1) << e;
}

} // namespace

AlphaMatrix alpha_matrix(const Vec& v, const Pbc& u) {
    if (!v.in_nplus() || v.a < 1 || v.b < 1)
        throw PreconditionError("alpha_matrix: wall must have positive coordinates");
    const long g = gcd_of(v);
    AlphaMatrix am;
    am.a = v.a;
    am.b = v.b;
    am.alpha.assign(v.a * v.b, 0);
    Pbc scaled = u * Rational(g);
    for (const auto& [key, c] : scaled.terms()) {
        auto [i, j] = key;
        if (i < 1 || i > v.a || j < 1 || j > v.b)
            throw PreconditionError("alpha_matrix: support outside [1,a] x [1,b]");
        if (!is_integer(c) || c < 0)
            throw PreconditionError("alpha_matrix: gcd-scaled coefficient is not a nonnegative integer");
        am.at(i, j) = to_int(c);
    }
    return am;
}

Pbc from_alpha(const AlphaMatrix& am) {
    Pbc u;
    const Rational d(1, std::gcd(am.a, am.b));
    for (long i = 1; i <= am.a; ++i)
        for (long j = 1; j <= am.b; ++j)
            if (am.at(i, j) != 0) u.set_coeff(i, j, Rational(am.at(i, j)) * d);
    return u;
}

Pbc transpose(const Pbc& u) {
    Pbc out;
    for (const auto& [key, c] : u.terms()) out.set_coeff(key.second, key.first, c);
    return out;
}

Pbc closed_form_a1(long a) {
    if (a < 1) throw PreconditionError("closed_form_a1: a must be positive");
    return Pbc::basis(a, 1);
}

Pbc closed_form_1b(long b) {
    if (b < 1) throw PreconditionError("closed_form_1b: b must be positive");
    return Pbc::basis(1, b);
}

Pbc closed_form_a2(long a) {
    if (a < 1) throw PreconditionError("closed_form_a2: a must be positive");
    Pbc u;
    // sum over a/2 < k <= a, column C(n,2)
    for (long k = a / 2 + 1; k <= a; ++k) {
        long w = 2 * k - a;
        Int c = Int(ceil_half(w)) * binomial(w, ceil_half(w)) * binomial(k, w);
        u += Rational(c) * Pbc::basis(k, 2);
    }
    // sum over a/2 + 1 < k <= a (i.e. 2k - a >= 3), column C(n,1)
    for (long k = a / 2 + 1; k <= a; ++k) {
        long w = 2 * k - a;
        if (w <= 2) continue;
        Rational c = Rational(w, 2) * Rational(binomial(w - 1, ceil_half(w - 1))) - Rational(pow2(w - 2));
        c *= Rational(binomial(k, w));
        if (!is_integer(c))
            throw InvariantError("closed_form_a2: non-integer coefficient");
        u += c * Pbc::basis(k, 1);
    }
    return u;
}

Int kernel_a_sum(long a, long k) {
    Int s = 0;
    for (long x = a - k; x <= a / 2; ++x)
        s += Int(a - 2 * x) * binomial(a - x, k - x) * binomial(k, a - x);
    return s;
}

Int kernel_b_sum(long a, long k) {
    Int s = 0;
    for (long x = a - k; x <= a / 2; ++x)
        s += Int(a - 2 * x) * binomial(a - x, k - x + 1) * binomial(k, a - x);
    return s;
}

Int kernel_a_brief(long a, long k) {
    long w = 2 * k - a;
    if (w < 0) throw PreconditionError("kernel_a_brief: need k >= ceil(a/2)");
    return Int(ceil_half(w)) * binomial(w, ceil_half(w)) * binomial(k, w);
}

Int kernel_b_brief(long a, long k) {
    long w = 2 * k - a;
    if (w < 2) throw PreconditionError("kernel_b_brief: need k >= ceil(a/2) + 1");
    Rational c = Rational(w, 2) * Rational(binomial(w - 1, ceil_half(w - 1))) - Rational(pow2(w - 2));
    c *= Rational(binomial(k - 1, w - 1));
    if (!is_integer(c)) throw InvariantError("kernel_b_brief: non-integer value");
    return to_int(c);
}

Int kernel_b_alt_sum(long a, long k) {
    Int s = 0;
    for (long x = a - k + 1; x <= a / 2; ++x)
        s += Int(a - 2 * x) * binomial(a - x, k - x) * binomial(k - 1, a - x);
    return s;
}

bool recurrence_b2_in_n(long a) {
    const Pbc u = closed_form_a2(a);
    Pbc rhs = u + eval_n(u, 1);
    for (long k = ceil_half(a); k <= a; ++k)
        rhs += Rational(kernel_a_sum(a, k)) * Pbc::basis(k, 1);
    return shift_n(u) == rhs;
}

bool recurrence_b2_in_m(long a) {
    if (a < 3) throw PreconditionError("recurrence_b2_in_m: requires a >= 3");
    const Pbc u1 = eval_n(closed_form_a2(a), 1);
    const Pbc v1 = a - 2 >= 1 ? eval_n(closed_form_a2(a - 2), 1) : Pbc();
    Pbc rhs = u1 + v1;
    for (long k = ceil_half(a); k <= a - 1; ++k)
        rhs += Rational(kernel_b_sum(a, k)) * Pbc::basis(k, 0);
    return shift_m(u1) == rhs;
}

Int weighted_half_sum(long u) {
    Int s = 0;
    for (long x = 0; x <= u / 2; ++x) s += Int(u - 2 * x) * binomial(u, x);
    return s;
}

Int half_sum(long u) {
    Int s = 0;
    for (long x = 0; x <= u / 2; ++x) s += binomial(u, x);
    return s;
}

AlphaMatrix inverse_formula(const Vec& v, const std::function<Rational(long, long)>& u_values) {
    if (!v.in_nplus() || v.a < 1 || v.b < 1)
        throw PreconditionError("inverse_formula: wall must have positive coordinates");
    const long g = gcd_of(v);
    AlphaMatrix am;
    am.a = v.a;
    am.b = v.b;
    am.alpha.assign(v.a * v.b, 0);
    for (long k = 1; k <= v.a; ++k) {
        for (long l = 1; l <= v.b; ++l) {
            Rational s = 0;
            for (long i = 1; i <= k; ++i)
                for (long j = 1; j <= l; ++j) {
                    Rational term = Rational(binomial(k, i) * binomial(l, j)) * u_values(i, j);
                    s += ((i + j + k + l) % 2 == 0) ? term : -term;
                }
            s *= g; // alpha = gcd / d(a,b) * sum = gcd * sum
            if (!is_integer(s))
                throw VerificationError("inverse_formula: non-integer alpha at (" +
                                        std::to_string(k) + "," + std::to_string(l) + ")");
            am.at(k, l) = to_int(s);
        }
    }
    return am;
}

AlphaMatrix inverse_formula(const Vec& v, const Pbc& u) {
    return inverse_formula(v, [&u](long i, long j) { return u.eval(i, j); });
}

namespace {

std::string wall_str(long a, long b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

} // namespace

std::optional<std::string> check_reciprocity(const ExponentTable& table) {
    for (const auto& [key, u] : table.entries) {
        auto it = table.entries.find({key.second, key.first});
        if (it == table.entries.end())
            return "missing mirror wall of " + wall_str(key.first, key.second);
        if (transpose(u) != it->second)
            return "u" + wall_str(key.first, key.second) + "(m,n) != u" +
                   wall_str(key.second, key.first) + "(n,m)";
    }
    return std::nullopt;
}

std::optional<std::string> check_support(const ExponentTable& table) {
    for (const auto& [key, u] : table.entries) {
        auto [a, b] = key;
        if (a < 1 || b < 1) continue; // initial walls
        AlphaMatrix am;
        try {
            am = alpha_matrix({a, b}, u);
        } catch (const Error& e) {
            return "wall " + wall_str(a, b) + ": " + e.what();
        }
        if (am.at(a, b) <= 0) return "wall " + wall_str(a, b) + ": alpha(a,b) is not positive";
    }
    return std::nullopt;
}

std::optional<std::string> check_lower_zeros(const ExponentTable& table) {
    for (const auto& [key, u] : table.entries) {
        auto [a, b] = key;
        if (b < 1 || a <= b) continue;
        for (long i = 1; i * b < a; ++i)
            for (long j = 1; j <= b; ++j)
                if (u.coeff(i, j) != 0)
                    return "wall " + wall_str(a, b) + ": alpha(" + std::to_string(i) + "," +
                           std::to_string(j) + ") != 0 below the support threshold";
    }
    return std::nullopt;
}

std::optional<std::string> check_closed_forms(const ExponentTable& table) {
    for (long a = 1; a + 1 <= table.max_degree; ++a) {
        if (table.lookup({a, 1}) != closed_form_a1(a))
            return "wall " + wall_str(a, 1) + " disagrees with its closed form";
        if (table.lookup({1, a}) != closed_form_1b(a))
            return "wall " + wall_str(1, a) + " disagrees with its closed form";
    }
    for (long a = 1; a + 2 <= table.max_degree; ++a)
        if (table.lookup({a, 2}) != closed_form_a2(a))
            return "wall " + wall_str(a, 2) + " disagrees with the b = 2 closed form";
    return std::nullopt;
}

} // namespace csd
