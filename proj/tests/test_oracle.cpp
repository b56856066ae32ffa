#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csd/series.hpp"

using namespace csd;

namespace {

// Wall-crossing closed form: Psi[n]^c sends x^w to x^w (1 + x^n)^{c {n,w}}.
TruncatedSeries crossing_image(const Vec& n, const Rational& c, const Vec& w, int cutoff) {
    Rational e = c * skew_form(n, {w.a, w.b});
    TruncatedSeries out(cutoff);
    for (long j = 0; j * n.degree() + w.degree() <= cutoff; ++j) {
        Rational coef = 1;
        for (long i = 0; i < j; ++i) coef *= (e - i) / Rational(i + 1);
        out.add_term(w.a + j * n.a, w.b + j * n.b, coef);
    }
    return out;
}

} // namespace

TEST_CASE("series arithmetic") {
    TruncatedSeries a = TruncatedSeries::monomial(3, 1, 0);
    TruncatedSeries b = TruncatedSeries::monomial(3, 0, 1, 2);
    TruncatedSeries p = (a + b) * (a + b);
    CHECK(p.coeff(2, 0) == Rational(1));
    CHECK(p.coeff(1, 1) == Rational(4));
    CHECK(p.coeff(0, 2) == Rational(4));
    // truncation
    TruncatedSeries c = TruncatedSeries::monomial(2, 1, 1);
    CHECK((c * c).terms().empty());
    CHECK_THROWS_AS(a + TruncatedSeries::monomial(4, 0, 0), PreconditionError);
}

TEST_CASE("psi matches the wall-crossing closed form on primitive vectors") {
    const int cutoff = 7;
    for (const Vec& n : {Vec{1, 0}, Vec{0, 1}, Vec{1, 1}, Vec{2, 1}, Vec{1, 3}}) {
        for (const Rational& c : {Rational(1), Rational(2), Rational(-1), Rational(1, 2)}) {
            TruncatedAutomorphism g = psi(n, c, cutoff);
            CHECK(g.image1 == crossing_image(n, c, {1, 0}, cutoff));
            CHECK(g.image2 == crossing_image(n, c, {0, 1}, cutoff));
        }
    }
}

TEST_CASE("identity and composition convention") {
    TruncatedAutomorphism id = identity_automorphism(5);
    TruncatedAutomorphism g = psi({1, 0}, 1, 5);
    CHECK(equal_mod(compose(id, g), g));
    CHECK(equal_mod(compose(g, id), g));
    // compose(g, h) applies h first: on x2, h = psi[(0,1)] acts trivially on
    // x2's leading term only through its own image.
    TruncatedAutomorphism h = psi({0, 1}, 1, 5);
    TruncatedSeries x2 = TruncatedSeries::monomial(5, 0, 1);
    CHECK(apply(compose(g, h), x2) == apply(g, apply(h, x2)));
}

TEST_CASE("one-parameter subgroup") {
    for (const Vec& n : {Vec{1, 0}, Vec{1, 1}, Vec{2, 1}}) {
        TruncatedAutomorphism a = psi(n, Rational(2), 6);
        TruncatedAutomorphism b = psi(n, Rational(1, 3), 6);
        CHECK(equal_mod(compose(a, b), psi(n, Rational(7, 3), 6)));
        CHECK(equal_mod(compose(a, psi(n, Rational(-2), 6)), identity_automorphism(6)));
    }
}

TEST_CASE("parallel vectors commute") {
    TruncatedAutomorphism a = psi({1, 1}, 2, 8);
    TruncatedAutomorphism b = psi({2, 2}, Rational(3, 2), 8);
    CHECK(equal_mod(compose(a, b), compose(b, a)));
}

TEST_CASE("pentagon relation") {
    // {n', n} = 1/gamma: Psi[n']^g Psi[n]^g = Psi[n]^g Psi[n+n']^g Psi[n']^g
    const int cutoff = 8;
    auto pentagon = [&](const Vec& np, const Vec& n) {
        long s = skew_form(np, n);
        REQUIRE(s != 0);
        Rational g = Rational(1) / s;
        TruncatedAutomorphism lhs = compose(psi(np, g, cutoff), psi(n, g, cutoff));
        TruncatedAutomorphism rhs = compose(
            psi(n, g, cutoff), compose(psi(n + np, g, cutoff), psi(np, g, cutoff)));
        return equal_mod(lhs, rhs);
    };
    CHECK(pentagon({0, 1}, {1, 0}));
    CHECK(pentagon({1, 2}, {2, 1}));
    CHECK(pentagon({1, 3}, {1, 0}));
    CHECK(pentagon({3, 1}, {2, 3}));
}

TEST_CASE("eval_factor_list") {
    // Psi[(0,1)]^n Psi[(1,0)]^m as a two-factor symbolic list
    FactorList seed{{{0, 1}, Pbc::basis(0, 1)}, {{1, 0}, Pbc::basis(1, 0)}};
    TruncatedAutomorphism direct =
        compose(psi({0, 1}, 3, 6), psi({1, 0}, 2, 6));
    CHECK(equal_mod(eval_factor_list(seed, 2, 3, 6), direct));
    // zero exponents are skipped
    FactorList with_zero = seed;
    with_zero.push_back({{5, 1}, Pbc::basis(3, 3)});
    CHECK(equal_mod(eval_factor_list(with_zero, 2, 3, 6), direct));
}
