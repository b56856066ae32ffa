#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csd/formulas.hpp"
#include "csd/verify.hpp"

using namespace csd;

TEST_CASE("alpha matrix round trip") {
    Pbc u = Rational(2) * Pbc::basis(2, 2) + Pbc::basis(3, 1) + Rational(6) * Pbc::basis(3, 2);
    AlphaMatrix am = alpha_matrix({3, 2}, u);
    CHECK(am.at(2, 2) == 2);
    CHECK(am.at(3, 1) == 1);
    CHECK(am.at(3, 2) == 6);
    CHECK(am.at(1, 1) == 0);
    CHECK(from_alpha(am) == u);

    // gcd scale
    Pbc u22 = Rational(2) * Pbc::basis(2, 2);
    CHECK(alpha_matrix({2, 2}, u22).at(2, 2) == 4);

    Pbc bad = Pbc::basis(4, 1);
    CHECK_THROWS_AS(alpha_matrix({3, 2}, bad), PreconditionError);
}

TEST_CASE("transpose") {
    Pbc u = Rational(3) * Pbc::basis(2, 1) + Pbc::basis(1, 2);
    Pbc ut = transpose(u);
    CHECK(ut.coeff(1, 2) == Rational(3));
    CHECK(ut.coeff(2, 1) == Rational(1));
    CHECK(transpose(ut) == u);
}

TEST_CASE("edge closed forms") {
    CHECK(closed_form_a1(4) == Pbc::basis(4, 1));
    CHECK(closed_form_1b(6) == Pbc::basis(1, 6));
}

TEST_CASE("b = 2 closed form, small a") {
    CHECK(closed_form_a2(1) == Pbc::basis(1, 2));
    CHECK(closed_form_a2(2) == Rational(2) * Pbc::basis(2, 2));
    Pbc u32 = Rational(2) * Pbc::basis(2, 2) + Pbc::basis(3, 1) + Rational(6) * Pbc::basis(3, 2);
    CHECK(closed_form_a2(3) == u32);
    Pbc u52 = Rational(3) * Pbc::basis(3, 2) + Rational(4) * Pbc::basis(4, 1) +
              Rational(24) * Pbc::basis(4, 2) + Rational(7) * Pbc::basis(5, 1) +
              Rational(30) * Pbc::basis(5, 2);
    CHECK(closed_form_a2(5) == u52);
}

TEST_CASE("recurrences for b = 2") {
    for (long a = 1; a <= 12; ++a) CHECK(recurrence_b2_in_n(a));
    for (long a = 3; a <= 12; ++a) CHECK(recurrence_b2_in_m(a));
}

TEST_CASE("kernel brief expressions") {
    for (long a = 1; a <= 12; ++a) {
        for (long k = (a + 1) / 2; k <= a; ++k) CHECK(kernel_a_sum(a, k) == kernel_a_brief(a, k));
        for (long k = (a + 1) / 2 + 1; k <= a; ++k)
            CHECK(kernel_b_alt_sum(a, k) == kernel_b_brief(a, k));
    }
    CHECK(kernel_b_brief(3, 3) == 1); // (3/2 * 2 - 2) * C(2,2)
}

TEST_CASE("appendix identities") {
    CHECK(appendix_identities_hold(50));
    CHECK(weighted_half_sum(4) == Int(12)); // ceil(2) C(4,2)
    CHECK(half_sum(4) == Int(8 + 3));       // 2^3 + C(4,2)/2
    CHECK(half_sum(5) == Int(16));
}

TEST_CASE("inverse formula: worked (3,2) instance") {
    auto u_values = [](long i, long j) -> Rational {
        if (i == 2 && j == 2) return 2;
        if (i == 3 && j == 1) return 1;
        if (i == 3 && j == 2) return 14;
        return 0;
    };
    AlphaMatrix am = inverse_formula(Vec{3, 2}, u_values);
    CHECK(am.at(2, 2) == 2);
    CHECK(am.at(3, 1) == 1);
    CHECK(am.at(3, 2) == 6);
    CHECK(am.at(1, 1) == 0);
    CHECK(am.at(2, 1) == 0);
}

TEST_CASE("inverse formula round trip on a computed table") {
    ExponentTable t5 = compute_table(5);
    CHECK_FALSE(inverse_round_trip(t5).has_value());
}

TEST_CASE("structural checks on a computed table") {
    ExponentTable t5 = compute_table(5);
    CHECK_FALSE(check_reciprocity(t5).has_value());
    CHECK_FALSE(check_support(t5).has_value());
    CHECK_FALSE(check_lower_zeros(t5).has_value());
    CHECK_FALSE(check_closed_forms(t5).has_value());

    // a broken table is reported
    ExponentTable bad = t5;
    bad.entries[{3, 2}] += Pbc::basis(1, 1);
    CHECK(check_reciprocity(bad).has_value());
    CHECK(check_lower_zeros(bad).has_value());
}
