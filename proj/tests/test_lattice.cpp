#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csd/lattice.hpp"

using namespace csd;

TEST_CASE("skew form") {
    CHECK(skew_form({0, 1}, {5, 1}) == 5);
    CHECK(skew_form({1, 0}, {0, 1}) == -1);
    CHECK(skew_form({2, 3}, {2, 3}) == 0);
    // antisymmetry
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(0, 9);
    for (int t = 0; t < 200; ++t) {
        Vec p{d(rng), d(rng)}, q{d(rng), d(rng)};
        CHECK(skew_form(p, q) == -skew_form(q, p));
    }
}

TEST_CASE("total order") {
    CHECK(compare({0, 1}, {5, 1}) == Ordering::greater);
    CHECK(compare({1, 0}, {6, 1}) == Ordering::less);
    CHECK(compare({1, 1}, {2, 2}) == Ordering::less); // parallel, by length
    CHECK(compare({2, 2}, {1, 1}) == Ordering::greater);
    CHECK(compare({3, 2}, {3, 2}) == Ordering::equal);
    CHECK(vec_less({1, 0}, {0, 1}));
    CHECK_THROWS_AS(compare({0, 0}, {1, 1}), PreconditionError);

    // (1,0) is least; (0,1) beats everything off its own ray (its longer
    // parallels (0,k) are greater still, but those never occur as factors)
    for (long a = 0; a <= 6; ++a)
        for (long b = 0; b <= 6; ++b) {
            Vec v{a, b};
            if (!v.in_nplus()) continue;
            if (v != Vec{1, 0}) CHECK(vec_less({1, 0}, v));
            if (a != 0) CHECK(vec_greater({0, 1}, v));
        }
}

TEST_CASE("order transitivity, exhaustive to degree 8") {
    std::vector<Vec> all;
    for (long a = 0; a <= 8; ++a)
        for (long b = 0; a + b <= 8; ++b)
            if (a != 0 || b != 0) all.push_back({a, b});
    for (const Vec& p : all)
        for (const Vec& q : all)
            for (const Vec& r : all)
                if (!vec_greater(p, q) && !vec_greater(q, r)) CHECK_FALSE(vec_greater(p, r));
}

TEST_CASE("gcd and normalization factor") {
    CHECK(gcd_of({4, 6}) == 2);
    CHECK(gcd_of({5, 0}) == 5);
    CHECK(normalization_factor({3, 2}) == Rational(1));
    CHECK(normalization_factor({4, 2}) == Rational(1, 2));
}

TEST_CASE("p_star covector") {
    // p_star(p) is the covector m -> skew_form(m, p)
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(0, 9);
    for (int t = 0; t < 200; ++t) {
        Vec p{d(rng), d(rng)};
        if (!p.in_nplus()) continue;
        auto cov = p_star(p);
        Vec m{d(rng), d(rng)};
        CHECK(cov[0] * m.a + cov[1] * m.b == skew_form(m, p));
    }
    CHECK(p_star({1, 0}) == std::array<long, 2>{0, 1});
    CHECK(p_star({0, 1}) == std::array<long, 2>{-1, 0});
}

TEST_CASE("similarity transformation") {
    Mat2 f{{1, 0}, {1, 1}}; // columns (1,0), (1,1)
    CHECK(f.det() == 1);
    DilogSymbol s = similarity(f, {1, 1});
    CHECK(s.vector == Vec{2, 1});
    CHECK(s.exponent_scale == Rational(1));

    Mat2 g{{2, 1}, {1, 1}};
    CHECK(g.det() == 1);
    Mat2 h{{2, 0}, {0, 3}};
    CHECK(similarity(h, {1, 1}).exponent_scale == Rational(1, 6));

    CHECK_THROWS_AS(similarity(Mat2{{1, 1}, {2, 2}}, {1, 0}), PreconditionError); // singular
}

TEST_CASE("similarity scales the skew form by the determinant") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> d(0, 4);
    for (int t = 0; t < 500; ++t) {
        Mat2 f{{d(rng), d(rng)}, {d(rng), d(rng)}};
        if (f.det() == 0) continue;
        Vec p{d(rng), d(rng)}, q{d(rng), d(rng)};
        CHECK(skew_form(f.apply(p), f.apply(q)) == f.det() * skew_form(p, q));
    }
}

TEST_CASE("similarity with positive determinant preserves order and degree") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> d(0, 4);
    for (int t = 0; t < 500; ++t) {
        Mat2 f{{d(rng), d(rng)}, {d(rng), d(rng)}};
        if (f.det() <= 0) continue;
        Vec p{d(rng), d(rng)}, q{d(rng), d(rng)};
        if (!p.in_nplus() || !q.in_nplus()) continue;
        CHECK(f.apply(p).degree() >= p.degree());
        if (vec_less(p, q)) CHECK(vec_less(f.apply(p), f.apply(q)));
    }
}
