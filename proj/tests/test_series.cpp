#include <doctest.h>

#include <random>

#include "invloci/series.hpp"

using namespace invloci;

TEST_CASE("mul_linear truncates") {
    TruncatedSeries s(3);
    s.mul_linear(2);
    CHECK(s[0] == 1);
    CHECK(s[1] == 2);
    CHECK(s[2] == 0);

    TruncatedSeries t(1);
    t.mul_linear(1);
    t.mul_linear(2);  // t^2 term dropped
    CHECK(t[0] == 1);
    CHECK(t[1] == 3);

    TruncatedSeries u(3);
    u.mul_linear(1);
    u.mul_linear(2);
    CHECK(u[2] == 2);
    CHECK(u[3] == 0);  // c_3 of a rank-2 multiset
}

TEST_CASE("inverse examples") {
    // (1 + t + t^2)^{-1} = (1 - t)/(1 - t^3) = 1 - t + t^3 - t^4 + ...
    TruncatedSeries c(5);
    c[1] = 1;
    c[2] = 1;
    TruncatedSeries s = c.inverse();
    CHECK(s[0] == 1);
    CHECK(s[1] == -1);
    CHECK(s[2] == 0);
    CHECK(s[3] == 1);
    CHECK(s[4] == -1);
    CHECK(s[5] == 0);

    CHECK(TruncatedSeries::one(4).inverse() == TruncatedSeries::one(4));

    // geometric series at c_1 = 7/2
    TruncatedSeries g(2);
    g[1] = Fraction(7, 2);
    TruncatedSeries gi = g.inverse();
    CHECK(gi[1] == Fraction(-7, 2));
    CHECK(gi[2] == Fraction(49, 4));
}

TEST_CASE("inverse requires unit constant term") {
    TruncatedSeries c(2);
    c[0] = 2;
    CHECK_THROWS_AS(c.inverse(), calc_error);
}

TEST_CASE("inverse times original is one") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + static_cast<int>(rng() % 8);
        TruncatedSeries c(m);
        for (int i = 1; i <= m; ++i) c[i] = frac(dist(rng), 1 + (rng() % 5));
        TruncatedSeries p = c.inverse() * c;
        CHECK(p == TruncatedSeries::one(m));
    }
}
