#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "invloci/fraction.hpp"
#include "invloci/weights.hpp"

using namespace invloci;

namespace {
std::vector<Weight> sorted(std::vector<Weight> v) {
    std::sort(v.begin(), v.end());
    return v;
}
}  // namespace

TEST_CASE("conic weight validation") {
    CHECK(validate_conic_weights(WeightVector{0, 1, 3}));
    CHECK_FALSE(validate_conic_weights(WeightVector{0, 1, 2}));  // 0+2 = 1+1
    CHECK_FALSE(validate_conic_weights(WeightVector{0, 0, 1}));
    CHECK_FALSE(validate_conic_weights(WeightVector{0, 1}));
}

TEST_CASE("monomial weight examples") {
    WeightVector w{0, 1, 3};
    CHECK(sorted(monomial_weights(1, {0, 1, 2}, w)) == std::vector<Weight>{0, 1, 3});
    CHECK(sorted(monomial_weights(2, {1, 2}, w)) == std::vector<Weight>{2, 4, 6});
    CHECK(monomial_weights(0, {0, 2}, w, 5) == std::vector<Weight>{5});
    // deterministic decreasing-lex order on exponent vectors
    CHECK(monomial_weights(2, {0, 1, 2}, w) == std::vector<Weight>{0, 1, 3, 2, 4, 6});
    CHECK_THROWS_AS(monomial_weights(1, {}, w), calc_error);
}

TEST_CASE("monomial basis cardinality") {
    WeightVector w{0, 1, 3, 7, 15};
    for (int size = 1; size <= 4; ++size) {
        std::vector<int> J(static_cast<std::size_t>(size));
        std::iota(J.begin(), J.end(), 0);
        for (int e = 0; e <= 12; ++e) {
            auto ms = monomial_weights(e, J, w);
            CHECK(Int(ms.size()) == binomial(e + size - 1, size - 1));
        }
    }
}

TEST_CASE("monomial weight sum identity") {
    // sum of weights of M_e({0..n}) = (sum w_i) * e * C(e+n, n) / (n+1)
    for (int n = 1; n <= 3; ++n) {
        WeightVector w = default_plane_weights(n);
        Weight wsum = std::accumulate(w.w.begin(), w.w.end(), Weight(0));
        std::vector<int> J(static_cast<std::size_t>(n) + 1);
        std::iota(J.begin(), J.end(), 0);
        for (int e = 1; e <= 8; ++e) {
            auto ms = monomial_weights(e, J, w);
            Int total = std::accumulate(ms.begin(), ms.end(), Int(0),
                                        [](Int acc, Weight x) { return acc + x; });
            CHECK(total * (n + 1) == Int(wsum) * e * binomial(e + n, n));
        }
    }
}

TEST_CASE("shift acts elementwise") {
    WeightVector w{0, 2, 5};
    auto base = monomial_weights(4, {0, 1, 2}, w, 0);
    auto shifted = monomial_weights(4, {0, 1, 2}, w, -7);
    REQUIRE(base.size() == shifted.size());
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(shifted[i] == base[i] - 7);
}

TEST_CASE("random_valid_weights") {
    WeightVector a = random_valid_weights(2, validate_conic_weights, 1);
    WeightVector b = random_valid_weights(2, validate_conic_weights, 1);
    CHECK(a == b);  // deterministic for fixed seed
    CHECK(validate_conic_weights(a));

    WeightVector c = random_valid_weights(3, all_distinct, 7);
    CHECK(c.size() == 4);
    CHECK(all_distinct(c));

    CHECK_THROWS_AS(random_valid_weights(2, [](const WeightVector&) { return false; }, 3),
                    search_exhausted_error);
}

TEST_CASE("parse and format") {
    CHECK(WeightVector::parse("0,1,3") == WeightVector{0, 1, 3});
    CHECK(WeightVector::parse("-4,2").to_string() == "-4,2");
    CHECK_THROWS_AS(WeightVector::parse("1,,2"), calc_error);
    CHECK_THROWS_AS(WeightVector::parse("1,2x"), calc_error);
    CHECK_THROWS_AS(WeightVector::parse("9999999999"), calc_error);
}

TEST_CASE("default weight vectors") {
    CHECK(default_conic_weights() == WeightVector{0, 1, 3});
    CHECK(default_plane_weights(4) == WeightVector{0, 1, 3, 7, 15});
    CHECK(all_distinct(default_plane_weights(8)));
}
