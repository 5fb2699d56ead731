#include <doctest.h>

#include <random>

#include "crn/bigint.hpp"
#include "crn/error.hpp"

using crn::BigInt;
using crn::Rational;

TEST_CASE("bigint small arithmetic matches long long") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        long long a = static_cast<long long>(rng() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng() % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_ll() == a + b);
        CHECK((A - B).to_ll() == a - b);
        CHECK((A * B).to_ll() == a * b);
        CHECK((A < B) == (a < b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(A, B, q, r);
            CHECK(q.to_ll() == a / b);
            CHECK(r.to_ll() == a % b);
        }
    }
}

TEST_CASE("bigint large multiplication and exact division") {
    BigInt big(1);
    for (int i = 1; i <= 40; ++i) big = big * BigInt(i);  // 40!
    BigInt copy = big;
    for (int i = 40; i >= 1; --i) copy = copy.div_exact(BigInt(i));
    CHECK(copy.to_ll() == 1);
    CHECK(big.str() == "815915283247897734345611269596115894272000000000");
    CHECK_THROWS_AS((big + BigInt(1)).div_exact(BigInt(7)), crn::Error);
}

TEST_CASE("bigint gcd and lcm") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)).to_ll() == 6);
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)).to_ll() == 5);
    CHECK(BigInt::lcm(BigInt(4), BigInt(6)).to_ll() == 12);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        long long a = static_cast<long long>(rng() % 100000) - 50000;
        long long b = static_cast<long long>(rng() % 100000) - 50000;
        BigInt g = BigInt::gcd(BigInt(a), BigInt(b));
        if (a != 0 || b != 0) {
            CHECK(BigInt(a).div_exact(g) * g == BigInt(a));
            CHECK(BigInt(b).div_exact(g) * g == BigInt(b));
        }
    }
}

TEST_CASE("bigint string and narrowing") {
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(-123456789012345678LL).str() == "-123456789012345678");
    CHECK(BigInt(-9223372036854775807LL - 1).to_ll() == -9223372036854775807LL - 1);
    BigInt too_big = BigInt(1LL << 62) * BigInt(4);
    CHECK(!too_big.fits_ll());
    CHECK_THROWS_AS(too_big.to_ll(), crn::Error);
}

TEST_CASE("rational normalization and arithmetic") {
    Rational half(BigInt(2), BigInt(4));
    CHECK(half.num().to_ll() == 1);
    CHECK(half.den().to_ll() == 2);
    Rational neg(BigInt(3), BigInt(-6));
    CHECK(neg.num().to_ll() == -1);
    CHECK(neg.den().to_ll() == 2);
    CHECK((half + neg).is_zero());
    CHECK((half * Rational(4)).num().to_ll() == 2);
    CHECK((Rational(1) / Rational(3)).str() == "1/3");
    CHECK_THROWS_AS(Rational(1) / Rational(0), crn::Error);
}
