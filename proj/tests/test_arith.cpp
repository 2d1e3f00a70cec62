#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ybalg/bigint.hpp"
#include "ybalg/prime_field.hpp"
#include "ybalg/rational.hpp"

using namespace ybalg;

TEST_CASE("bigint small arithmetic matches int128") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-1000000000000ll, 1000000000000ll);
    for (int t = 0; t < 500; ++t) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_i64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_i64() == a - b);
        CHECK(BigInt(static_cast<__int128>(a) * b) == BigInt(a) * BigInt(b));
        if (b != 0) {
            BigInt q, r;
            BigInt::divmod(BigInt(a), BigInt(b), q, r);
            CHECK(q.to_i64() == a / b);
            CHECK(r.to_i64() == a % b);
        }
    }
}

TEST_CASE("bigint large multiplication and division round-trip") {
    // (10^30 + 7) * (10^25 + 3)
    BigInt x(1), ten(10);
    for (int i = 0; i < 30; ++i) x = x * ten;
    BigInt a = x + BigInt(7);
    BigInt y(1);
    for (int i = 0; i < 25; ++i) y = y * ten;
    BigInt b = y + BigInt(3);
    BigInt p = a * b;
    CHECK(p.to_string() == "10000000000000000000000003000070000000000000000000000021");
    BigInt q, r;
    BigInt::divmod(p, b, q, r);
    CHECK(q == a);
    CHECK(r.is_zero());
    CHECK(BigInt::gcd(a * BigInt(12), a * BigInt(18)) == a * BigInt(6));
}

TEST_CASE("bigint division stress against reconstruction") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(1, INT64_MAX / 2);
    for (int t = 0; t < 200; ++t) {
        BigInt a = BigInt(dist(rng)) * BigInt(dist(rng)) + BigInt(dist(rng));
        BigInt b = BigInt(dist(rng)) * BigInt(dist(rng) % 100000 + 1);
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(BigInt::cmp(r, b) < 0);
        CHECK(r.sign() >= 0);
    }
}

TEST_CASE("rationals are exact and reduce to lowest terms") {
    Rat half(1, 2), third(1, 3);
    CHECK((half + third).to_string() == "5/6");
    CHECK((half * third).to_string() == "1/6");
    CHECK((half - half).is_zero());
    CHECK((half / third).to_string() == "3/2");
    CHECK(Rat(6, 4).to_string() == "3/2");
    CHECK(Rat(-6, -4).to_string() == "3/2");
    CHECK(Rat(6, -4).to_string() == "-3/2");
}

TEST_CASE("rationals promote past 64-bit overflow and stay exact") {
    Rat big(INT64_MAX / 3, 1);
    Rat x = big * big;          // overflows int64, promotes
    Rat y = x / big;
    CHECK(y == big);
    Rat z = x - x;
    CHECK(z.is_zero());
    // a promoted value that shrinks demotes back to the fast path
    Rat w = (big * big) * (Rat(1) / (big * big));
    CHECK(w.is_one());
    CHECK(w.is_small());
}

TEST_CASE("rational field axioms on random values") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long long> dist(-1000, 1000);
    for (int t = 0; t < 300; ++t) {
        long long d1 = dist(rng), d2 = dist(rng);
        Rat a(dist(rng), d1 == 0 ? 1 : d1), b(dist(rng), d2 == 0 ? 1 : d2), c(dist(rng), 7);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + (b + c) == (a + b) + c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("prime field arithmetic") {
    PrimeField f;  // 2^31 - 1
    CHECK(f.p == 2147483647ull);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        uint64_t a = rng() % f.p;
        if (a == 0) continue;
        CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK(f.mul(f.p - 1, f.p - 1) == 1);  // (-1)^2
    CHECK(f.add(f.p - 1, 1) == 0);
}
