#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "bicubic/numtheory.hpp"
#include "bicubic/rational.hpp"

using namespace bicubic;

namespace {

// Independent totient oracle: direct gcd count.
i64 phi_by_count(i64 n) {
    i64 c = 0;
    for (i64 k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++c;
    return c;
}

}  // namespace

TEST_CASE("euler phi examples") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == phi_by_count(12));
    CHECK(euler_phi(12) == 4);
    for (i64 p : {2, 3, 5, 31, 997}) CHECK(euler_phi(p) == p - 1);
}

TEST_CASE("phi is multiplicative on coprime pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> pick(1, 10'000);
    int done = 0;
    while (done < 200) {
        i64 m = pick(rng), n = pick(rng);
        if (std::gcd(m, n) != 1) continue;
        CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
        ++done;
    }
}

TEST_CASE("moebius examples and divisor-sum identity") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(30) == -1);
    for (i64 n = 1; n <= 10'000; ++n) {
        i64 s = 0;
        for (i64 d : divisors(n)) s += moebius(d);
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("gcd and lcm of tuples") {
    std::array<i64, 2> a{4, -6};
    CHECK(gcd_tuple(a) == 2);
    std::array<i64, 3> b{1, 1, -2};
    CHECK(gcd_tuple(b) == 1);
    std::array<i64, 3> c{6, 10, 15};
    CHECK(gcd_tuple(c) == 1);
    CHECK(lcm_tuple(c) == 30);
    std::vector<i64> empty;
    CHECK_THROWS_AS(gcd_tuple(empty), std::invalid_argument);
    std::array<i64, 2> zero{3, 0};
    CHECK_THROWS_AS(gcd_tuple(zero), std::invalid_argument);
}

TEST_CASE("factorization round-trips") {
    for (i64 n = 1; n <= 100'000; ++n) {
        i64 prod = 1;
        i64 last_p = 0;
        for (auto [p, e] : factorize(n).pairs) {
            CHECK(p > last_p);
            last_p = p;
            CHECK(e >= 1);
            prod *= ipow(p, e);
        }
        CHECK(prod == n);
    }
}

TEST_CASE("prime table is complete and ascending") {
    PrimeTable t(1000);
    CHECK(t.primes.size() == 168);
    CHECK(t.primes.front() == 2);
    CHECK(t.primes.back() == 997);
    for (size_t i = 1; i < t.primes.size(); ++i) CHECK(t.primes[i - 1] < t.primes[i]);
    for (i64 p : t.primes)
        for (i64 d = 2; d * d <= p; ++d) CHECK(p % d != 0);
}

TEST_CASE("checked arithmetic rejects overflow") {
    CHECK_THROWS_AS(checked_mul(i64{1} << 40, i64{1} << 40), std::overflow_error);
    CHECK_THROWS_AS(checked_add(std::numeric_limits<i64>::max(), 1), std::overflow_error);
    CHECK(checked_mul(1 << 20, 1 << 20) == i64{1} << 40);
}

TEST_CASE("modular inverse") {
    CHECK(inverse_mod(3, 7) == 5);
    CHECK(!inverse_mod(4, 8));
    for (i64 m = 1; m <= 60; ++m)
        for (i64 a = 1; a <= m; ++a) {
            auto inv = inverse_mod(a, m);
            if (std::gcd(a, m) == 1) {
                REQUIRE(inv.has_value());
                CHECK((a * *inv) % m == 1 % m);
            } else {
                CHECK(!inv);
            }
        }
}

TEST_CASE("rational arithmetic reduces and compares") {
    Rat half(1, 2), third(1, 3);
    CHECK((half + third) == Rat(5, 6));
    CHECK((half * third) == Rat(1, 6));
    CHECK((half - third) == Rat(1, 6));
    CHECK(Rat(2, 4) == half);
    CHECK(Rat(-2, -4) == half);
    CHECK(Rat(2, -4) == -half);
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(rat_pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(Rat(39, 256).to_string() == "39/256");
    CHECK(Rat(5).to_string() == "5");
}
