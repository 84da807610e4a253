// Elementary arithmetic shared by all modules: prime sieve, factorization,
// multiplicative functions, gcd/lcm of tuples, checked 64-bit arithmetic.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bicubic {

using i64 = long long;
using i128 = __int128;

// Overflow is a hard error throughout, never silent wraparound.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

// All primes <= limit, strictly ascending.
struct PrimeTable {
    i64 limit = 0;
    std::vector<i64> primes;

    explicit PrimeTable(i64 limit);
    bool is_prime(i64 n) const;  // n must be <= limit
};

// Shared read-only sieve, built on first use (default limit 10^6).
const PrimeTable& prime_table();

// n as an ascending list of (prime, exponent >= 1); product reassembles n.
struct Factorization {
    i64 n = 1;
    std::vector<std::pair<i64, int>> pairs;
};

Factorization factorize(i64 n);

int valuation(i64 n, i64 p);           // v_p(n), n != 0
i64 euler_phi(i64 n);                  // #{1<=k<=n : (k;n)=1}
int moebius(i64 n);                    // in {-1,0,1}
i64 divisor_count(i64 n);              // tau(n)
std::vector<i64> divisors(i64 n);      // ascending
i64 radical(i64 n);                    // product of distinct primes

i64 gcd_ll(i64 a, i64 b);
i64 gcd_tuple(std::span<const i64> values);  // entries nonzero, list nonempty
i64 lcm_tuple(std::span<const i64> values);  // checked product /gcd

// x with a*x == 1 (mod m); nullopt when (a;m) > 1. m >= 1.
std::optional<i64> inverse_mod(i64 a, i64 m);

i64 ipow(i64 base, int exp);  // checked
i64 isqrt(i64 n);             // floor(sqrt(n)), n >= 0

}  // namespace bicubic
