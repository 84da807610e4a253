#include "bicubic/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bicubic {

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer add overflow");
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer mul overflow");
    return r;
}

PrimeTable::PrimeTable(i64 lim) : limit(lim) {
    if (lim < 2) throw std::invalid_argument("sieve limit must be >= 2");
    std::vector<bool> comp(static_cast<size_t>(lim) + 1, false);
    for (i64 p = 2; p * p <= lim; ++p)
        if (!comp[p])
            for (i64 m = p * p; m <= lim; m += p) comp[m] = true;
    for (i64 n = 2; n <= lim; ++n)
        if (!comp[n]) primes.push_back(n);
}

bool PrimeTable::is_prime(i64 n) const {
    if (n > limit) throw std::invalid_argument("is_prime query beyond sieve limit");
    if (n < 2) return false;
    return std::binary_search(primes.begin(), primes.end(), n);
}

const PrimeTable& prime_table() {
    static const PrimeTable table(1'000'000);
    return table;
}

Factorization factorize(i64 n) {
    if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
    Factorization f;
    f.n = n;
    i64 m = n;
    for (i64 p : prime_table().primes) {
        if (p * p > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            f.pairs.emplace_back(p, e);
        }
    }
    if (m > 1) {
        // Remaining cofactor is prime whenever n <= sieve_limit^2.
        i64 lim = prime_table().limit;
        if (m > lim * lim) throw std::invalid_argument("factorize input beyond sieve range");
        f.pairs.emplace_back(m, 1);
    }
    return f;
}

int valuation(i64 n, i64 p) {
    if (n == 0) throw std::invalid_argument("valuation of 0");
    if (p < 2) throw std::invalid_argument("valuation needs p >= 2");
    if (n < 0) n = -n;
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

i64 euler_phi(i64 n) {
    i64 phi = n;
    for (auto [p, e] : factorize(n).pairs) phi -= phi / p;
    return phi;
}

int moebius(i64 n) {
    auto f = factorize(n);
    for (auto [p, e] : f.pairs)
        if (e > 1) return 0;
    return f.pairs.size() % 2 == 0 ? 1 : -1;
}

i64 divisor_count(i64 n) {
    i64 t = 1;
    for (auto [p, e] : factorize(n).pairs) t *= e + 1;
    return t;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> divs{1};
    for (auto [p, e] : factorize(n).pairs) {
        size_t sz = divs.size();
        i64 pe = 1;
        for (int k = 1; k <= e; ++k) {
            pe = checked_mul(pe, p);
            for (size_t i = 0; i < sz; ++i) divs.push_back(checked_mul(divs[i], pe));
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

i64 radical(i64 n) {
    i64 r = 1;
    for (auto [p, e] : factorize(n).pairs) r = checked_mul(r, p);
    return r;
}

i64 gcd_ll(i64 a, i64 b) { return std::gcd(a, b); }

i64 gcd_tuple(std::span<const i64> values) {
    if (values.empty()) throw std::invalid_argument("gcd_tuple of empty list");
    i64 g = 0;
    for (i64 v : values) {
        if (v == 0) throw std::invalid_argument("gcd_tuple entry is zero");
        g = std::gcd(g, v);
    }
    return g;
}

i64 lcm_tuple(std::span<const i64> values) {
    if (values.empty()) throw std::invalid_argument("lcm_tuple of empty list");
    i64 l = 1;
    for (i64 v : values) {
        if (v == 0) throw std::invalid_argument("lcm_tuple entry is zero");
        i64 a = v < 0 ? -v : v;
        l = checked_mul(l / std::gcd(l, a), a);
    }
    return l;
}

std::optional<i64> inverse_mod(i64 a, i64 m) {
    if (m < 1) throw std::invalid_argument("inverse_mod modulus must be >= 1");
    if (m == 1) return 0;
    a %= m;
    if (a < 0) a += m;
    i64 r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) return std::nullopt;
    return s0 < 0 ? s0 + m : s0;
}

i64 ipow(i64 base, int exp) {
    if (exp < 0) throw std::invalid_argument("ipow negative exponent");
    i64 r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace bicubic
