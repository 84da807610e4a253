// Exact rational arithmetic over 128-bit integers. Every operation checks
// for overflow; results are always reduced with positive denominator.
#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include "bicubic/numtheory.hpp"

namespace bicubic {

i128 i128_gcd(i128 a, i128 b);
std::string i128_to_string(i128 v);
i128 checked_mul_i128(i128 a, i128 b);
i128 checked_add_i128(i128 a, i128 b);

struct Rat {
    i128 num = 0;
    i128 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}  // NOLINT: implicit by design
    Rat(i128 n, i128 d);

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(-num, den); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    bool is_zero() const { return num == 0; }
    int sign() const { return num == 0 ? 0 : (num > 0 ? 1 : -1); }
    Rat abs() const { return num < 0 ? Rat(-num, den) : *this; }
    double to_double() const;
    std::string to_string() const;  // "num/den", or "num" when den == 1
};

Rat rat_pow(const Rat& base, int exp);

}  // namespace bicubic
