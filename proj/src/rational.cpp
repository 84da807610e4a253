#include "bicubic/rational.hpp"

namespace bicubic {

i128 i128_gcd(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string i128_to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    while (v != 0) {
        int d = static_cast<int>(neg ? -(v % 10) : v % 10);
        s.push_back(static_cast<char>('0' + d));
        v /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

i128 checked_mul_i128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i128 mul overflow");
    return r;
}

i128 checked_add_i128(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i128 add overflow");
    return r;
}

Rat::Rat(i128 n, i128 d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = i128_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rat operator+(const Rat& a, const Rat& b) {
    i128 g = i128_gcd(a.den, b.den);
    i128 bdg = b.den / g;
    i128 n = checked_add_i128(checked_mul_i128(a.num, bdg), checked_mul_i128(b.num, a.den / g));
    return Rat(n, checked_mul_i128(a.den, bdg));
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
    i128 g1 = i128_gcd(a.num, b.den);
    i128 g2 = i128_gcd(b.num, a.den);
    return Rat(checked_mul_i128(a.num / g1, b.num / g2),
               checked_mul_i128(a.den / g2, b.den / g1));
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return a * Rat(b.den, b.num);
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    // a.num*b.den vs b.num*a.den, checked
    i128 lhs = checked_mul_i128(a.num, b.den);
    i128 rhs = checked_mul_i128(b.num, a.den);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double Rat::to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

std::string Rat::to_string() const {
    std::string s = i128_to_string(num);
    if (den != 1) s += "/" + i128_to_string(den);
    return s;
}

Rat rat_pow(const Rat& base, int exp) {
    if (exp < 0) return rat_pow(Rat(base.den, base.num), -exp);
    Rat r(1);
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace bicubic
