// Local (arithmetic) densities of the bilinear counting problem:
//   E_r   = sum_q phi(q) (q;r1)(q;r2)(q;r3) / q^3      (singular series)
//   F_r   = the companion divisor-sum expression arising from the main-term
//           computation (equal to E_r for gcd(r)=1; the equality is a test
//           target, never assumed)
//   C     = prod_p (1-1/p)^5 (1 + 5/p + 5/p^2 + 1/p^3)
// plus per-prime Euler factors in exact rational arithmetic and the
// truncated 13-fold Moebius sum that converges to C.
#pragma once

#include <map>
#include <vector>

#include "bicubic/rational.hpp"

namespace bicubic {

struct CoeffTriple {
    i64 r1 = 1, r2 = 1, r3 = 1;  // all >= 1
};

// Approximate value with a provable truncation envelope:
// |true - value| <= tail_bound.
struct SeriesApprox {
    double value = 0;
    double tail_bound = 0;
    i64 cutoff = 0;
};

// sum_{q<=Q} phi(q)(q;r1)(q;r2)(q;r3)/q^3; tail majorized via (q;ri) <= ri
// and phi(q)/q^3 <= 1/q^2.
SeriesApprox singular_series_truncated(const CoeffTriple& r, i64 q_cutoff);

// Exact Euler p-factor of E_r. Closed geometric-series form, rational.
Rat singular_series_euler(const CoeffTriple& r, i64 p);

// prod_{p<=P} E_r(p) with the 1 + 1/(p(p+1)) tail enveloped.
SeriesApprox singular_series_euler_product(const CoeffTriple& r, i64 prime_cutoff);

// F_r per its defining divisor sum, gcd(r1,r2,r3) = 1 required. The inner
// infinite d-sum is evaluated exactly as an Euler product (the summand is
// multiplicative in d); cutoff bounds the per-prime exponent sweep.
SeriesApprox f_series(const CoeffTriple& r, int exponent_cutoff = 200);

// Euler p-factor of F_r via F_r(p) = F_1(p) * F_{r(p)} / F_1.
double f_series_euler_factor(const CoeffTriple& r, i64 p);

// Per-prime table for one coefficient triple.
struct LocalFactorTable {
    CoeffTriple r;
    struct Entry {
        Rat e_factor;
        double f_factor = 0;  // NaN when gcd(r) > 1 (F not extended there)
    };
    std::map<i64, Entry> entries;
};

LocalFactorTable local_factor_table(const CoeffTriple& r, i64 prime_cutoff);

// Exact Euler factor of C at p: (1-1/p)^5 (1 + 5/p + 5/p^2 + 1/p^3).
Rat constant_c_factor(i64 p);

// prod_{p<=P} factor with the log-tail envelope 11/p^2 summed past P.
SeriesApprox constant_c(i64 prime_cutoff);

// Left side of the truncated 13-fold Moebius identity: all thirteen index
// variables run over [1,T], alpha products feed gcd-weighted q-sums.
struct SupereulerReport {
    i64 truncation = 0;
    i64 q_cutoff = 0;
    double lhs = 0;
    double lhs_tail_bound = 0;  // q-sum truncation error envelope
    double c_reference = 0;
    double gap = 0;  // |lhs - c_reference|
};

SupereulerReport supereuler_identity_check(i64 truncation, i64 q_cutoff);

constexpr double zeta2 = 1.6449340668482264365;  // pi^2/6
constexpr double zeta3 = 1.2020569031595942854;

}  // namespace bicubic
