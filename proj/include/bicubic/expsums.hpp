// Kloosterman sums S(a,b;q), the twisted bilinear congruence sums
//     S_{r,h}(h1,h2;x) = sum over 1<=xi,eta<=x with r*xi*eta == -h (mod x)
//                        of e((h1*xi + h2*eta)/x),
// their closed-form evaluation as divisor sums of Kloosterman sums, and a
// bound audit against the Ramanujan-sum and Weil-type estimates.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bicubic/numtheory.hpp"

namespace bicubic {

using cplx = std::complex<double>;

struct TwistedSumParams {
    i64 r = 1;  // >= 1
    i64 h = 0;
    i64 h1 = 0;
    i64 h2 = 0;
    i64 x = 1;  // >= 1
};

// Direct summation over units mod q with modular inverses.
cplx kloosterman(i64 a, i64 b, i64 q);

// Double loop over the congruence; O(x^2).
cplx twisted_sum_direct(const TwistedSumParams& p);

// Divisor-sum evaluation: zero unless (r;x) | (h;h1;h2), else
//   sum over d with d*(r;x) | (x;h;h2) of
//     d*(r;x)^2 * S(h1/(r;x), -(h2/(d(r;x))) * inv(r/(r;x)) * h/(d(r;x)), x/(d(r;x))).
// h = 0 is rejected: the application always has h != 0 and the formula's
// validated domain is kept to that case.
cplx twisted_sum_closed(const TwistedSumParams& p);

struct BoundViolation {
    TwistedSumParams params;
    std::string which;
    double value = 0, bound = 0;
};

struct BoundAuditReport {
    std::string grid;
    double max_ratio_01 = 0;   // |S_{r,h}(0,h2;x)| / (tau(h) (r;x) (x;h*h2))
    double max_ratio_10 = 0;   // |S_{r,h}(h1,0;x)| / (tau(h) (r;x) (x;h*h1))
    double max_ratio_11 = 0;   // |S| / (tau(x)^2 (r;x) sqrt(x) gcd(...)^(1/2))
    double max_ratio_weil = 0; // |S(a,b;q)| / ((a;b;q)^(1/2) tau(q) sqrt(q))
    std::vector<BoundViolation> mismatches;
    i64 cases_checked = 0;
};

// Sweeps r,x <= r_max,x_max and |h|,|h1|,|h2| <= h_max (h != 0; h1,h2 may be
// zero), checks every applicable bound, and records the worst ratios.
BoundAuditReport bound_audit(i64 r_max, i64 x_max, i64 h_max);

// Closed-form vs direct sweep; returns the max absolute deviation found.
double closed_vs_direct_sweep(i64 r_max, i64 x_max, i64 h_max, bool include_zero_twists,
                              double abs_tol, std::vector<BoundViolation>* mismatches = nullptr);

}  // namespace bicubic
