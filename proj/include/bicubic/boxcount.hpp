// Exact lattice counts N_r(X,Y) of r1 x1 y1 + r2 x2 y2 + r3 x3 y3 = 0 over
// the 2^6 dyadic boxes X_j/2 < |x_j| <= X_j, Y_j/2 < |y_j| <= Y_j, and their
// comparison against the product of the singular series and the singular
// integral.
#pragma once

#include <vector>

#include "bicubic/localdata.hpp"
#include "bicubic/oscint.hpp"

namespace bicubic {

struct IntBox {
    i64 x1 = 1, x2 = 1, x3 = 1;
    i64 y1 = 1, y2 = 1, y3 = 1;
};

struct cost_cap_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Meet-in-the-middle count: value histograms of two of the r_j x_j y_j
// coordinates matched against the third. Throws cost_cap_error beyond
// ~10^10 pair cost.
i64 box_count_exact(const CoeffTriple& r, const IntBox& box);

struct BoxCountReport {
    CoeffTriple r;
    IntBox box;
    i64 exact_count = 0;
    double main_term = 0;        // E_r * I_r(X,Y)
    double main_term_tail = 0;   // combined series/quadrature envelope
    double abs_error = 0;        // |exact - main_term|
    double bound_shape = 0;      // error-term envelope at eps = 0.1, constant 1
    double ratio = 0;            // abs_error / bound_shape
};

BoxCountReport box_count_report(const CoeffTriple& r, const IntBox& box,
                                const QuadratureSpec& spec = {}, i64 prime_cutoff = 10'000);

// Cube family X = Y = (W,W,W): exact counts against the main term for each W.
std::vector<BoxCountReport> proposition_check(const CoeffTriple& r, const std::vector<i64>& sides,
                                              const QuadratureSpec& spec = {});

}  // namespace bicubic
