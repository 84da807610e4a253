// Oscillatory integrals of the main term: the integral sine and cosine
// integral, the dilogarithm, the kernel
//     K(s) = Gamma(s) cos(pi s/2) (1 - 2^(s-1))^2 / (1-s)^2,
// the Fourier factor of one dyadic box, the singular integral I_r(X,Y) over
// the frequency line, and two independent contour-integral cross-checks.
#pragma once

#include <complex>
#include <functional>

#include "bicubic/localdata.hpp"
#include "bicubic/numtheory.hpp"

namespace bicubic {

struct BoxSpec {
    double x1 = 1, x2 = 1, x3 = 1;  // all sides >= 1
    double y1 = 1, y2 = 1, y3 = 1;
};

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 20000;
    double alpha_cutoff = 10;  // initial frequency window, units of 1/min(r X Y)
};

struct QuadResult {
    double value = 0;
    double error_bound = 0;
    bool converged = true;
    int subdivisions = 0;
};

// Globally adaptive Gauss-Kronrod 15-point integration; deterministic.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, double rel_tol, int max_subdivisions,
                              int initial_splits = 1);

double integral_sine(double x);    // Si, abs err <= 1e-12
double cosine_integral(double x);  // Ci, x > 0
double dilog(double x);            // Li2, x <= 1

std::complex<double> lgamma_complex(std::complex<double> z);
std::complex<double> kernel_k(std::complex<double> s);  // poles rejected

// integral of e(alpha r x y) over the four boxes X/2 <= |x| <= X,
// Y/2 <= |y| <= Y; evaluates to X*Y at alpha = 0 and obeys
// |value| <= min(XY, 1/(r|alpha|)).
double box_fourier_factor(i64 r, double X, double Y, double alpha);

// I_r(X,Y): frequency integral of the product of the three box factors.
QuadResult singular_integral(const CoeffTriple& r, const BoxSpec& box,
                             const QuadratureSpec& spec = {});

// Double contour form of I_r(X,Y) on Re s = Re t = 1/3 with kernel K.
struct MellinCheckReport {
    double direct = 0;        // frequency-line evaluation
    double contour = 0;       // double contour evaluation
    double rel_gap = 0;       // |direct - contour| / max(|direct|, |contour|)
    double contour_tail = 0;  // truncation envelope of the contour grid
};

MellinCheckReport mellin_crosscheck(const CoeffTriple& r, const BoxSpec& box,
                                    const QuadratureSpec& spec = {});

// Quadrature of int_0^inf (int_y^inf sin t / t^2 dt)^3 dy against its
// closed form pi (pi^2 - 3 + 24 log 2) / 8.
struct Supermellin2Report {
    double quadrature = 0;
    double closed_form = 0;
    double abs_gap = 0;
    double quadrature_error = 0;
};

Supermellin2Report supermellin2_check(const QuadratureSpec& spec = {});

}  // namespace bicubic
