#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bicubic/oscint.hpp"

using namespace bicubic;

namespace {

constexpr double pi = std::numbers::pi;

// Independent quadrature oracle for Si.
double si_by_quadrature(double x) {
    auto f = [](double t) { return t == 0 ? 1.0 : std::sin(t) / t; };
    return integrate_adaptive(f, 0, x, 1e-14, 1e-14, 4000, 16).value;
}

}  // namespace

TEST_CASE("integral sine: basics and oracle agreement") {
    CHECK(integral_sine(0.0) == 0.0);
    for (double x : {0.3, 1.0, 2.0, 3.9, 5.0, 5.9, 6.1, 10.0, 25.0})
        CHECK(integral_sine(x) == doctest::Approx(si_by_quadrature(x)).epsilon(1e-12));
    for (double x : {0.5, 3.0, 17.0}) CHECK(integral_sine(-x) == -integral_sine(x));
    CHECK(std::abs(integral_sine(1000.0) - pi / 2) < 1e-3);
}

TEST_CASE("cosine integral: series and continued fraction overlap") {
    auto ci_series = [](double x) {
        double term = 1.0, sum = 0;
        for (int k = 1; k <= 60; ++k) {
            term *= -x * x / (2.0 * k * (2.0 * k - 1.0));
            sum += term / (2.0 * k);
        }
        return 0.57721566490153286061 + std::log(x) + sum;
    };
    for (double x = 3.5; x <= 4.5; x += 0.1)
        CHECK(cosine_integral(x) == doctest::Approx(ci_series(x)).epsilon(1e-12));
    CHECK_THROWS_AS(cosine_integral(0.0), std::domain_error);
}

TEST_CASE("dilogarithm values") {
    CHECK(std::abs(dilog(-1.0) + pi * pi / 12) < 1e-12);
    CHECK(std::abs(dilog(0.5) - (pi * pi / 12 - 0.5 * std::pow(std::numbers::ln2, 2))) < 1e-12);
    CHECK(std::abs(dilog(1.0) - pi * pi / 6) < 1e-15);
    // series oracle inside the unit interval
    for (double x : {-0.93, -0.4, 0.2, 0.45}) {
        double s = 0, t = 1;
        for (int k = 1; k <= 2000; ++k) {
            t *= x;
            s += t / (static_cast<double>(k) * k);
        }
        CHECK(dilog(x) == doctest::Approx(s).epsilon(1e-12));
    }
}

TEST_CASE("kernel at real argument matches the libm route") {
    for (double s : {0.2, 1.0 / 3.0, 0.49}) {
        double ref = std::tgamma(s) * std::cos(pi * s / 2) *
                     std::pow(1.0 - std::pow(2.0, s - 1.0), 2) / ((1 - s) * (1 - s));
        CHECK(kernel_k({s, 0.0}).real() == doctest::Approx(ref).epsilon(1e-12));
        CHECK(std::abs(kernel_k({s, 0.0}).imag()) < 1e-12);
    }
}

TEST_CASE("kernel symmetry, decay and pole rejection") {
    for (double t : {0.7, 3.0, 11.0, 60.0}) {
        auto a = kernel_k({1.0 / 3.0, t});
        auto b = kernel_k({1.0 / 3.0, -t});
        CHECK(std::abs(a - std::conj(b)) < 1e-12 * (1 + std::abs(a)));
    }
    // |K(1/3 + it)| <= c |t|^(1/3 - 5/2); measured max of the ratio on
    // [2, 100] is 3.3296, frozen with margin
    for (double t = 2.0; t <= 100.0; t += 1.37) {
        double envelope = 3.6 * std::pow(t, 1.0 / 3.0 - 2.5);
        CHECK(std::abs(kernel_k({1.0 / 3.0, t})) <= envelope);
    }
    CHECK_THROWS_AS(kernel_k({1.0, 0.0}), std::domain_error);
}

TEST_CASE("box factor: zero-frequency limit is the box area") {
    CHECK(box_fourier_factor(1, 3.0, 2.0, 0.0) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(box_fourier_factor(5, 1.5, 4.0, 0.0) == doctest::Approx(6.0).epsilon(1e-15));
    // continuity across the series/direct switch
    double lo = box_fourier_factor(1, 2.0, 2.0, 2.4e-7 / pi);
    double hi = box_fourier_factor(1, 2.0, 2.0, 2.6e-7 / pi);
    CHECK(lo == doctest::Approx(hi).epsilon(1e-9));
}

TEST_CASE("box factor at the unit box and unit frequency") {
    auto outer = [&](double x) {
        auto inner = [&](double y) { return std::cos(2 * pi * x * y); };
        return integrate_adaptive(inner, 0.5, 1.0, 1e-13, 1e-13, 600, 8).value;
    };
    double quad = 4.0 * integrate_adaptive(outer, 0.5, 1.0, 1e-12, 1e-12, 600, 8).value;
    CHECK(box_fourier_factor(1, 1.0, 1.0, 1.0) == doctest::Approx(quad).epsilon(1e-8));
}

TEST_CASE("box factor against two-dimensional quadrature") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> side(1.0, 8.0), freq(-1.5, 1.5);
    std::uniform_int_distribution<i64> coeff(1, 3);
    for (int it = 0; it < 50; ++it) {
        double X = side(rng), Y = side(rng), alpha = freq(rng);
        i64 r = coeff(rng);
        double direct = box_fourier_factor(r, X, Y, alpha);
        auto outer = [&](double x) {
            auto inner = [&](double y) { return std::cos(2 * pi * alpha * r * x * y); };
            return integrate_adaptive(inner, Y / 2, Y, 1e-13, 1e-13, 600, 8).value;
        };
        double quad = 4.0 * integrate_adaptive(outer, X / 2, X, 1e-12, 1e-12, 600, 8).value;
        CHECK(direct == doctest::Approx(quad).epsilon(1e-8));
    }
}

TEST_CASE("box factor envelope 1/(r alpha)") {
    for (double s : {10.0, 20.0, 80.0, 400.0})
        for (i64 r : {1, 2, 7}) {
            double X = 4.0, Y = 3.5;
            double alpha = s / (static_cast<double>(r) * X * Y);
            CHECK(std::abs(box_fourier_factor(r, X, Y, alpha)) <=
                  1.0 / (static_cast<double>(r) * alpha));
            CHECK(std::abs(box_fourier_factor(r, X, Y, alpha)) <= X * Y);
        }
}

TEST_CASE("singular integral: degenerate boxes vanish") {
    QuadratureSpec spec;
    spec.rel_tol = 1e-7;
    // 10 (r1 X1 Y1 + r2 X2 Y2) <= r3 X3 Y3 forces a vanishing integral
    auto res = singular_integral({1, 1, 12}, {1, 1, 10, 1, 1, 10}, spec);
    CHECK(std::abs(res.value) <= res.error_bound);
    auto res2 = singular_integral({1, 1, 1}, {1, 1, 12, 1, 1, 12}, spec);
    CHECK(std::abs(res2.value) <= res2.error_bound);
}

TEST_CASE("singular integral: frequency scaling divides by d") {
    QuadratureSpec spec;
    spec.rel_tol = 1e-8;
    for (auto box : {BoxSpec{2, 2, 2, 2, 2, 2}, BoxSpec{3, 2, 5, 4, 2, 3}})
        for (i64 d : {2, 3}) {
            double base = singular_integral({1, 1, 1}, box, spec).value;
            double scaled = singular_integral({d, d, d}, box, spec).value;
            CHECK(scaled == doctest::Approx(base / static_cast<double>(d)).epsilon(1e-6));
        }
}

TEST_CASE("singular integral: bound and monotonicity") {
    QuadratureSpec spec;
    spec.rel_tol = 1e-7;
    for (auto r : {CoeffTriple{1, 1, 1}, CoeffTriple{2, 3, 1}, CoeffTriple{4, 1, 5}})
        for (auto box : {BoxSpec{2, 2, 2, 2, 2, 2}, BoxSpec{4, 2, 3, 5, 2, 2},
                         BoxSpec{8, 8, 8, 8, 8, 8}}) {
            auto res = singular_integral(r, box, spec);
            CHECK(res.value >= -res.error_bound);  // limiting density is nonnegative
            double prod = box.x1 * box.x2 * box.x3 * box.y1 * box.y2 * box.y3;
            double rprod = static_cast<double>(r.r1) * r.r2 * r.r3;
            CHECK(std::abs(res.value) <= std::pow(prod, 2.0 / 3.0) / std::cbrt(rprod) + 1e-9);
        }
    double small = singular_integral({1, 1, 1}, {2, 2, 2, 2, 2, 2}, spec).value;
    double grown = singular_integral({1, 1, 1}, {2, 2, 2, 2, 2, 3}, spec).value;
    CHECK(grown >= small - 1e-9);
}

TEST_CASE("singular integral is deterministic") {
    QuadratureSpec spec;
    auto a = singular_integral({2, 1, 3}, {3, 2, 4, 2, 5, 2}, spec);
    auto b = singular_integral({2, 1, 3}, {3, 2, 4, 2, 5, 2}, spec);
    CHECK(a.value == b.value);
    CHECK(a.error_bound == b.error_bound);
    CHECK(a.subdivisions == b.subdivisions);
}

TEST_CASE("contour form agrees with the frequency form") {
    QuadratureSpec spec;
    spec.rel_tol = 1e-8;
    auto r1 = mellin_crosscheck({1, 1, 1}, {2, 2, 2, 2, 2, 2}, spec);
    CHECK(r1.rel_gap <= 1e-3);
    auto r2 = mellin_crosscheck({1, 1, 1}, {1, 1, 1, 1, 1, 1}, spec);
    CHECK(r2.rel_gap <= 1e-3);
    // permutation symmetry of the coefficient-box pairing
    auto a = mellin_crosscheck({2, 1, 1}, {2, 3, 4, 4, 3, 2}, spec);
    auto b = mellin_crosscheck({1, 2, 1}, {3, 2, 4, 3, 4, 2}, spec);
    CHECK(a.direct == doctest::Approx(b.direct).epsilon(1e-6));
    CHECK(a.contour == doctest::Approx(b.contour).epsilon(1e-6));
    CHECK_THROWS_AS(mellin_crosscheck({1, 1, 1}, {20, 1, 1, 1, 1, 1}, spec),
                    std::invalid_argument);
}

TEST_CASE("triple sine-power integral matches its closed form") {
    auto rep = supermellin2_check();
    CHECK(rep.closed_form == doctest::Approx(9.2304456).epsilon(1e-7));
    CHECK(rep.abs_gap <= 1e-6);
    CHECK(rep.abs_gap <= rep.quadrature_error + 1e-9);
}

TEST_CASE("log-endpoint refinement converges") {
    // the y -> 0 endpoint carries a (log y)^3 singularity; successive domain
    // extensions must stabilize the value
    auto g = [](double y) { return std::sin(y) / y - cosine_integral(y); };
    auto f = [&](double v) {
        double y = std::exp(-v);
        double gv = g(y);
        return gv * gv * gv * y;
    };
    double v20 = integrate_adaptive(f, 0.0, 20.0, 1e-12, 1e-12, 4000, 64).value;
    double v40 = integrate_adaptive(f, 0.0, 40.0, 1e-12, 1e-12, 4000, 64).value;
    double v60 = integrate_adaptive(f, 0.0, 60.0, 1e-12, 1e-12, 4000, 64).value;
    CHECK(std::abs(v40 - v20) < 1e-4);
    CHECK(std::abs(v60 - v40) < 1e-12);
}
