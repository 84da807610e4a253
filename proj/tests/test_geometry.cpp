#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bicubic/geometry.hpp"
#include "bicubic/localdata.hpp"

using namespace bicubic;

TEST_CASE("alpha invariant is exactly 1/576") {
    CHECK(alpha_invariant() == Rat(1, 576));
}

TEST_CASE("volume engine: simplex with weighted facets") {
    // 3 v1 + 4 v2 + 3 v3 + 2 v4 <= 1, v >= 0 has volume 1/(4! * 3*4*3*2)
    HalfSpaceSystem sys;
    sys.dim = 4;
    for (int i = 0; i < 4; ++i) {
        std::vector<Rat> n(4, Rat(0));
        n[i] = Rat(1);
        sys.normals.push_back(n);
        sys.offsets.push_back(Rat(0));
    }
    sys.normals.push_back({Rat(-3), Rat(-4), Rat(-3), Rat(-2)});
    sys.offsets.push_back(Rat(-1));
    CHECK(polytope_volume(sys) == Rat(1, 1728));

    // doubling every offset scales the 4-volume by 2^4
    HalfSpaceSystem scaled = sys;
    for (auto& b : scaled.offsets) b *= Rat(2);
    CHECK(polytope_volume(scaled) == Rat(16, 1728));
}

TEST_CASE("vertex enumeration of the dual-cone slice") {
    auto poly = enumerate_vertices(alpha_halfspace_system());
    CHECK(poly.vertices.size() >= 5);
    for (const auto& v : poly.vertices) {
        int active = 0;
        auto sys = alpha_halfspace_system();
        for (size_t i = 0; i < sys.normals.size(); ++i) {
            Rat lhs(0);
            for (int c = 0; c < 4; ++c) lhs += sys.normals[i][c] * v[c];
            CHECK(lhs >= sys.offsets[i]);
            if (lhs == sys.offsets[i]) ++active;
        }
        CHECK(active >= 4);
    }
}

TEST_CASE("finite-field point counts match the closed formula") {
    CHECK(point_count_fp(2) == 39);
    CHECK(point_count_fp(3) == 88);
    CHECK(point_count_fp(5) == 276);
    for (i64 p : prime_table().primes) {
        if (p > 47) break;
        CHECK(point_count_fp(p) == (p * p + 4 * p + 1) * (p + 1));
    }
}

TEST_CASE("local density and the per-prime constant identity") {
    CHECK(local_density(2) == Rat(39, 8));
    CHECK(local_density(3) == Rat(88, 27));
    for (i64 p : prime_table().primes) {
        if (p > 31) break;
        Rat density = local_density(p);
        CHECK(density == Rat(1) + Rat(5, p) + Rat(5, p * p) + Rat(1, p * p * p));
        CHECK(constant_c_factor(p) == rat_pow(Rat(p - 1, p), 5) * density);
    }
}

TEST_CASE("archimedean density: quadrature against the closed form") {
    auto mu = mu_infinity();
    CHECK(mu.closed_form == doctest::Approx(94.0205469).epsilon(1e-9));
    CHECK(std::abs(mu.quadrature - mu.closed_form) <= 1e-6);

    // the two reduced one-dimensional pieces sum to 4 log 2 - 1/2 + pi^2/6
    auto piece1 = integrate_adaptive(
        [](double u) { return (2.0 - u + std::log1p(u)) / std::max(u, 1.0); }, 0.0, 2.0, 1e-13,
        1e-13, 4000, 32);
    auto piece2 = integrate_adaptive(
        [](double s) { return std::log((1.0 + s) / (1.0 - s)) / s; }, 1e-12, 0.5, 1e-13, 1e-13,
        4000, 32);  // u = 1/s transform of the range u >= 2
    double expect = 4 * std::numbers::ln2 - 0.5 + std::numbers::pi * std::numbers::pi / 6;
    CHECK(piece1.value + piece2.value == doctest::Approx(expect).epsilon(1e-9));
    CHECK(std::abs(24 * expect - mu.closed_form) < 1e-12);
}

TEST_CASE("constant assembly reconciles with the counting coefficient") {
    auto b = peyre_assembly(200);
    // closed-form identity alpha * mu_inf = (pi^2 - 3 + 24 log 2)/144
    double lhs = b.alpha.to_double() * b.mu_inf_closed;
    double rhs = (std::numbers::pi * std::numbers::pi - 3 + 24 * std::numbers::ln2) / 144.0;
    CHECK(std::abs(lhs - rhs) < 1e-12);
    CHECK(b.alpha == Rat(1, 576));
    CHECK(b.reconciliation_delta <= b.shared_tail_bound + 1e-12);
    CHECK(b.mu_p.at(2) == Rat(39, 8));

    auto b50 = peyre_assembly(50);
    CHECK(std::abs(b50.theta_h - b50.theorem1_coeff) <= b50.shared_tail_bound + 1e-12);
    // growing the cutoff shrinks the reconciliation scale
    auto b500 = peyre_assembly(500);
    CHECK(b500.shared_tail_bound < b50.shared_tail_bound);
    CHECK(std::abs(b500.theta_h - b500.theorem1_coeff) <= b500.shared_tail_bound + 1e-12);
}

TEST_CASE("assembly rejects a degenerate cutoff") {
    CHECK_THROWS_AS(peyre_assembly(1), std::invalid_argument);
}
