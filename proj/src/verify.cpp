#include <cmath>
#include <numbers>
#include <random>

#include "bicubic/cli.hpp"
#include "bicubic/geometry.hpp"
#include "bicubic/points.hpp"
#include "bicubic/expsums.hpp"

namespace bicubic {

bool VerifySuiteResult::passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

void add_check(VerifySuiteResult& r, const std::string& name, bool ok, Json detail = Json()) {
    r.checks.push_back({name, ok, std::move(detail)});
}

VerifySuiteResult suite_expsums() {
    VerifySuiteResult r;
    r.suite = "expsums";

    std::vector<BoundViolation> mismatches;
    double worst = closed_vs_direct_sweep(20, 20, 8, true, 1e-8, &mismatches);
    add_check(r, "closed_form_matches_direct", mismatches.empty(),
              Json::object().set("max_abs_deviation", Json::num(worst)));

    auto audit = bound_audit(20, 20, 8);
    add_check(r, "bounds_hold", audit.mismatches.empty(),
              Json::object().set("cases", Json::integer(audit.cases_checked)));

    Json mm = Json::array();
    for (const auto& v : audit.mismatches)
        mm.push(Json::object()
                    .set("which", Json::str(v.which))
                    .set("r", Json::integer(v.params.r))
                    .set("h", Json::integer(v.params.h))
                    .set("h1", Json::integer(v.params.h1))
                    .set("h2", Json::integer(v.params.h2))
                    .set("x", Json::integer(v.params.x))
                    .set("value", Json::num(v.value))
                    .set("bound", Json::num(v.bound)));
    r.extra = Json::object()
                  .set("grid", Json::str(audit.grid))
                  .set("max_ratio_01", Json::num(audit.max_ratio_01))
                  .set("max_ratio_10", Json::num(audit.max_ratio_10))
                  .set("max_ratio_11", Json::num(audit.max_ratio_11))
                  .set("max_ratio_weil", Json::num(audit.max_ratio_weil))
                  .set("mismatches", std::move(mm));
    return r;
}

VerifySuiteResult suite_points(std::uint64_t seed) {
    VerifySuiteResult r;
    r.suite = "points";
    std::mt19937_64 rng(seed);

    const i64 b = 400;
    auto direct = count_profile_direct(b);
    auto torsor = count_profile_torsor(b);
    auto raw = raw_tuple_profile_torsor(b);
    bool counts_equal = direct == torsor;
    bool four_to_one = true;
    for (i64 bb = 1; bb <= b; ++bb)
        if (raw[bb] != 4 * direct[bb]) four_to_one = false;
    add_check(r, "dual_enumeration_counts_equal", counts_equal,
              Json::object().set("bound", Json::integer(b)).set("count", Json::integer(direct[b])));
    add_check(r, "torsor_tuples_four_per_point", four_to_one);

    auto pts = enumerate_direct(120);
    bool fibers_ok = true;
    for (const auto& p : *pts.points)
        if (torsor_fiber(p).size() != 4) fibers_ok = false;
    add_check(r, "fiber_size_four", fibers_ok,
              Json::object().set("points_checked", Json::integer(static_cast<i64>(pts.points->size()))));

    std::uniform_int_distribution<i64> coord(-20, 20);
    auto draw = [&] {
        i64 v = 0;
        while (v == 0) v = coord(rng);
        return v;
    };
    bool agree = true;
    for (int it = 0; it < 10'000; ++it) {
        Triple a{draw(), draw(), draw()}, d{draw(), draw(), draw()}, z{draw(), draw(), draw()};
        auto cv = coprimality_equivalence(a, d, z);
        if (cv.product_form != cv.split_form) agree = false;
    }
    add_check(r, "coprimality_systems_agree", agree);

    std::uniform_int_distribution<i64> small(-6, 6);
    std::uniform_int_distribution<i64> val(-8, 8);
    std::uniform_int_distribution<int> sz(1, 12);
    bool inversion_ok = true;
    for (int it = 0; it < 25; ++it) {
        SupportedFunction g;
        int n = sz(rng);
        for (int k = 0; k < n; ++k) {
            auto nz = [&] {
                i64 v = 0;
                while (v == 0) v = small(rng);
                return v;
            };
            g.entries.push_back({{nz(), nz(), nz()}, {nz(), nz(), nz()}, {nz(), nz(), nz()},
                                 val(rng)});
        }
        if (!moebius_inversion_check(g).equal) inversion_ok = false;
    }
    add_check(r, "moebius_inversion_identity", inversion_ok);
    return r;
}

VerifySuiteResult suite_localdata() {
    VerifySuiteResult r;
    r.suite = "localdata";

    bool scaling_ok = true;
    for (i64 d : {2, 3, 5, 6})
        for (CoeffTriple t : {CoeffTriple{1, 1, 1}, CoeffTriple{2, 3, 1}, CoeffTriple{4, 9, 5}}) {
            auto base = singular_series_euler_product(t, 500);
            auto scaled = singular_series_euler_product(CoeffTriple{d * t.r1, d * t.r2, d * t.r3}, 500);
            if (std::abs(scaled.value - d * base.value) > 1e-6 * std::abs(d * base.value))
                scaling_ok = false;
        }
    add_check(r, "series_scaling", scaling_ok);

    bool agree_ok = true;
    for (CoeffTriple t : {CoeffTriple{1, 1, 1}, CoeffTriple{2, 5, 7}, CoeffTriple{6, 4, 9}}) {
        auto qsum = singular_series_truncated(t, 4000);
        auto euler = singular_series_euler_product(t, 4000);
        if (std::abs(qsum.value - euler.value) > qsum.tail_bound + euler.tail_bound)
            agree_ok = false;
    }
    add_check(r, "qsum_matches_euler_product", agree_ok);

    bool fe_ok = true;
    for (CoeffTriple t : {CoeffTriple{1, 1, 1}, CoeffTriple{2, 3, 5}, CoeffTriple{4, 3, 1},
                          CoeffTriple{5, 4, 3}}) {
        double f = f_series(t).value;
        double e = singular_series_euler_product(t, 50'000).value;
        if (std::abs(f - e) > 1e-4 * std::abs(e)) fe_ok = false;
    }
    add_check(r, "f_series_equals_singular_series", fe_ok);

    add_check(r, "c_factor_at_two", constant_c_factor(2) == Rat(39, 256));

    auto t1 = supereuler_identity_check(1, 800);
    auto t3 = supereuler_identity_check(3, 800);
    add_check(r, "moebius_euler_sum_converges", t3.gap < t1.gap,
              Json::object()
                  .set("gap_t1", Json::num(t1.gap))
                  .set("gap_t3", Json::num(t3.gap))
                  .set("c", Json::num(t1.c_reference)));
    return r;
}

VerifySuiteResult suite_oscint(std::uint64_t seed) {
    VerifySuiteResult r;
    r.suite = "oscint";
    std::mt19937_64 rng(seed);

    auto sm = supermellin2_check();
    add_check(r, "triple_sine_integral_closed_form", sm.abs_gap <= 1e-6,
              Json::object()
                  .set("quadrature", Json::num(sm.quadrature))
                  .set("closed_form", Json::num(sm.closed_form)));

    add_check(r, "dilog_minus_one", std::abs(dilog(-1.0) + std::numbers::pi * std::numbers::pi / 12) < 1e-12);
    add_check(r, "si_asymptote",
              std::abs(integral_sine(1000.0) - std::numbers::pi / 2) < 1e-3 &&
                  std::abs(integral_sine(-5.0) + integral_sine(5.0)) < 1e-15);

    auto k1 = kernel_k({1.0 / 3.0, 2.5});
    auto k2 = kernel_k({1.0 / 3.0, -2.5});
    add_check(r, "kernel_conjugate_symmetry", std::abs(k1 - std::conj(k2)) < 1e-12);

    std::uniform_real_distribution<double> side(1.0, 6.0), freq(-2.0, 2.0);
    bool box_ok = true;
    for (int it = 0; it < 8; ++it) {
        double X = side(rng), Y = side(rng), alpha = freq(rng);
        double direct = box_fourier_factor(1, X, Y, alpha);
        auto f = [&](double x) {
            // inner y-integral of cos(2 pi alpha x y) over the dyadic range
            if (alpha == 0) return Y / 2;
            double c = 2 * std::numbers::pi * alpha * x;
            return (std::sin(c * Y) - std::sin(c * Y / 2)) / c;
        };
        auto q = integrate_adaptive(f, X / 2, X, 1e-12, 1e-12, 2000, 8);
        if (std::abs(direct - 4 * q.value) > 1e-8) box_ok = false;
    }
    add_check(r, "box_factor_matches_quadrature", box_ok);

    QuadratureSpec spec;
    spec.rel_tol = 1e-7;
    auto degen = singular_integral(CoeffTriple{1, 1, 12}, BoxSpec{1, 1, 10, 1, 1, 10}, spec);
    add_check(r, "degenerate_box_vanishes", std::abs(degen.value) <= degen.error_bound,
              Json::object().set("value", Json::num(degen.value)));

    BoxSpec bx{3, 2, 4, 2, 3, 2};
    double i1 = singular_integral(CoeffTriple{1, 1, 1}, bx, spec).value;
    double i2 = singular_integral(CoeffTriple{2, 2, 2}, bx, spec).value;
    add_check(r, "frequency_scaling", std::abs(i2 - i1 / 2) < 1e-5 * std::abs(i1),
              Json::object().set("i1", Json::num(i1)).set("i2", Json::num(i2)));
    return r;
}

VerifySuiteResult suite_geometry() {
    VerifySuiteResult r;
    r.suite = "geometry";

    add_check(r, "alpha_invariant_exact", alpha_invariant() == Rat(1, 576),
              Json::object().set("alpha", Json::rational(alpha_invariant())));

    bool fp_ok = true;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        i64 expect = (p * p + 4 * p + 1) * (p + 1);
        if (point_count_fp(p) != expect) fp_ok = false;
    }
    add_check(r, "fp_point_counts", fp_ok);

    bool factor_ok = true;
    for (i64 p : prime_table().primes) {
        if (p > 97) break;
        Rat density = Rat(p * p * p + 5 * p * p + 5 * p + 1) / rat_pow(Rat(p), 3);
        if (constant_c_factor(p) != rat_pow(Rat(p - 1) / Rat(p), 5) * density) factor_ok = false;
    }
    add_check(r, "c_factor_identity", factor_ok);

    auto mu = mu_infinity();
    add_check(r, "archimedean_density", std::abs(mu.quadrature - mu.closed_form) <= 1e-6,
              Json::object()
                  .set("quadrature", Json::num(mu.quadrature))
                  .set("closed_form", Json::num(mu.closed_form)));

    auto breakdown = peyre_assembly(300);
    double lhs = breakdown.alpha.to_double() * breakdown.mu_inf_closed;
    double rhs = (std::numbers::pi * std::numbers::pi - 3 + 24 * std::numbers::ln2) / 144.0;
    add_check(r, "alpha_mu_closed_identity", std::abs(lhs - rhs) < 1e-12);
    add_check(r, "assembly_reconciles", breakdown.reconciliation_delta <= breakdown.shared_tail_bound + 1e-12,
              Json::object()
                  .set("theta_h", Json::num(breakdown.theta_h))
                  .set("theorem1_coeff", Json::num(breakdown.theorem1_coeff)));
    return r;
}

}  // namespace

VerifySuiteResult verify_suite(const std::string& name, std::uint64_t seed) {
    if (name == "expsums") return suite_expsums();
    if (name == "points") return suite_points(seed);
    if (name == "localdata") return suite_localdata();
    if (name == "oscint") return suite_oscint(seed);
    if (name == "geometry") return suite_geometry();
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace bicubic
