// Acceptance suite: one line per criterion, exit 0 only when all pass.
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "bicubic/boxcount.hpp"
#include "bicubic/expsums.hpp"
#include "bicubic/geometry.hpp"
#include "bicubic/points.hpp"

using namespace bicubic;

namespace {

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d %-24s %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
    va_list ap;
    va_start(ap, f);
    char buf[512];
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

void criterion1_torsor() {
    auto direct = count_profile_direct(1000);
    auto torsor = count_profile_torsor(1000);
    auto raw = raw_tuple_profile_torsor(1000);
    bool ok = true;
    for (i64 b = 1; b <= 1000; ++b)
        if (direct[b] != torsor[b] || raw[b] != 4 * direct[b]) ok = false;
    report(1, "torsor-correctness", ok,
           fmt("N(1000)=%lld raw=%lld (all B<=1000 compared)", direct[1000], raw[1000]));
}

void criterion2_expsums() {
    std::vector<BoundViolation> mm;
    double worst = closed_vs_direct_sweep(30, 30, 10, false, 1e-8, &mm);
    auto audit = bound_audit(20, 20, 8);
    bool ok = mm.empty() && audit.mismatches.empty();
    report(2, "exponential-sums", ok,
           fmt("sweep max|closed-direct|=%.2e, audit cases=%lld violations=%zu", worst,
               audit.cases_checked, audit.mismatches.size()));
}

void criterion3_singular_series() {
    bool tails_ok = true;
    int triples = 0;
    for (i64 a : {1, 2, 3, 5, 8})
        for (i64 b : {1, 4, 9, 6})
            if (triples < 20) {
                CoeffTriple r{a, b, a + b};
                auto qsum = singular_series_truncated(r, 3000);
                auto euler = singular_series_euler_product(r, 3000);
                if (std::abs(qsum.value - euler.value) > qsum.tail_bound + euler.tail_bound)
                    tails_ok = false;
                ++triples;
            }

    bool scaling_ok = true;
    for (i64 d : {2, 3, 5, 6})
        for (i64 a = 1; a <= 10 && scaling_ok; a += 3)
            for (i64 b = 1; b <= 10; b += 2)
                for (i64 c = 1; c <= 10; c += 4) {
                    auto base = singular_series_euler_product({a, b, c}, 2000);
                    auto up = singular_series_euler_product({d * a, d * b, d * c}, 2000);
                    if (std::abs(up.value - d * base.value) > 1e-6 * std::abs(d * base.value))
                        scaling_ok = false;
                }

    bool fe_ok = true;
    double worst_fe = 0;
    for (i64 a = 1; a <= 8; ++a)
        for (i64 b = 1; b <= 8; ++b)
            for (i64 c = 1; c <= 8; ++c) {
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                double f = f_series({a, b, c}).value;
                double e = singular_series_euler_product({a, b, c}, 100'000).value;
                worst_fe = std::max(worst_fe, std::abs(f - e) / std::abs(e));
                if (std::abs(f - e) > 1e-4 * std::abs(e)) fe_ok = false;
            }
    report(3, "singular-series", tails_ok && scaling_ok && fe_ok,
           fmt("%d tail checks, scaling<=1e-6, max|F-E|/E=%.2e", triples, worst_fe));
}

void criterion4_constant_factors() {
    bool ok = true;
    i64 checked = 0;
    for (i64 p : prime_table().primes) {
        if (p > 97) break;
        i64 count = point_count_fp(p);  // honest enumeration
        if (count != (p * p + 4 * p + 1) * (p + 1)) ok = false;
        Rat lhs = constant_c_factor(p);
        Rat rhs = rat_pow(Rat(p - 1, p), 5) * Rat(count) / rat_pow(Rat(p), 3);
        if (lhs != rhs) ok = false;
        ++checked;
    }
    report(4, "constant-C-factors", ok, fmt("all %lld primes p<=97, exact rationals", checked));
}

void criterion5_proposition() {
    QuadratureSpec spec;
    spec.rel_tol = 1e-6;
    auto reports = proposition_check({1, 1, 1}, {8, 16, 32, 64}, spec);
    std::vector<double> rel;
    for (const auto& rep : reports)
        rel.push_back(rep.abs_error / std::max<double>(1.0, static_cast<double>(rep.exact_count)));
    int inversions = 0;
    for (size_t i = 1; i < rel.size(); ++i)
        if (rel[i] > rel[i - 1]) ++inversions;
    bool seq_ok = inversions <= 1 && rel.back() <= 0.20;

    i64 degenerate = box_count_exact({1, 1, 12}, {2, 3, 9, 3, 2, 9});
    auto vanish = singular_integral({1, 1, 12}, {2, 3, 9, 3, 2, 9}, spec);
    bool degen_ok = degenerate == 0 && std::abs(vanish.value) <= vanish.error_bound;
    report(5, "main-term-asymptotics", seq_ok && degen_ok,
           fmt("rel errors %.3f %.3f %.3f %.3f (inversions=%d), degenerate count=0", rel[0], rel[1],
               rel[2], rel[3], inversions));
}

void criterion6_mellin() {
    QuadratureSpec spec;
    spec.rel_tol = 1e-8;
    double worst = 0;
    for (auto [r, box] : std::initializer_list<std::pair<CoeffTriple, BoxSpec>>{
             {{1, 1, 1}, {2, 2, 2, 2, 2, 2}},
             {{1, 1, 1}, {1, 1, 1, 1, 1, 1}},
             {{2, 1, 1}, {2, 3, 4, 4, 3, 2}}}) {
        auto rep = mellin_crosscheck(r, box, spec);
        worst = std::max(worst, rep.rel_gap);
    }
    report(6, "contour-crosscheck", worst <= 1e-3, fmt("max relative gap %.2e", worst));
}

void criterion7_supermellin2() {
    auto rep = supermellin2_check();
    report(7, "triple-sine-integral", rep.abs_gap <= 1e-6,
           fmt("quad=%.9f closed=%.9f gap=%.2e", rep.quadrature, rep.closed_form, rep.abs_gap));
}

void criterion8_geometry() {
    bool alpha_ok = alpha_invariant() == Rat(1, 576);
    auto mu = mu_infinity();
    bool mu_ok = std::abs(mu.quadrature - mu.closed_form) <= 1e-6;
    double lhs = alpha_invariant().to_double() * mu.closed_form;
    double rhs = (std::numbers::pi * std::numbers::pi - 3 + 24 * std::numbers::ln2) / 144.0;
    bool id_ok = std::abs(lhs - rhs) <= 1e-12;
    report(8, "geometry-exactness", alpha_ok && mu_ok && id_ok,
           fmt("alpha=%s, |mu_quad-mu_closed|=%.2e, identity gap=%.2e",
               alpha_invariant().to_string().c_str(), std::abs(mu.quadrature - mu.closed_form),
               std::abs(lhs - rhs)));
}

void criterion9_reconciliation() {
    auto b = peyre_assembly(1000);
    bool ok = b.reconciliation_delta <= b.shared_tail_bound + 1e-12;
    report(9, "peyre-reconciliation", ok,
           fmt("theta_H=%.9f theorem1=%.9f delta=%.2e tail=%.2e", b.theta_h, b.theorem1_coeff,
               b.reconciliation_delta, b.shared_tail_bound));
}

void criterion10_moebius() {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<i64> coord(-6, 6), val(-9, 9);
    std::uniform_int_distribution<int> size(1, 14);
    auto nz = [&] {
        i64 v = 0;
        while (v == 0) v = coord(rng);
        return v;
    };
    int passed = 0;
    for (int it = 0; it < 100; ++it) {
        SupportedFunction g;
        int n = size(rng);
        for (int k = 0; k < n; ++k)
            g.entries.push_back(
                {{nz(), nz(), nz()}, {nz(), nz(), nz()}, {nz(), nz(), nz()}, val(rng)});
        if (moebius_inversion_check(g).equal) ++passed;
    }
    report(10, "moebius-machinery", passed == 100, fmt("%d/100 random supported functions", passed));
}

}  // namespace

int main() {
    criterion1_torsor();
    criterion2_expsums();
    criterion3_singular_series();
    criterion4_constant_factors();
    criterion5_proposition();
    criterion6_mellin();
    criterion7_supermellin2();
    criterion8_geometry();
    criterion9_reconciliation();
    criterion10_moebius();
    std::printf("%s: %d of 10 criteria passed\n", failures == 0 ? "OK" : "FAILED", 10 - failures);
    return failures == 0 ? 0 : 1;
}
