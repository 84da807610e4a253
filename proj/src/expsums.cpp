#include "bicubic/expsums.hpp"

#include <cmath>
#include <numeric>
#include <numbers>

namespace bicubic {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// e(k/x) with the angle reduced before exponentiation.
cplx root_of_unity(i64 k, i64 x) {
    k %= x;
    if (k < 0) k += x;
    double theta = two_pi * static_cast<double>(k) / static_cast<double>(x);
    return {std::cos(theta), std::sin(theta)};
}

i64 mod_pos(i64 a, i64 m) {
    a %= m;
    return a < 0 ? a + m : a;
}

}  // namespace

cplx kloosterman(i64 a, i64 b, i64 q) {
    if (q < 1) throw std::invalid_argument("kloosterman modulus must be >= 1");
    cplx s = 0;
    for (i64 x = 1; x <= q; ++x) {
        auto inv = inverse_mod(x, q);
        if (!inv) continue;  // summation runs over units only
        s += root_of_unity(a * x + b * *inv, q);
    }
    return s;
}

cplx twisted_sum_direct(const TwistedSumParams& p) {
    if (p.x < 1 || p.r < 1) throw std::invalid_argument("twisted sum needs r, x >= 1");
    if (p.x > 10'000) throw std::invalid_argument("twisted sum direct cap exceeded");
    cplx s = 0;
    for (i64 xi = 1; xi <= p.x; ++xi)
        for (i64 eta = 1; eta <= p.x; ++eta)
            if (mod_pos(p.r * xi * eta + p.h, p.x) == 0)
                s += root_of_unity(p.h1 * xi + p.h2 * eta, p.x);
    return s;
}

cplx twisted_sum_closed(const TwistedSumParams& p) {
    if (p.x < 1 || p.r < 1) throw std::invalid_argument("twisted sum needs r, x >= 1");
    if (p.h == 0) throw std::domain_error("closed form restricted to h != 0");
    const i64 g = std::gcd(p.r, p.x);
    if (p.h % g != 0 || p.h1 % g != 0 || p.h2 % g != 0) return 0.0;

    const i64 cap = std::gcd(std::gcd(p.x, p.h < 0 ? -p.h : p.h),
                             p.h2 < 0 ? -p.h2 : p.h2);  // gcd(-,0) = first argument
    cplx total = 0;
    for (i64 dd : divisors(cap)) {
        if (dd % g != 0) continue;
        const i64 d = dd / g;          // term coefficient d*(r;x)^2
        const i64 q = p.x / dd;        // Kloosterman modulus x/(d(r;x))
        auto rbar = inverse_mod(p.r / g, q);
        if (!rbar) throw std::runtime_error("twisted sum: unit inverse missing");
        const i64 a = mod_pos(p.h1 / g, q);
        const i64 b = mod_pos(-mod_pos(p.h2 / dd, q) * mod_pos(*rbar * mod_pos(p.h / dd, q), q), q);
        total += static_cast<double>(d) * static_cast<double>(g) * static_cast<double>(g) *
                 kloosterman(a, b, q);
    }
    return total;
}

namespace {

// Pre-resolved congruence solutions for one (r,h,x), reused across twists.
struct CongruenceTable {
    i64 x;
    std::vector<std::pair<i64, i64>> pairs;
    std::vector<cplx> roots;  // e(k/x) for k in [0,x)

    CongruenceTable(i64 r, i64 h, i64 x_) : x(x_) {
        roots.reserve(x);
        for (i64 k = 0; k < x; ++k) roots.push_back(root_of_unity(k, x));
        for (i64 xi = 1; xi <= x; ++xi)
            for (i64 eta = 1; eta <= x; ++eta)
                if (mod_pos(r * xi * eta + h, x) == 0) pairs.emplace_back(xi, eta);
    }

    cplx sum(i64 h1, i64 h2) const {
        cplx s = 0;
        for (auto [xi, eta] : pairs) s += roots[mod_pos(h1 * xi + h2 * eta, x)];
        return s;
    }
};

}  // namespace

double closed_vs_direct_sweep(i64 r_max, i64 x_max, i64 h_max, bool include_zero_twists,
                              double abs_tol, std::vector<BoundViolation>* mismatches) {
    double worst = 0;
    for (i64 r = 1; r <= r_max; ++r)
        for (i64 x = 1; x <= x_max; ++x)
            for (i64 h = -h_max; h <= h_max; ++h) {
                if (h == 0) continue;
                CongruenceTable table(r, h, x);
                for (i64 h1 = -h_max; h1 <= h_max; ++h1)
                    for (i64 h2 = -h_max; h2 <= h_max; ++h2) {
                        if (!include_zero_twists && (h1 == 0 || h2 == 0)) continue;
                        TwistedSumParams p{r, h, h1, h2, x};
                        cplx direct = table.sum(h1, h2);
                        cplx closed = twisted_sum_closed(p);
                        double dev = std::abs(direct - closed);
                        worst = std::max(worst, dev);
                        if (dev > abs_tol && mismatches)
                            mismatches->push_back({p, "closed_vs_direct", dev, abs_tol});
                    }
            }
    return worst;
}

BoundAuditReport bound_audit(i64 r_max, i64 x_max, i64 h_max) {
    BoundAuditReport rep;
    rep.grid = "r,x <= " + std::to_string(r_max) + "," + std::to_string(x_max) +
               "; |h|,|h1|,|h2| <= " + std::to_string(h_max) + "; h != 0";
    auto track = [&](double& slot, double value, double bound, const TwistedSumParams& p,
                     const char* which) {
        ++rep.cases_checked;
        double ratio = value / bound;
        slot = std::max(slot, ratio);
        if (value > bound + 1e-9) rep.mismatches.push_back({p, which, value, bound});
    };

    for (i64 r = 1; r <= r_max; ++r)
        for (i64 x = 1; x <= x_max; ++x) {
            const i64 g = std::gcd(r, x);
            const double sqx = std::sqrt(static_cast<double>(x));
            const double tau_x = static_cast<double>(divisor_count(x));
            for (i64 h = -h_max; h <= h_max; ++h) {
                if (h == 0) continue;
                CongruenceTable table(r, h, x);
                const double tau_h = static_cast<double>(divisor_count(h < 0 ? -h : h));
                for (i64 h1 = -h_max; h1 <= h_max; ++h1)
                    for (i64 h2 = -h_max; h2 <= h_max; ++h2) {
                        double v = std::abs(table.sum(h1, h2));
                        TwistedSumParams p{r, h, h1, h2, x};
                        // One-sided twists: tau(h) (r;x) (x; h*hj). Each
                        // divisor term of the closed form is
                        // (r;x) (d (r;x) h1/(r;x); x) <= (r;x) (x; h h1) and
                        // there are at most tau(h) of them; the (r;x) factor
                        // is necessary (S = 9 > tau(3)(3;9) = 6 at
                        // r = h = h1 = x = 3).
                        if (h1 == 0 && h2 != 0) {
                            double bnd =
                                tau_h * static_cast<double>(g) * static_cast<double>(std::gcd(x, h * h2));
                            track(rep.max_ratio_01, v, bnd, p, "01");
                        } else if (h2 == 0 && h1 != 0) {
                            double bnd =
                                tau_h * static_cast<double>(g) * static_cast<double>(std::gcd(x, h * h1));
                            track(rep.max_ratio_10, v, bnd, p, "10");
                        } else if (h1 != 0 && h2 != 0) {
                            i64 inner = std::gcd(std::gcd((h * h1) / g, (h * h2) / g), x);
                            double bnd = tau_x * tau_x * static_cast<double>(g) * sqx *
                                         std::sqrt(static_cast<double>(inner));
                            track(rep.max_ratio_11, v, bnd, p, "11");
                        }
                    }
            }
        }

    // Weil-type estimate for the classical sums on a companion grid.
    for (i64 q = 1; q <= x_max; ++q) {
        const double bound_base =
            static_cast<double>(divisor_count(q)) * std::sqrt(static_cast<double>(q));
        for (i64 a = 0; a <= h_max; ++a)
            for (i64 b = -h_max; b <= h_max; ++b) {
                double v = std::abs(kloosterman(a, b, q));
                i64 gabq = std::gcd(std::gcd(a, b < 0 ? -b : b), q);  // >= 1 since q >= 1
                double bnd = std::sqrt(static_cast<double>(gabq)) * bound_base;
                ++rep.cases_checked;
                rep.max_ratio_weil = std::max(rep.max_ratio_weil, v / bnd);
                if (v > bnd + 1e-9)
                    rep.mismatches.push_back({TwistedSumParams{1, 0, a, b, q}, "weil", v, bnd});
            }
    }
    return rep;
}

}  // namespace bicubic
