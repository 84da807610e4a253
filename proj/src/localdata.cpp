#include "bicubic/localdata.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace bicubic {

namespace {

void require_valid(const CoeffTriple& r) {
    if (r.r1 < 1 || r.r2 < 1 || r.r3 < 1)
        throw std::invalid_argument("coefficient triple entries must be >= 1");
}

}  // namespace

SeriesApprox singular_series_truncated(const CoeffTriple& r, i64 q_cutoff) {
    require_valid(r);
    if (q_cutoff < 1) throw std::invalid_argument("q cutoff must be >= 1");
    double sum = 0;
    for (i64 q = 1; q <= q_cutoff; ++q) {
        double num = static_cast<double>(euler_phi(q)) * static_cast<double>(std::gcd(q, r.r1)) *
                     static_cast<double>(std::gcd(q, r.r2)) * static_cast<double>(std::gcd(q, r.r3));
        sum += num / (static_cast<double>(q) * static_cast<double>(q) * static_cast<double>(q));
    }
    SeriesApprox a;
    a.value = sum;
    a.cutoff = q_cutoff;
    // (q;ri) <= ri and phi(q)/q^3 < 1/q^2, so the tail is below r1 r2 r3 / Q.
    a.tail_bound = static_cast<double>(checked_mul(checked_mul(r.r1, r.r2), r.r3)) /
                   static_cast<double>(q_cutoff);
    return a;
}

Rat singular_series_euler(const CoeffTriple& r, i64 p) {
    require_valid(r);
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
    int e[3] = {valuation(r.r1, p), valuation(r.r2, p), valuation(r.r3, p)};
    std::sort(e, e + 3, std::greater<int>());
    const int alpha = e[0], beta = e[1], gamma = e[2];
    const Rat P(p);
    // Geometric-series evaluation of 1 + sum_k p^(k-1)(p-1) p^(min(k,alpha)+...)/p^(3k)
    // split at the exponent breakpoints.
    return rat_pow(P, gamma) + Rat(beta - gamma) * (P - Rat(1)) * rat_pow(P, gamma - 1) +
           rat_pow(P, gamma - 1) - rat_pow(P, beta + gamma - alpha) / (P + Rat(1));
}

SeriesApprox singular_series_euler_product(const CoeffTriple& r, i64 prime_cutoff) {
    require_valid(r);
    if (prime_cutoff < 2) throw std::invalid_argument("prime cutoff must be >= 2");
    std::vector<i64> ps;
    for (i64 p : prime_table().primes) {
        if (p > prime_cutoff) break;
        ps.push_back(p);
    }
    for (auto [p, e] : factorize(radical(checked_mul(checked_mul(r.r1, r.r2), r.r3))).pairs)
        if (p > prime_cutoff) ps.push_back(p);
    std::sort(ps.begin(), ps.end());

    double prod = 1;
    for (i64 p : ps) prod *= singular_series_euler(r, p).to_double();

    SeriesApprox a;
    a.value = prod;
    a.cutoff = prime_cutoff;
    // Remaining generic factors satisfy 1 < f(p) < 1 + 1/p^2.
    a.tail_bound = prod * (std::exp(1.0 / static_cast<double>(prime_cutoff)) - 1.0);
    return a;
}

namespace {

// w(n) = sum over ordered (f,g,h) with f*g*h = n of mu(g)/g; multiplicative,
// w(p^m) = (m+1) - m/p.
double w_prime_power(int m, double p) {
    return static_cast<double>(m + 1) - static_cast<double>(m) / p;
}

struct FSeriesContext {
    i64 r1, r2p, r3p, rho;
    std::vector<i64> rad_primes;  // ascending primes of r1*r2*r3
};

// Euler p-factor of the d-sum for fixed outer divisors (a, b): sums over
// k = v_p(d) the product of gcd powers, the mu(g)/g factorization weight of
// d*b*(r2;r3)/(d*b;r1), and the p/(p+1) correction when p still divides
// r2'*a/(d;r2').
double d_sum_local(const FSeriesContext& ctx, i64 p, i64 a, i64 b, int exponent_cutoff,
                   double* tail_acc) {
    const double pd = static_cast<double>(p);
    const int e1 = valuation(ctx.r1, p);
    const int E2 = valuation(ctx.r2p, p);
    const int E3 = valuation(ctx.r3p, p);
    const int vb = valuation(b, p);
    const int va = valuation(a, p);
    const int vrho = valuation(ctx.rho, p);
    const int kmax = (E3 - vb > 0) ? 0 : exponent_cutoff;  // (d; r3'/b) = 1

    double sum = 0, term = 0;
    int k = 0;
    for (; k <= kmax; ++k) {
        double gcd_pow = std::pow(pd, std::min(k, E2)) * std::pow(pd, std::min(k + vb, e1));
        int w_arg = k + vb + vrho - std::min(k + vb, e1);
        double pi = (E2 + va > std::min(k, E2)) ? pd / (pd + 1.0) : 1.0;
        term = gcd_pow * w_prime_power(w_arg, pd) * pi / std::pow(pd, 2 * k);
        sum += term;
        if (k > std::max({E2, e1, E3, vb + vrho}) + 2 && term < 1e-30 * sum) break;
    }
    if (tail_acc) *tail_acc += 2.0 * term;  // succeeding terms shrink by >= p^2/2 each
    return sum;
}

}  // namespace

SeriesApprox f_series(const CoeffTriple& r, int exponent_cutoff) {
    require_valid(r);
    if (std::gcd(std::gcd(r.r1, r.r2), r.r3) != 1)
        throw std::invalid_argument("f_series requires a coprime triple");

    FSeriesContext ctx;
    ctx.rho = std::gcd(r.r2, r.r3);
    ctx.r1 = r.r1;
    ctx.r2p = r.r2 / ctx.rho;
    ctx.r3p = r.r3 / ctx.rho;
    for (auto [p, e] : factorize(checked_mul(checked_mul(r.r1, r.r2), r.r3)).pairs)
        ctx.rad_primes.push_back(p);

    // Generic primes contribute (1 - p^-3)/(1 - p^-2)^2, totalling
    // zeta(2)^2/zeta(3) over all p; divide the special primes back out.
    double g_free = zeta2 * zeta2 / zeta3;
    for (i64 p : ctx.rad_primes) {
        double pd = static_cast<double>(p);
        g_free *= (1.0 - 1.0 / (pd * pd)) * (1.0 - 1.0 / (pd * pd)) / (1.0 - 1.0 / (pd * pd * pd));
    }

    double total = 0, tail = 0;
    for (i64 a : divisors(ctx.r3p)) {
        int mu_a = moebius(a);
        if (mu_a == 0) continue;
        for (i64 b : divisors(ctx.r3p / a)) {
            double coeff = static_cast<double>(mu_a) / (static_cast<double>(a) * static_cast<double>(b));
            double prod = g_free;
            double local_tail = 0;
            for (i64 p : ctx.rad_primes)
                prod *= d_sum_local(ctx, p, a, b, exponent_cutoff, &local_tail);
            total += coeff * prod;
            tail += std::abs(coeff) * (std::abs(prod) * 1e-14 + local_tail);
        }
    }

    SeriesApprox out;
    out.value = total / zeta2;
    out.cutoff = exponent_cutoff;
    out.tail_bound = (tail + std::abs(total) * 1e-13) / zeta2;
    return out;
}

double f_series_euler_factor(const CoeffTriple& r, i64 p) {
    require_valid(r);
    const double pd = static_cast<double>(p);
    const double f1p = (1.0 - 1.0 / (pd * pd * pd)) / (1.0 - 1.0 / (pd * pd));
    CoeffTriple rp{ipow(p, valuation(r.r1, p)), ipow(p, valuation(r.r2, p)),
                   ipow(p, valuation(r.r3, p))};
    if (rp.r1 == 1 && rp.r2 == 1 && rp.r3 == 1) return f1p;
    double ratio = f_series(rp).value / f_series(CoeffTriple{1, 1, 1}).value;
    return f1p * ratio;
}

LocalFactorTable local_factor_table(const CoeffTriple& r, i64 prime_cutoff) {
    require_valid(r);
    LocalFactorTable table;
    table.r = r;
    bool coprime = std::gcd(std::gcd(r.r1, r.r2), r.r3) == 1;
    for (i64 p : prime_table().primes) {
        if (p > prime_cutoff) break;
        LocalFactorTable::Entry e;
        e.e_factor = singular_series_euler(r, p);
        e.f_factor = coprime ? f_series_euler_factor(r, p)
                             : std::numeric_limits<double>::quiet_NaN();
        table.entries.emplace(p, std::move(e));
    }
    return table;
}

Rat constant_c_factor(i64 p) {
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
    Rat P(p);
    return rat_pow((P - Rat(1)) / P, 5) *
           (Rat(1) + Rat(5) / P + Rat(5) / (P * P) + Rat(1) / (P * P * P));
}

SeriesApprox constant_c(i64 prime_cutoff) {
    if (prime_cutoff < 2) throw std::invalid_argument("prime cutoff must be >= 2");
    double prod = 1;
    for (i64 p : prime_table().primes) {
        if (p > prime_cutoff) break;
        // double evaluation: the exact-rational factor outgrows 128 bits
        // near p ~ 5*10^4
        double u = 1.0 / static_cast<double>(p);
        prod *= std::pow(1.0 - u, 5) * (1.0 + 5 * u + 5 * u * u + u * u * u);
    }
    SeriesApprox a;
    a.value = prod;
    a.cutoff = prime_cutoff;
    // -log(factor) <= 11/p^2 for every prime, so the dropped factors lie in
    // [exp(-11/P), 1].
    a.tail_bound = prod * (1.0 - std::exp(-11.0 / static_cast<double>(prime_cutoff)));
    return a;
}

namespace {

struct QSumMemo {
    i64 q_cutoff;
    std::unordered_map<i64, std::pair<double, double>> table;  // value, tail

    std::pair<double, double> get(i64 m1, i64 m2, i64 m3) {
        i64 k[3] = {m1, m2, m3};
        std::sort(k, k + 3);
        i64 key = (k[2] * 1'000'000 + k[1]) * 1'000'000 + k[0];
        auto it = table.find(key);
        if (it != table.end()) return it->second;
        double sum = 0;
        for (i64 q = 1; q <= q_cutoff; ++q)
            sum += static_cast<double>(euler_phi(q)) * static_cast<double>(std::gcd(q, k[0])) *
                   static_cast<double>(std::gcd(q, k[1])) * static_cast<double>(std::gcd(q, k[2])) /
                   (static_cast<double>(q) * static_cast<double>(q) * static_cast<double>(q));
        // tail <= (2/Q) sum over divisor triples e_i | m_i of phi(e1)phi(e2)phi(e3)/lcm
        double tail = 0;
        for (i64 e1 : divisors(k[0]))
            for (i64 e2 : divisors(k[1]))
                for (i64 e3 : divisors(k[2])) {
                    i64 l = std::lcm(std::lcm(e1, e2), e3);
                    tail += static_cast<double>(euler_phi(e1)) * static_cast<double>(euler_phi(e2)) *
                            static_cast<double>(euler_phi(e3)) / static_cast<double>(l);
                }
        tail *= 2.0 / static_cast<double>(q_cutoff);
        auto res = std::make_pair(sum, tail);
        table.emplace(key, res);
        return res;
    }
};

}  // namespace

SupereulerReport supereuler_identity_check(i64 truncation, i64 q_cutoff) {
    if (truncation < 1 || truncation > 6)
        throw std::invalid_argument("truncation supported in [1,6]");
    if (q_cutoff < 1 || q_cutoff > 2000) throw std::invalid_argument("q cutoff supported to 2000");

    std::vector<i64> sf;  // squarefree index values with their mu
    for (i64 v = 1; v <= truncation; ++v)
        if (moebius(v) != 0) sf.push_back(v);
    const size_t n = sf.size();

    // lcm lookup for values <= 30 (lcms of entries <= 6 stay within 60)
    auto lcm2 = [](i64 a, i64 b) { return std::lcm(a, b); };

    QSumMemo memo{q_cutoff, {}};
    double lhs = 0, lhs_tail = 0;

    std::vector<i64> f(3), g(3);
    for (size_t f0 = 0; f0 < n; ++f0)
        for (size_t f1 = 0; f1 < n; ++f1)
            for (size_t f2 = 0; f2 < n; ++f2) {
                f = {sf[f0], sf[f1], sf[f2]};
                int mu_f = moebius(f[0]) * moebius(f[1]) * moebius(f[2]);
                for (size_t g0 = 0; g0 < n; ++g0)
                    for (size_t g1 = 0; g1 < n; ++g1)
                        for (size_t g2 = 0; g2 < n; ++g2) {
                            g = {sf[g0], sf[g1], sf[g2]};
                            int mu_g = moebius(g[0]) * moebius(g[1]) * moebius(g[2]);
                            for (size_t hi = 0; hi < n; ++hi) {
                                i64 h = sf[hi];
                                int mu_fgh = mu_f * mu_g * moebius(h);
                                i64 a1[3], denom_a1 = 1;
                                for (int k = 0; k < 3; ++k) {
                                    a1[k] = lcm2(lcm2(g[(k + 1) % 3], g[(k + 2) % 3]), h);
                                    denom_a1 *= a1[k];
                                }
                                // c-sum factors out: sum_c mu(c)/prod_k alpha3k
                                double csum = 0;
                                for (size_t c0 = 0; c0 < n; ++c0)
                                    for (size_t c1 = 0; c1 < n; ++c1)
                                        for (size_t c2 = 0; c2 < n; ++c2) {
                                            i64 c[3] = {sf[c0], sf[c1], sf[c2]};
                                            int mu_c = moebius(c[0]) * moebius(c[1]) * moebius(c[2]);
                                            double denom = 1;
                                            for (int k = 0; k < 3; ++k)
                                                denom *= static_cast<double>(
                                                    lcm2(lcm2(c[(k + 1) % 3], c[(k + 2) % 3]),
                                                         lcm2(f[k], g[k])));
                                            csum += static_cast<double>(mu_c) / denom;
                                        }
                                // b-sum carries the q-sum through alpha1*alpha2
                                double bsum = 0, btail = 0;
                                for (size_t b0 = 0; b0 < n; ++b0)
                                    for (size_t b1 = 0; b1 < n; ++b1)
                                        for (size_t b2 = 0; b2 < n; ++b2) {
                                            i64 b[3] = {sf[b0], sf[b1], sf[b2]};
                                            int mu_b = moebius(b[0]) * moebius(b[1]) * moebius(b[2]);
                                            i64 a2[3], m[3], denom_a2 = 1;
                                            for (int k = 0; k < 3; ++k) {
                                                a2[k] = lcm2(lcm2(b[(k + 1) % 3], b[(k + 2) % 3]), f[k]);
                                                m[k] = a1[k] * a2[k];
                                                denom_a2 *= a2[k];
                                            }
                                            auto [s, st] = memo.get(m[0], m[1], m[2]);
                                            bsum += static_cast<double>(mu_b) * s /
                                                    static_cast<double>(denom_a2);
                                            btail += st / static_cast<double>(denom_a2);
                                        }
                                lhs += static_cast<double>(mu_fgh) * bsum * csum /
                                       static_cast<double>(denom_a1);
                                lhs_tail += btail * std::abs(csum) / static_cast<double>(denom_a1);
                            }
                        }
            }

    SupereulerReport rep;
    rep.truncation = truncation;
    rep.q_cutoff = q_cutoff;
    rep.lhs = lhs;
    rep.lhs_tail_bound = lhs_tail;
    auto c_ref = constant_c(100'000);
    rep.c_reference = c_ref.value;
    rep.gap = std::abs(lhs - c_ref.value);
    return rep;
}

}  // namespace bicubic
