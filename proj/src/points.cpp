#include "bicubic/points.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bicubic {

namespace {

i64 gcd3(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

bool equation_holds(const Triple& x, const Triple& y) {
    i128 s = static_cast<i128>(x[0]) * y[1] * y[2] + static_cast<i128>(x[1]) * y[0] * y[2] +
             static_cast<i128>(x[2]) * y[0] * y[1];
    return s == 0;
}

void flip(Triple& t) {
    for (auto& v : t) v = -v;
}

i64 icbrt(i64 n) {
    i64 r = static_cast<i64>(std::cbrt(static_cast<double>(n)));
    while (r > 0 && r * r * r > n) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= n) ++r;
    return r;
}

i64 div_floor(i64 a, i64 b) {  // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

i64 div_ceil(i64 a, i64 b) {  // b > 0
    return a >= 0 ? (a + b - 1) / b : -(-a / b);
}

}  // namespace

RationalPoint make_point(Triple x, Triple y) {
    for (i64 v : x)
        if (v == 0) throw std::invalid_argument("point has zero x coordinate");
    for (i64 v : y)
        if (v == 0) throw std::invalid_argument("point has zero y coordinate");
    if (gcd3(x[0], x[1], x[2]) != 1) throw std::invalid_argument("x triple not primitive");
    if (gcd3(y[0], y[1], y[2]) != 1) throw std::invalid_argument("y triple not primitive");
    if (!equation_holds(x, y)) throw std::invalid_argument("point not on the variety");
    if (x[0] < 0) flip(x);
    if (y[0] < 0) flip(y);
    return RationalPoint{x, y};
}

i64 height(const RationalPoint& p) {
    i64 mx = 0, my = 0;
    for (i64 v : p.x) mx = std::max(mx, checked_mul(v, v));
    for (i64 v : p.y) my = std::max(my, v < 0 ? -v : v);
    return checked_mul(mx, my);
}

CoprimalityVerdict coprimality_equivalence(const Triple& a, const Triple& d, const Triple& z) {
    for (int i = 0; i < 3; ++i)
        if (a[i] == 0 || d[i] == 0 || z[i] == 0)
            throw std::invalid_argument("coprimality check requires nonzero entries");

    bool pairs = true;
    for (int i = 0; i < 3 && pairs; ++i)
        for (int j = i + 1; j < 3 && pairs; ++j)
            pairs = std::gcd(d[i], d[j]) == 1 && std::gcd(z[i], z[j]) == 1;
    for (int k = 0; k < 3 && pairs; ++k) pairs = std::gcd(d[k], z[k]) == 1;

    CoprimalityVerdict v;
    v.product_form = pairs && gcd3(checked_mul(a[0], z[0]), checked_mul(a[1], z[1]),
                                   checked_mul(a[2], z[2])) == 1;

    bool split = pairs && gcd3(a[0], a[1], a[2]) == 1;
    for (int k = 0; k < 3 && split; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        split = gcd3(a[i], a[j], z[k]) == 1;
    }
    v.split_form = split;
    return v;
}

TorsorPoint make_torsor_point(Triple a, Triple d, Triple z) {
    for (int i = 0; i < 3; ++i) {
        if (a[i] == 0 || z[i] == 0) throw std::invalid_argument("torsor tuple has zero entry");
        if (d[i] <= 0) throw std::invalid_argument("torsor d entries must be positive");
    }
    i128 s = static_cast<i128>(a[0]) * d[0] + static_cast<i128>(a[1]) * d[1] +
             static_cast<i128>(a[2]) * d[2];
    if (s != 0) throw std::invalid_argument("torsor lattice equation violated");
    auto cv = coprimality_equivalence(a, d, z);
    if (!cv.product_form) throw std::invalid_argument("torsor coprimality violated");
    return TorsorPoint{a, d, z};
}

RationalPoint torsor_map(const TorsorPoint& t) {
    Triple x{checked_mul(t.a[0], t.z[0]), checked_mul(t.a[1], t.z[1]),
             checked_mul(t.a[2], t.z[2])};
    Triple y{checked_mul(checked_mul(t.d[1], t.d[2]), t.z[0]),
             checked_mul(checked_mul(t.d[0], t.d[2]), t.z[1]),
             checked_mul(checked_mul(t.d[0], t.d[1]), t.z[2])};
    return make_point(x, y);
}

namespace {

// Shared enumeration core: calls sink(height) once per canonical point.
void direct_scan(i64 bound, const std::function<void(i64, const RationalPoint&)>& sink) {
    if (bound < 1) throw std::invalid_argument("height bound must be >= 1");
    // intermediate products stay below sqrt(B) * B^2 < 2^63 up to this cap
    if (bound > 10'000'000) throw std::invalid_argument("direct enumeration bound cap exceeded");
    const i64 sx = isqrt(bound);
    for (i64 x1 = 1; x1 <= sx; ++x1) {
        for (i64 x2 = -sx; x2 <= sx; ++x2) {
            if (x2 == 0) continue;
            for (i64 x3 = -sx; x3 <= sx; ++x3) {
                if (x3 == 0) continue;
                if (gcd3(x1, x2, x3) != 1) continue;
                i64 mx = std::max({x1 * x1, x2 * x2, x3 * x3});
                i64 ycap = bound / mx;
                if (ycap < 1) continue;
                for (i64 y1 = 1; y1 <= ycap; ++y1) {
                    for (i64 y2 = -ycap; y2 <= ycap; ++y2) {
                        if (y2 == 0) continue;
                        // Solve for y3; x1*y2 + x2*y1 = 0 forces x3*y1*y2 = 0,
                        // impossible on the open locus.
                        i64 den = x1 * y2 + x2 * y1;
                        if (den == 0) continue;
                        i64 num = -x3 * y1 * y2;
                        if (num % den != 0) continue;
                        i64 y3 = num / den;
                        if (y3 == 0 || y3 > ycap || y3 < -ycap) continue;
                        if (gcd3(y1, y2, y3) != 1) continue;
                        RationalPoint p{{x1, x2, x3}, {y1, y2, y3}};
                        sink(mx * std::max({y1, y2 < 0 ? -y2 : y2, y3 < 0 ? -y3 : y3}), p);
                    }
                }
            }
        }
    }
}

// Calls sink(height) once per admissible 9-tuple (all four sign classes).
void torsor_scan(i64 bound, const std::function<void(i64, const TorsorPoint&)>& sink) {
    if (bound < 1) throw std::invalid_argument("height bound must be >= 1");
    if (bound > 1'000'000) throw std::invalid_argument("torsor enumeration bound cap exceeded");
    for (i64 d1 = 1; d1 <= bound; ++d1) {
        for (i64 d2 = 1; d1 * d2 <= bound; ++d2) {
            if (std::gcd(d1, d2) != 1) continue;
            for (i64 d3 = 1; d1 * d3 <= bound && d2 * d3 <= bound; ++d3) {
                if (std::gcd(d1, d3) != 1 || std::gcd(d2, d3) != 1) continue;
                const i64 p23 = d2 * d3, p13 = d1 * d3, p12 = d1 * d2;
                // height >= d_i d_j |z_k|^3 bounds each z coordinate
                const i64 c1 = icbrt(bound / p23);
                const i64 c2 = icbrt(bound / p13);
                const i64 c3 = icbrt(bound / p12);
                if (c1 < 1 || c2 < 1 || c3 < 1) continue;
                for (i64 z1 = -c1; z1 <= c1; ++z1) {
                    if (z1 == 0 || std::gcd(z1, d1) != 1) continue;
                    for (i64 z2 = -c2; z2 <= c2; ++z2) {
                        if (z2 == 0 || std::gcd(z2, d2) != 1 || std::gcd(z2, z1) != 1) continue;
                        for (i64 z3 = -c3; z3 <= c3; ++z3) {
                            if (z3 == 0 || std::gcd(z3, d3) != 1) continue;
                            if (std::gcd(z3, z1) != 1 || std::gcd(z3, z2) != 1) continue;
                            const i64 az1 = z1 < 0 ? -z1 : z1;
                            const i64 az2 = z2 < 0 ? -z2 : z2;
                            const i64 az3 = z3 < 0 ? -z3 : z3;
                            const i64 ybig = std::max({p23 * az1, p13 * az2, p12 * az3});
                            const i64 scap = isqrt(bound / ybig);
                            const i64 a1cap = scap / az1;
                            const i64 a2cap = scap / az2;
                            const i64 a3cap = scap / az3;
                            if (a1cap < 1 || a2cap < 1 || a3cap < 1) continue;
                            const i64 lim = a1cap * d1;  // |a2 d2 + a3 d3| <= a1cap d1
                            for (i64 a2 = -a2cap; a2 <= a2cap; ++a2) {
                                if (a2 == 0) continue;
                                const i64 base = a2 * d2;
                                const i64 lo3 = std::max(-a3cap, div_ceil(-lim - base, d3));
                                const i64 hi3 = std::min(a3cap, div_floor(lim - base, d3));
                                for (i64 a3 = lo3; a3 <= hi3; ++a3) {
                                    if (a3 == 0) continue;
                                    const i64 t = base + a3 * d3;
                                    if (t % d1 != 0) continue;
                                    const i64 a1 = -t / d1;
                                    if (a1 == 0) continue;
                                    if (gcd_ll(a2 * z2, a3 * z3) != 1 &&
                                        gcd3(a1 * z1, a2 * z2, a3 * z3) != 1)
                                        continue;
                                    const i64 m1 = a1 < 0 ? -a1 * az1 : a1 * az1;
                                    const i64 m2 = a2 < 0 ? -a2 * az2 : a2 * az2;
                                    const i64 m3 = a3 < 0 ? -a3 * az3 : a3 * az3;
                                    const i64 s = std::max({m1, m2, m3});
                                    const i64 h = s * s * ybig;
                                    if (h > bound) continue;
                                    sink(h, TorsorPoint{{a1, a2, a3}, {d1, d2, d3}, {z1, z2, z3}});
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

}  // namespace

EnumerationResult enumerate_direct(i64 bound, const EnumerationOptions& opt) {
    EnumerationResult res;
    res.bound = bound;
    res.method = EnumMethod::direct;
    bool keep = bound <= opt.retain_cap;
    if (keep) res.points.emplace();
    direct_scan(bound, [&](i64, const RationalPoint& p) {
        ++res.count;
        if (keep) res.points->push_back(p);
    });
    if (keep) std::sort(res.points->begin(), res.points->end());
    return res;
}

EnumerationResult enumerate_torsor(i64 bound, const EnumerationOptions& opt) {
    EnumerationResult res;
    res.bound = bound;
    res.method = EnumMethod::torsor;
    bool keep = bound <= opt.retain_cap;
    std::vector<RationalPoint> pts;
    torsor_scan(bound, [&](i64, const TorsorPoint& t) {
        ++res.raw_tuple_count;
        if (keep) pts.push_back(torsor_map(t));
    });
    if (res.raw_tuple_count % 4 != 0)
        throw std::runtime_error("torsor tuple count not divisible by 4");
    res.count = res.raw_tuple_count / 4;
    if (keep) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (static_cast<i64>(pts.size()) != res.count)
            throw std::runtime_error("torsor point multiplicity mismatch");
        res.points = std::move(pts);
    }
    return res;
}

namespace {

std::vector<i64> cumulative(std::vector<i64> hist) {
    for (size_t b = 1; b < hist.size(); ++b) hist[b] += hist[b - 1];
    return hist;
}

}  // namespace

std::vector<i64> count_profile_direct(i64 bound) {
    std::vector<i64> hist(static_cast<size_t>(bound) + 1, 0);
    direct_scan(bound, [&](i64 h, const RationalPoint&) { ++hist[h]; });
    return cumulative(std::move(hist));
}

std::vector<i64> count_profile_torsor(i64 bound) {
    auto raw = raw_tuple_profile_torsor(bound);
    for (auto& v : raw) {
        if (v % 4 != 0) throw std::runtime_error("torsor profile not divisible by 4");
        v /= 4;
    }
    return raw;
}

std::vector<i64> raw_tuple_profile_torsor(i64 bound) {
    std::vector<i64> hist(static_cast<size_t>(bound) + 1, 0);
    torsor_scan(bound, [&](i64 h, const TorsorPoint&) { ++hist[h]; });
    return cumulative(std::move(hist));
}

std::vector<TorsorPoint> torsor_fiber(const RationalPoint& p) {
    std::vector<TorsorPoint> fiber;
    auto try_divisor_triples = [&](const Triple& x, const Triple& y) {
        auto divs = [](i64 v) {
            std::vector<i64> out;
            for (i64 d : divisors(v < 0 ? -v : v)) {
                out.push_back(d);
                out.push_back(-d);
            }
            return out;
        };
        for (i64 z1 : divs(x[0]))
            for (i64 z2 : divs(x[1]))
                for (i64 z3 : divs(x[2])) {
                    Triple z{z1, z2, z3};
                    Triple a{x[0] / z1, x[1] / z2, x[2] / z3};
                    // y_k / z_k must recombine as positive products d_i d_j
                    i64 m1 = y[0] % z1 == 0 ? y[0] / z1 : 0;
                    i64 m2 = y[1] % z2 == 0 ? y[1] / z2 : 0;
                    i64 m3 = y[2] % z3 == 0 ? y[2] / z3 : 0;
                    if (m1 <= 0 || m2 <= 0 || m3 <= 0) continue;
                    i128 sq = static_cast<i128>(m2) * m3;
                    if (sq % m1 != 0) continue;
                    i64 d1 = isqrt(static_cast<i64>(sq / m1));
                    if (static_cast<i128>(d1) * d1 != sq / m1) continue;
                    if (d1 == 0 || m3 % d1 != 0 || m2 % d1 != 0) continue;
                    Triple d{d1, m3 / d1, m2 / d1};
                    if (d[1] * d[2] != m1) continue;
                    i128 s = static_cast<i128>(a[0]) * d[0] + static_cast<i128>(a[1]) * d[1] +
                             static_cast<i128>(a[2]) * d[2];
                    if (s != 0) continue;
                    if (!coprimality_equivalence(a, d, z).product_form) continue;
                    fiber.push_back(TorsorPoint{a, d, z});
                }
    };
    Triple x = p.x, y = p.y, nx = x, ny = y;
    flip(nx);
    flip(ny);
    try_divisor_triples(x, y);
    try_divisor_triples(x, ny);
    try_divisor_triples(nx, y);
    try_divisor_triples(nx, ny);
    return fiber;
}

MoebiusIndex make_moebius_index(Triple b, Triple c, Triple f, Triple g, i64 h) {
    for (const auto* t : {&b, &c, &f, &g})
        for (i64 v : *t)
            if (v < 1) throw std::invalid_argument("index entries must be positive");
    if (h < 1) throw std::invalid_argument("index entries must be positive");
    MoebiusIndex idx{b, c, f, g, h, alpha_tuple(b, c, f, g, h)};
    return idx;
}

std::array<Triple, 3> alpha_tuple(const Triple& b, const Triple& c, const Triple& f,
                                  const Triple& g, i64 h) {
    std::array<Triple, 3> alpha{};
    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        alpha[0][k] = lcm_tuple(std::array<i64, 3>{g[i], g[j], h});
        alpha[1][k] = lcm_tuple(std::array<i64, 3>{b[i], b[j], f[k]});
        alpha[2][k] = lcm_tuple(std::array<i64, 4>{c[i], c[j], f[k], g[k]});
    }
    return alpha;
}

namespace {

// Sum of mu(v) over 1 <= v <= cap with v | n, by honest divisor iteration.
i64 moebius_divisor_sum(i64 n, i64 cap) {
    i64 s = 0;
    for (i64 v : divisors(n))
        if (v <= cap) s += moebius(v);
    return s;
}

}  // namespace

MoebiusInversionReport moebius_inversion_check(const SupportedFunction& g) {
    MoebiusInversionReport rep;
    i64 cap = 1;
    for (const auto& e : g.entries)
        for (const auto* t : {&e.a, &e.d, &e.z})
            for (i64 v : *t) cap = std::max(cap, v < 0 ? -v : v);

    for (const auto& e : g.entries) {
        if (coprimality_equivalence(e.a, e.d, e.z).product_form) rep.lhs += e.value;

        // Summing the index 13-tuple first and the support second factors the
        // divisibility system into one divisor sum per index variable; the
        // truncation at the support magnitude is exact.
        auto A = [&](int i) { return e.a[i] < 0 ? -e.a[i] : e.a[i]; };
        auto D = [&](int i) { return e.d[i] < 0 ? -e.d[i] : e.d[i]; };
        auto Z = [&](int i) { return e.z[i] < 0 ? -e.z[i] : e.z[i]; };
        i64 coeff = moebius_divisor_sum(gcd3(A(0), A(1), A(2)), cap);  // h
        for (int k = 0; k < 3 && coeff != 0; ++k) {
            int i = (k + 1) % 3, j = (k + 2) % 3;
            coeff *= moebius_divisor_sum(std::gcd(D(i), D(j)), cap);          // b_k
            coeff *= moebius_divisor_sum(std::gcd(Z(i), Z(j)), cap);          // c_k
            coeff *= moebius_divisor_sum(std::gcd(Z(k), D(k)), cap);          // f_k
            coeff *= moebius_divisor_sum(gcd3(A(i), A(j), Z(k)), cap);        // g_k
        }
        rep.rhs += coeff * e.value;
    }
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

i64 moebius_inversion_rhs_nested(const SupportedFunction& g, i64 truncation) {
    std::vector<i64> sqfree;
    for (i64 v = 1; v <= truncation; ++v)
        if (moebius(v) != 0) sqfree.push_back(v);

    i64 total = 0;
    std::array<i64, 13> idx{};
    // idx layout: b0 b1 b2 c0 c1 c2 f0 f1 f2 g0 g1 g2 h
    std::function<void(size_t, i64)> rec = [&](size_t pos, i64 mu) {
        if (pos == idx.size()) {
            auto mi = make_moebius_index({idx[0], idx[1], idx[2]}, {idx[3], idx[4], idx[5]},
                                         {idx[6], idx[7], idx[8]}, {idx[9], idx[10], idx[11]},
                                         idx[12]);
            const auto& alpha = mi.alpha;
            for (const auto& e : g.entries) {
                bool ok = true;
                for (int k = 0; k < 3 && ok; ++k)
                    ok = e.a[k] % alpha[0][k] == 0 && e.d[k] % alpha[1][k] == 0 &&
                         e.z[k] % alpha[2][k] == 0;
                if (ok) total += mu * e.value;
            }
            return;
        }
        for (i64 v : sqfree) {
            idx[pos] = v;
            rec(pos + 1, mu * moebius(v));
        }
    };
    rec(0, 1);
    return total;
}

std::string point_list_csv(const std::vector<RationalPoint>& pts) {
    std::vector<std::pair<i64, RationalPoint>> rows;
    rows.reserve(pts.size());
    for (const auto& p : pts) rows.emplace_back(height(p), p);
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    os << "x1,x2,x3,y1,y2,y3,height\n";
    for (const auto& [h, p] : rows) {
        os << p.x[0] << ',' << p.x[1] << ',' << p.x[2] << ',' << p.y[0] << ',' << p.y[1] << ','
           << p.y[2] << ',' << h << '\n';
    }
    return os.str();
}

}  // namespace bicubic
