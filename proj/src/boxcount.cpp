#include "bicubic/boxcount.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace bicubic {

namespace {

// Signed values r*x*y over the dyadic ranges, as (value -> multiplicity).
std::unordered_map<i64, i64> value_histogram(i64 r, i64 xs, i64 ys) {
    std::unordered_map<i64, i64> hist;
    const i64 x_lo = xs / 2 + 1, y_lo = ys / 2 + 1;
    for (i64 x = x_lo; x <= xs; ++x)
        for (i64 y = y_lo; y <= ys; ++y) {
            i64 v = checked_mul(checked_mul(r, x), y);
            hist[v] += 2;   // (x,y) and (-x,-y)
            hist[-v] += 2;  // (-x,y) and (x,-y)
        }
    return hist;
}

i64 dyadic_size(i64 s) { return s - s / 2; }

}  // namespace

i64 box_count_exact(const CoeffTriple& r, const IntBox& box) {
    if (std::min({box.x1, box.x2, box.x3, box.y1, box.y2, box.y3}) < 1)
        throw std::invalid_argument("box sides must be >= 1");

    // The equation is symmetric under simultaneous permutation of the index
    // triples; histogram the two cheap coordinates and look the third up.
    struct Axis {
        i64 r, xs, ys;
        i64 cost;
    };
    std::array<Axis, 3> ax{{{r.r1, box.x1, box.y1, 0},
                            {r.r2, box.x2, box.y2, 0},
                            {r.r3, box.x3, box.y3, 0}}};
    for (auto& a : ax) a.cost = checked_mul(dyadic_size(a.xs), dyadic_size(a.ys));
    std::sort(ax.begin(), ax.end(), [](const Axis& a, const Axis& b) { return a.cost < b.cost; });
    // pair cost for the match loop, plus a memory cap on each histogram
    if (checked_mul(ax[0].cost, ax[1].cost) > 10'000'000'000LL || ax[2].cost > 100'000'000LL)
        throw cost_cap_error("box count cost exceeds the configured cap");

    auto h1 = value_histogram(ax[0].r, ax[0].xs, ax[0].ys);
    auto h2 = value_histogram(ax[1].r, ax[1].xs, ax[1].ys);
    auto h3 = value_histogram(ax[2].r, ax[2].xs, ax[2].ys);

    i64 count = 0;
    for (const auto& [v1, m1] : h1)
        for (const auto& [v2, m2] : h2) {
            auto it = h3.find(-(v1 + v2));
            if (it != h3.end()) count += m1 * m2 * it->second;
        }
    return count;
}

BoxCountReport box_count_report(const CoeffTriple& r, const IntBox& box,
                                const QuadratureSpec& spec, i64 prime_cutoff) {
    BoxCountReport rep;
    rep.r = r;
    rep.box = box;
    rep.exact_count = box_count_exact(r, box);

    auto series = singular_series_euler_product(r, prime_cutoff);
    BoxSpec bs{static_cast<double>(box.x1), static_cast<double>(box.x2),
               static_cast<double>(box.x3), static_cast<double>(box.y1),
               static_cast<double>(box.y2), static_cast<double>(box.y3)};
    auto integral = singular_integral(r, bs, spec);

    rep.main_term = series.value * integral.value;
    rep.main_term_tail =
        series.tail_bound * std::abs(integral.value) + series.value * integral.error_bound;
    rep.abs_error = std::abs(static_cast<double>(rep.exact_count) - rep.main_term);

    const double s1 = static_cast<double>(r.r1) * box.x1 * box.y1;
    const double s2 = static_cast<double>(r.r2) * box.x2 * box.y2;
    const double s3 = static_cast<double>(r.r3) * box.x3 * box.y3;
    const double sides_min = std::min({static_cast<double>(box.x1), static_cast<double>(box.x2),
                                       static_cast<double>(box.x3), static_cast<double>(box.y1),
                                       static_cast<double>(box.y2), static_cast<double>(box.y3)});
    rep.bound_shape = std::pow(s1 * s2 * s3, 1.1) /
                      (std::max({s1, s2, s3}) * std::pow(sides_min, 1.0 / 6.0));
    rep.ratio = rep.abs_error / rep.bound_shape;
    return rep;
}

std::vector<BoxCountReport> proposition_check(const CoeffTriple& r, const std::vector<i64>& sides,
                                              const QuadratureSpec& spec) {
    std::vector<BoxCountReport> out;
    out.reserve(sides.size());
    for (i64 w : sides) {
        IntBox box{w, w, w, w, w, w};
        out.push_back(box_count_report(r, box, spec));
    }
    return out;
}

}  // namespace bicubic
