#include "bicubic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "bicubic/localdata.hpp"

namespace bicubic {

namespace {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Gaussian elimination rank over Q.
int rank_of(RatMat m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// Solve square system A x = b exactly; nullopt when singular.
std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!a[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rat f = a[r][c] / a[c][c];
            for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
            b[r] -= f * b[c];
        }
    }
    RatVec x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

Rat det(RatMat a) {
    const int n = static_cast<int>(a.size());
    Rat d(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!a[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != c) {
            std::swap(a[c], a[pivot]);
            d = -d;
        }
        d *= a[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Rat f = a[r][c] / a[c][c];
            for (int cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
        }
    }
    return d;
}

}  // namespace

HalfSpaceSystem alpha_halfspace_system() {
    // Coordinates (w1,w2,w3,w4); w0 = (1 + w1 + w2 + w3 - 2 w4)/2 eliminated
    // from the anticanonical slice. Constraints:
    //   w_i >= 0, w4 - w_i >= 0 (i = 1..3),
    //   w0 - w_i - w_j >= 0  ->  1 + w_k - w_i - w_j - 2 w4 >= 0.
    HalfSpaceSystem sys;
    sys.dim = 4;
    auto add = [&](std::array<int, 4> n, int b) {
        sys.normals.push_back({Rat(n[0]), Rat(n[1]), Rat(n[2]), Rat(n[3])});
        sys.offsets.push_back(Rat(b));
    };
    add({1, 0, 0, 0}, 0);
    add({0, 1, 0, 0}, 0);
    add({0, 0, 1, 0}, 0);
    add({-1, 0, 0, 1}, 0);
    add({0, -1, 0, 1}, 0);
    add({0, 0, -1, 1}, 0);
    add({-1, -1, 1, -2}, -1);  // (i,j,k) = (1,2,3)
    add({-1, 1, -1, -2}, -1);  // (1,3,2)
    add({1, -1, -1, -2}, -1);  // (2,3,1)
    return sys;
}

Polytope enumerate_vertices(const HalfSpaceSystem& sys) {
    const int d = sys.dim;
    const int m = static_cast<int>(sys.normals.size());
    Polytope poly;
    poly.dim = d;
    std::vector<int> pick(d);
    std::vector<RatVec> found;

    std::function<void(int, int)> choose = [&](int start, int depth) {
        if (depth == d) {
            RatMat a(d, RatVec(d));
            RatVec b(d);
            for (int i = 0; i < d; ++i) {
                a[i] = sys.normals[pick[i]];
                b[i] = sys.offsets[pick[i]];
            }
            auto x = solve_square(a, b);
            if (!x) return;
            for (int i = 0; i < m; ++i) {
                Rat lhs(0);
                for (int c = 0; c < d; ++c) lhs += sys.normals[i][c] * (*x)[c];
                if (lhs < sys.offsets[i]) return;
            }
            found.push_back(*x);
            return;
        }
        for (int i = start; i <= m - (d - depth); ++i) {
            pick[depth] = i;
            choose(i + 1, depth + 1);
        }
    };
    choose(0, 0);
    std::sort(found.begin(), found.end(), [](const RatVec& a, const RatVec& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            auto c = a[i] <=> b[i];
            if (c != 0) return c < 0;
        }
        return false;
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    poly.vertices = std::move(found);
    return poly;
}

namespace {

bool saturates(const HalfSpaceSystem& sys, int ineq, const RatVec& v) {
    Rat lhs(0);
    for (size_t c = 0; c < v.size(); ++c) lhs += sys.normals[ineq][c] * v[c];
    return lhs == sys.offsets[ineq];
}

int affine_dim(const std::vector<RatVec>& pts) {
    if (pts.empty()) return -1;
    RatMat diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        RatVec row(pts[i].size());
        for (size_t c = 0; c < row.size(); ++c) row[c] = pts[i][c] - pts[0][c];
        diffs.push_back(std::move(row));
    }
    return diffs.empty() ? 0 : rank_of(diffs);
}

// Triangulates conv(pts) (affine dimension fdim) into fdim-simplices by
// coning the lowest vertex over the facets that avoid it. Facets of a face
// are cut out by the global inequality list; duplicate vertex sets are
// merged before recursing.
void triangulate(const HalfSpaceSystem& sys, const std::vector<RatVec>& pts, int fdim,
                 std::vector<std::vector<RatVec>>& out) {
    if (static_cast<int>(pts.size()) == fdim + 1) {
        out.push_back(pts);
        return;
    }
    const RatVec& base = pts[0];  // callers keep pts sorted
    std::set<std::vector<size_t>> seen;
    for (size_t i = 0; i < sys.normals.size(); ++i) {
        std::vector<RatVec> face;
        std::vector<size_t> idx;
        bool base_in = false;
        for (size_t k = 0; k < pts.size(); ++k)
            if (saturates(sys, static_cast<int>(i), pts[k])) {
                face.push_back(pts[k]);
                idx.push_back(k);
                if (k == 0) base_in = true;
            }
        if (base_in || static_cast<int>(face.size()) < fdim) continue;
        if (affine_dim(face) != fdim - 1) continue;
        if (!seen.insert(idx).second) continue;
        std::vector<std::vector<RatVec>> sub;
        triangulate(sys, face, fdim - 1, sub);
        for (auto& s : sub) {
            s.push_back(base);
            out.push_back(std::move(s));
        }
    }
}

}  // namespace

Rat polytope_volume(const HalfSpaceSystem& sys) {
    Polytope poly = enumerate_vertices(sys);
    if (poly.vertices.empty()) return Rat(0);
    if (affine_dim(poly.vertices) != sys.dim)
        throw std::runtime_error("polytope is not full-dimensional");
    std::vector<std::vector<RatVec>> simplices;
    triangulate(sys, poly.vertices, sys.dim, simplices);

    Rat vol(0);
    Rat fact(1);
    for (int i = 2; i <= sys.dim; ++i) fact *= Rat(i);
    for (const auto& s : simplices) {
        RatMat m(sys.dim, RatVec(sys.dim));
        for (int i = 0; i < sys.dim; ++i)
            for (int c = 0; c < sys.dim; ++c) m[i][c] = s[i + 1][c] - s[0][c];
        vol += det(std::move(m)).abs() / fact;
    }
    return vol;
}

Rat alpha_invariant() {
    // ds/dl = dw1 dw2 dw3 dw4 / |coefficient of the eliminated w0| = /2.
    return polytope_volume(alpha_halfspace_system()) / Rat(2);
}

namespace {

// Projective representatives of P^2(F_p): (1,a,b), (0,1,a), (0,0,1).
template <typename F>
void for_each_p2(i64 p, F&& f) {
    for (i64 a = 0; a < p; ++a)
        for (i64 b = 0; b < p; ++b) f(std::array<i64, 3>{1, a, b});
    for (i64 a = 0; a < p; ++a) f(std::array<i64, 3>{0, 1, a});
    f(std::array<i64, 3>{0, 0, 1});
}

}  // namespace

i64 point_count_fp(i64 p) {
    if (p < 2 || !prime_table().is_prime(p)) throw std::invalid_argument("p must be prime");
    if (p > 97) throw std::invalid_argument("enumeration cap p <= 97");
    i64 total = 0;
    for_each_p2(p, [&](const std::array<i64, 3>& z) {
        i64 x_count = 0;
        for_each_p2(p, [&](const std::array<i64, 3>& x) {
            if ((x[0] * z[0] + x[1] * z[1] + x[2] * z[2]) % p == 0) ++x_count;
        });
        i64 y_count = 0;
        for_each_p2(p, [&](const std::array<i64, 3>& y) {
            i64 t1 = (y[0] * z[0]) % p, t2 = (y[1] * z[1]) % p, t3 = (y[2] * z[2]) % p;
            if (t1 == t2 && t2 == t3) ++y_count;
        });
        total += x_count * y_count;
    });
    return total;
}

Rat local_density(i64 p) {
    return Rat(point_count_fp(p)) / rat_pow(Rat(p), 3);
}

MuInfinityResult mu_infinity(const QuadratureSpec& spec) {
    // Inner integral over t in [-1,1] with the min kink at t = 1 - u.
    auto inner = [&](double u) {
        auto f = [&](double t) { return std::min(1.0 / std::abs(t + u), 1.0); };
        double split = 1.0 - u;
        if (split > -1.0 && split < 1.0) {
            auto a = integrate_adaptive(f, -1.0, split, 1e-12, 1e-12, 400, 4);
            auto b = integrate_adaptive(f, split, 1.0, 1e-12, 1e-12, 400, 4);
            return a.value + b.value;
        }
        return integrate_adaptive(f, -1.0, 1.0, 1e-12, 1e-12, 400, 4).value;
    };

    auto near = [&](double u) { return inner(u) / std::max(u, 1.0); };
    auto far = [&](double s) { return inner(1.0 / s) / s; };  // u = 1/s, u > 3

    auto p1 = integrate_adaptive(near, 0.0, 1.0, 1e-11, 1e-12, spec.max_subdivisions, 8);
    auto p2 = integrate_adaptive(near, 1.0, 2.0, 1e-11, 1e-12, spec.max_subdivisions, 8);
    auto p3 = integrate_adaptive(near, 2.0, 3.0, 1e-11, 1e-12, spec.max_subdivisions, 8);
    auto p4 = integrate_adaptive(far, 1e-9, 1.0 / 3.0, 1e-11, 1e-12, spec.max_subdivisions, 8);

    MuInfinityResult res;
    res.quadrature = 24.0 * (p1.value + p2.value + p3.value + p4.value);
    res.closed_form = 96.0 * std::numbers::ln2 - 12.0 + 4.0 * std::numbers::pi * std::numbers::pi;
    res.quadrature_error =
        24.0 * (p1.error_bound + p2.error_bound + p3.error_bound + p4.error_bound + 2e-9);
    return res;
}

ConstantBreakdown peyre_assembly(i64 prime_cutoff, const QuadratureSpec& spec) {
    if (prime_cutoff < 2) throw std::invalid_argument("prime cutoff must be >= 2");
    ConstantBreakdown out;
    out.prime_cutoff = prime_cutoff;
    out.alpha = alpha_invariant();

    auto mu = mu_infinity(spec);
    out.mu_inf_closed = mu.closed_form;
    out.mu_inf_quadrature = mu.quadrature;

    auto c = constant_c(prime_cutoff);
    out.c_value = c.value;
    out.c_tail = c.tail_bound;

    double padic = 1;
    for (i64 p : prime_table().primes) {
        if (p > prime_cutoff) break;
        Rat density = Rat(ipow(p, 3) + 5 * ipow(p, 2) + 5 * p + 1) / rat_pow(Rat(p), 3);
        if (p <= 97) out.mu_p.emplace(p, local_density(p));  // enumeration-backed
        else out.mu_p.emplace(p, density);
        padic *= (rat_pow(Rat(p - 1) / Rat(p), 5) * density).to_double();
    }

    out.tau_h = mu.closed_form * padic;
    out.theta_h = out.alpha.to_double() * out.tau_h;
    out.theorem1_coeff = (std::numbers::pi * std::numbers::pi - 3.0 + 24.0 * std::numbers::ln2) /
                         144.0 * c.value;
    out.reconciliation_delta = std::abs(out.theta_h - out.theorem1_coeff);
    out.shared_tail_bound = out.alpha.to_double() * mu.closed_form * c.tail_bound;
    return out;
}

}  // namespace bicubic
