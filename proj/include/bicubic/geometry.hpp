// Geometric constants of the crepant resolution: the alpha invariant as an
// exact rational polytope volume, point counts over F_p of the resolution
// scheme in P^2 x P^2 x P^2, the archimedean density, and the assembly of
// the Tamagawa-type constant against the counting coefficient.
#pragma once

#include <map>
#include <vector>

#include "bicubic/oscint.hpp"
#include "bicubic/rational.hpp"

namespace bicubic {

// Linear constraints a.w >= b over Q^dim.
struct HalfSpaceSystem {
    int dim = 0;
    std::vector<std::vector<Rat>> normals;
    std::vector<Rat> offsets;
};

// The dual-cone system in w0..w4 sliced by 2w0 - w1 - w2 - w3 + 2w4 = 1,
// with w0 eliminated: nine inequalities in (w1,w2,w3,w4).
HalfSpaceSystem alpha_halfspace_system();

struct Polytope {
    int dim = 0;
    std::vector<std::vector<Rat>> vertices;
};

// Vertex enumeration by exact solves of all dim x dim active subsets.
Polytope enumerate_vertices(const HalfSpaceSystem& sys);

// Exact volume by recursive boundary triangulation from a base vertex.
Rat polytope_volume(const HalfSpaceSystem& sys);

// Volume of the sliced dual cone times the measure normalization 1/2.
// Equals exactly 1/576.
Rat alpha_invariant();

// F_p-points of the scheme x1z1 + x2z2 + x3z3 = 0, y1z1 = y2z2 = y3z3,
// enumerated over projective representatives, stratified by z.
i64 point_count_fp(i64 p);

Rat local_density(i64 p);  // point_count_fp(p) / p^3, exact

struct MuInfinityResult {
    double quadrature = 0;
    double closed_form = 0;       // 96 log 2 - 12 + 4 pi^2
    double quadrature_error = 0;  // envelope
};

// 24 * int_0^inf int_{-1}^1 min(1/|t+u|, 1) dt du / max(u,1), by 2-D
// quadrature with kink splits, against the closed form.
MuInfinityResult mu_infinity(const QuadratureSpec& spec = {});

struct ConstantBreakdown {
    Rat alpha;                       // 1/576
    double mu_inf_closed = 0;
    double mu_inf_quadrature = 0;
    std::map<i64, Rat> mu_p;         // p-adic densities up to the cutoff
    double c_value = 0;              // Euler product C at the cutoff
    double c_tail = 0;
    double tau_h = 0;                // mu_inf * prod ((p-1)/p)^5 mu_p
    double theta_h = 0;              // alpha * tau_h
    double theorem1_coeff = 0;       // (pi^2 - 3 + 24 log 2)/144 * C
    double reconciliation_delta = 0; // |theta_h - theorem1_coeff|
    double shared_tail_bound = 0;
    i64 prime_cutoff = 0;
};

ConstantBreakdown peyre_assembly(i64 prime_cutoff, const QuadratureSpec& spec = {});

}  // namespace bicubic
