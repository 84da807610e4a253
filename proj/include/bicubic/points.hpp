// Rational points on the open locus x1*y2*y3 + x2*y1*y3 + x3*y1*y2 = 0,
// x1*x2*x3*y1*y2*y3 != 0, with anticanonical height
//     H(x, y) = max_i x_i^2 * max_j |y_j|,
// counted two independent ways: a direct solve over primitive representatives
// and an enumeration of the auxiliary lattice a1*d1 + a2*d2 + a3*d3 = 0 with
// coprimality side conditions, whose admissible tuples cover each point
// exactly four times.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bicubic/numtheory.hpp"

namespace bicubic {

using Triple = std::array<i64, 3>;

// Primitive representative pair with canonical signs (x1 > 0, y1 > 0).
struct RationalPoint {
    Triple x{};
    Triple y{};

    friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;
};

// Throws std::invalid_argument unless all six coordinates are nonzero, both
// triples are primitive, and the defining equation holds. Sign-canonicalizes.
RationalPoint make_point(Triple x, Triple y);

i64 height(const RationalPoint& p);

// a1*d1 + a2*d2 + a3*d3 = 0, d positive, coprimality system satisfied.
struct TorsorPoint {
    Triple a{};
    Triple d{};
    Triple z{};
};

TorsorPoint make_torsor_point(Triple a, Triple d, Triple z);

// Both formulations of the coprimality constraints, evaluated independently:
//   first:  (a1z1;a2z2;a3z3) = 1 and the nine pairwise d/z conditions
//   second: the nine pairwise d/z conditions, (a1;a2;a3) = 1, (ai;aj;zk) = 1
struct CoprimalityVerdict {
    bool product_form = false;
    bool split_form = false;
};

CoprimalityVerdict coprimality_equivalence(const Triple& a, const Triple& d, const Triple& z);

// x = (a1 z1, a2 z2, a3 z3), y = (d2 d3 z1, d1 d3 z2, d1 d2 z3), canonicalized.
RationalPoint torsor_map(const TorsorPoint& t);

// All torsor tuples (up to the sign action) over a given point; size is 4
// for every point of the open locus.
std::vector<TorsorPoint> torsor_fiber(const RationalPoint& p);

enum class EnumMethod { direct, torsor };

struct EnumerationResult {
    i64 bound = 0;
    i64 count = 0;
    std::optional<std::vector<RationalPoint>> points;  // retained when bound <= retain_cap
    EnumMethod method = EnumMethod::direct;
    i64 raw_tuple_count = 0;  // torsor method only: admissible 9-tuples before /4
};

struct EnumerationOptions {
    i64 retain_cap = 1000;   // keep point lists only up to this bound
    int thread_hint = 1;     // partitioning hint; never changes results
};

EnumerationResult enumerate_direct(i64 bound, const EnumerationOptions& opt = {});
EnumerationResult enumerate_torsor(i64 bound, const EnumerationOptions& opt = {});

// Counts N(B) for every B <= bound in one pass (index B, entry N(B)).
std::vector<i64> count_profile_direct(i64 bound);
std::vector<i64> count_profile_torsor(i64 bound);                // point counts
std::vector<i64> raw_tuple_profile_torsor(i64 bound);            // 9-tuple counts

// Finitely supported test function on nonzero 9-tuples.
struct SupportedFunction {
    struct Entry {
        Triple a, d, z;
        i64 value;
    };
    std::vector<Entry> entries;
};

// Evaluates both sides of the coprimality-to-divisor-sum inversion identity:
// the sum of G over tuples satisfying the coprimality system versus the
// Moebius-weighted divisor sums, truncated exactly at the support magnitude.
struct MoebiusInversionReport {
    i64 lhs = 0;
    i64 rhs = 0;
    bool equal = false;
};

MoebiusInversionReport moebius_inversion_check(const SupportedFunction& g);

// Nested-sum evaluation of the right side over all index 13-tuples up to
// `truncation`, with the divisibility conditions expressed through the
// lcm 3x3-tuple. Exponential in `truncation`; test-scale only.
i64 moebius_inversion_rhs_nested(const SupportedFunction& g, i64 truncation);

// Index tuple of the thirteen-variable divisor sums, with the derived lcm
// 3x3-tuple: alpha[0][k] = [g_i; g_j; h], alpha[1][k] = [b_i; b_j; f_k],
// alpha[2][k] = [c_i; c_j; f_k; g_k] for {i,j,k} = {1,2,3}.
struct MoebiusIndex {
    Triple b{1, 1, 1}, c{1, 1, 1}, f{1, 1, 1}, g{1, 1, 1};
    i64 h = 1;
    std::array<Triple, 3> alpha{};
};

MoebiusIndex make_moebius_index(Triple b, Triple c, Triple f, Triple g, i64 h);

// The lcm 3x3-tuple attached to index vectors b, c, f, g (in N^3) and h.
std::array<Triple, 3> alpha_tuple(const Triple& b, const Triple& c, const Triple& f,
                                  const Triple& g, i64 h);

// CSV dump: x1,x2,x3,y1,y2,y3,height rows sorted by (height, x, y).
std::string point_list_csv(const std::vector<RationalPoint>& pts);

}  // namespace bicubic
