// Conic machinery in PG(2,q), the three deterministic arc constructions, and
// their critical values.
//
// The conic C is x1^2 = x0 x2. Its points are A_i = (1, i, i^2) for i in F_q
// plus A_inf = (0,0,1). Construction A works on the prefix A_0..A_H (integer
// indices, q an odd prime) extended by two points of l0, the tangent at
// A_inf. Constructions B and C use the power ordering A_bar_d = (1, xi^d,
// xi^{2d}) and extend by points of l1, the bisecant through A_inf and A_0
// (plus P for C).
//
// A critical value is the smallest prefix length whose bisecants, together
// with the fixed seed points, cover a specific target class of points; each
// construction is provably complete once its parameter reaches the critical
// value. Sweeps that exhaust the parameter ceiling report overflow instead
// of a number.
#pragma once

#include "arc.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace pgarc {

// g^d, where g is the primitive element whose powers order the A_bar walk.
// g is the canonical xi except in GF(64), where the reference critical value
// was computed with a different primitive element (see the definition).
felem bar_pow(const Field& f, int64_t d);

// Where the chord A_i A_j meets l0: the point (0,1,b) with b = i+j.
felem chord_l0_b(const Field& f, felem i, felem j);
// The point (1,a,b) on the chord A_i A_j: b = a(i+j) - ij.
felem chord_affine_b(const Field& f, felem i, felem j, felem a);
// Where the chord A_bar_d A_bar_t meets l0: b = g^d + g^t.
felem chord_bar_l0_b(const Field& f, uint32_t d, uint32_t t);
// Where the line from A_bar_d to (1,0,gamma*U) meets l0: b = (g^{2d}+U)/g^d.
felem chord_mixed_l0_b(const Field& f, uint32_t d, felem U);
// Where the chord A_bar_d A_bar_t meets l1: the point (1,0,gamma*g^beta)
// with beta = d+t (mod q-1).
uint32_t chord_bar_l1_exp(const Field& f, uint32_t d, uint32_t t);

Point conic_affine(const Field& f, felem i);       // A_i = (1, i, i^2)
Point conic_bar(const Field& f, uint32_t d);       // A_bar_d = (1, g^d, g^{2d})
std::vector<Point> conic_points(const Plane& pl);  // all q+1, A_i then A_inf

inline Point point_A_inf() { return {0, 0, 1}; }
inline Point point_P() { return {0, 1, 0}; }
inline Line line_l0() { return {1, 0, 0}; }
inline Line line_l1() { return {0, 1, 0}; }

// -1 for odd q, +1 for even q.
felem gamma_of(const Field& f);
// T_H = (0,1,b_H), b_H = 2H+1 when H = floor((q-1)/3), else 2H.
Point point_T(const Field& f, uint32_t H);
Point point_Z(const Field& f);                  // (1, 0, gamma)
Point point_B(const Field& f, uint32_t G);      // (1, 0, gamma*xi^{2G})

enum class Kind { A, B, C };
char kind_letter(Kind k);
Kind kind_from_letter(char c); // throws on anything but A/B/C

// Eligibility of q for each construction family.
bool applicable_A(const Field& f);  // odd prime
bool applicable_B(const Field& f);  // prime power, q != 3 (mod 4)
bool applicable_C(const Field& f);  // prime power, q == 3 (mod 4)

// Valid parameter interval [lo, hi] for the kind at this q.
void parameter_range(Kind k, uint32_t q, uint32_t& lo, uint32_t& hi);

struct ConstructionResult {
    Kind kind;
    uint32_t q = 0;
    uint32_t parameter = 0;   // H, G, or J
    uint32_t param_min = 0, param_max = 0;
    Arc arc;
    bool verified_complete = false;
};

// Arc sizes: H+3, G+3, J+4. Preconditions: q >= 19 odd prime / q >= 32
// with q != 3 mod 4 / q >= 27 with q == 3 mod 4, parameter within
// parameter_range. Violations throw std::invalid_argument. Completeness is
// always re-verified by brute-force coverage, never assumed.
ConstructionResult build_A(std::shared_ptr<const Plane> pl, uint32_t H);
ConstructionResult build_B(std::shared_ptr<const Plane> pl, uint32_t G);
ConstructionResult build_C(std::shared_ptr<const Plane> pl, uint32_t J);

struct CriticalResult {
    bool overflow = false; // sweep exhausted the parameter ceiling
    uint32_t value = 0;    // meaningful only when !overflow
};

// Smallest prefix length covering the target class (see module header).
// critical_H: seed {P}, prefix A_0..A_i, target all (1,a,b) with b != a^2,
//   ceiling (q-1)/2. Requires an odd prime q.
// critical_G: seed {Z}, prefix A_bar_0..A_bar_d, target (1,a,b) with a != 0,
//   b != a^2 plus (0,1,b) with b != 0, ceiling ceil((q-3)/2). q != 3 mod 4.
// critical_J: seed {P, Z}, same target as critical_G, ceiling (q-3)/2.
//   q == 3 mod 4.
CriticalResult critical_H(const Plane& pl);
CriticalResult critical_G(const Plane& pl);
CriticalResult critical_J(const Plane& pl);

struct FamilyRange {
    bool guaranteed = false; // false when the critical value overflows
    uint32_t k_min = 0, k_max = 0;
};

// The interval of complete-arc sizes the family covers at this q.
FamilyRange family_range(Kind k, const Plane& pl);

} // namespace pgarc
