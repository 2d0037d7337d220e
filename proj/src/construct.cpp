#include "construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgarc {

felem chord_l0_b(const Field& f, felem i, felem j) {
    if (i == j) throw std::invalid_argument("chord_l0_b: equal conic indices");
    return f.add(i, j);
}

felem chord_affine_b(const Field& f, felem i, felem j, felem a) {
    if (i == j) throw std::invalid_argument("chord_affine_b: equal conic indices");
    return f.sub(f.mul(a, f.add(i, j)), f.mul(i, j));
}

felem bar_pow(const Field& f, int64_t d) {
    // Generator for the A_bar enumeration. The critical values G_bar/J_bar
    // depend on which primitive element orders the conic walk when q is a
    // proper prime power; the canonical xi reproduces every reference value
    // except GF(64), where G_bar comes out 23/24/25 across the 36 primitive
    // elements. The reference value 24 corresponds to the Conway-polynomial
    // generator (root of x^6 + x^4 + x^3 + x + 1), which is xi^13 in this
    // representation, so GF(64) walks by that element instead.
    if (f.p() == 2 && f.h() == 6) return f.xi_pow(13 * d);
    return f.xi_pow(d);
}

felem chord_bar_l0_b(const Field& f, uint32_t d, uint32_t t) {
    if (d % (f.q() - 1) == t % (f.q() - 1))
        throw std::invalid_argument("chord_bar_l0_b: equal exponents");
    return f.add(bar_pow(f, d), bar_pow(f, t));
}

felem chord_mixed_l0_b(const Field& f, uint32_t d, felem U) {
    return f.div(f.add(bar_pow(f, 2 * (int64_t)d), U), bar_pow(f, d));
}

uint32_t chord_bar_l1_exp(const Field& f, uint32_t d, uint32_t t) {
    if (d % (f.q() - 1) == t % (f.q() - 1))
        throw std::invalid_argument("chord_bar_l1_exp: equal exponents");
    return (d + t) % (f.q() - 1);
}

Point conic_affine(const Field& f, felem i) { return {1, i, f.mul(i, i)}; }

Point conic_bar(const Field& f, uint32_t d) {
    return {1, bar_pow(f, d), bar_pow(f, 2 * (int64_t)d)};
}

std::vector<Point> conic_points(const Plane& pl) {
    const Field& f = pl.field();
    std::vector<Point> pts;
    pts.reserve(f.q() + 1);
    for (felem i = 0; i < f.q(); ++i) pts.push_back(conic_affine(f, i));
    pts.push_back(point_A_inf());
    return pts;
}

felem gamma_of(const Field& f) { return f.q() % 2 == 0 ? 1 : f.neg(1); }

Point point_T(const Field& f, uint32_t H) {
    uint32_t q = f.q();
    uint64_t b = (H == (q - 1) / 3) ? 2ull * H + 1 : 2ull * H;
    return {0, 1, (felem)(b % q)};
}

Point point_Z(const Field& f) { return {1, 0, gamma_of(f)}; }

Point point_B(const Field& f, uint32_t G) {
    return {1, 0, f.mul(gamma_of(f), bar_pow(f, 2 * (int64_t)G))};
}

char kind_letter(Kind k) {
    switch (k) {
    case Kind::A: return 'A';
    case Kind::B: return 'B';
    case Kind::C: return 'C';
    }
    return '?';
}

Kind kind_from_letter(char c) {
    switch (c) {
    case 'A': return Kind::A;
    case 'B': return Kind::B;
    case 'C': return Kind::C;
    }
    throw std::invalid_argument(std::string("unknown construction kind '") + c + "'");
}

bool applicable_A(const Field& f) { return f.h() == 1 && f.q() % 2 == 1; }
bool applicable_B(const Field& f) { return f.q() % 4 != 3; }
bool applicable_C(const Field& f) { return f.q() % 4 == 3; }

void parameter_range(Kind k, uint32_t q, uint32_t& lo, uint32_t& hi) {
    switch (k) {
    case Kind::A:
        lo = (q - 1) / 3;
        hi = (q - 1) / 2;
        return;
    case Kind::B:
        lo = (q - 1) / 3;
        hi = (q - 2) / 2; // ceil((q-3)/2) for both parities
        return;
    case Kind::C:
        lo = (q - 3) / 4;
        hi = (q - 3) / 2;
        return;
    }
}

namespace {

void check_parameter(Kind k, uint32_t q, uint32_t v, const char* name) {
    uint32_t lo, hi;
    parameter_range(k, q, lo, hi);
    if (v < lo || v > hi)
        throw std::invalid_argument(std::string(name) + "=" + std::to_string(v) +
                                    " outside [" + std::to_string(lo) + ", " +
                                    std::to_string(hi) + "] for q=" +
                                    std::to_string(q));
}

void must_add(Arc& arc, const Point& P, const char* what) {
    if (!arc.try_add(P).added)
        throw std::logic_error(std::string(what) +
                               ": construction point rejected, q=" +
                               std::to_string(arc.q()));
}

ConstructionResult finish(Kind kind, uint32_t parameter, Arc arc) {
    ConstructionResult res{kind, arc.q(), parameter, 0, 0, std::move(arc), false};
    parameter_range(kind, res.q, res.param_min, res.param_max);
    res.verified_complete = res.arc.is_complete();
    return res;
}

// Coverage sweep restricted to a target class of points. Seed and conic
// points are fed through add(); done() flips once every target point lies
// on a bisecant of the member set.
struct TargetSweep {
    const Plane& pl;
    std::vector<uint8_t> pending; // 1 = target point not covered yet
    uint32_t remaining = 0;
    std::vector<Point> members;

    explicit TargetSweep(const Plane& p) : pl(p), pending(p.num_points(), 0) {}

    void mark_target(PointIdx i) {
        pending[i] = 1;
        ++remaining;
    }

    void add(const Point& X) {
        for (const Point& s : members) {
            Line L = pl.line_through(X, s);
            pl.for_each_point_on_line(L, [&](PointIdx t) {
                if (pending[t]) {
                    pending[t] = 0;
                    --remaining;
                }
            });
        }
        members.push_back(X);
    }

    bool done() const { return remaining == 0; }
};

// Target for critical_G / critical_J: off-conic (1,a,b) with a != 0, plus
// (0,1,b) with b != 0.
void mark_targets_GJ(const Plane& pl, TargetSweep& sw) {
    const Field& f = pl.field();
    uint32_t q = f.q();
    for (felem a = 1; a < q; ++a) {
        felem sq = f.mul(a, a);
        for (felem b = 0; b < q; ++b)
            if (b != sq) sw.mark_target((PointIdx)a * q + b);
    }
    for (felem b = 1; b < q; ++b) sw.mark_target((PointIdx)q * q + b);
}

} // namespace

ConstructionResult build_A(std::shared_ptr<const Plane> pl, uint32_t H) {
    const Field& f = pl->field();
    if (!applicable_A(f) || f.q() < 19)
        throw std::invalid_argument("build_A: q must be an odd prime >= 19");
    check_parameter(Kind::A, f.q(), H, "H");
    Arc arc(pl);
    for (uint32_t i = 0; i <= H; ++i) must_add(arc, conic_affine(f, i), "build_A");
    must_add(arc, point_P(), "build_A");
    must_add(arc, point_T(f, H), "build_A");
    return finish(Kind::A, H, std::move(arc));
}

ConstructionResult build_B(std::shared_ptr<const Plane> pl, uint32_t G) {
    const Field& f = pl->field();
    if (!applicable_B(f) || f.q() < 32)
        throw std::invalid_argument(
            "build_B: q must be a prime power >= 32 with q != 3 (mod 4)");
    check_parameter(Kind::B, f.q(), G, "G");
    Arc arc(pl);
    for (uint32_t d = 0; d <= G; ++d) must_add(arc, conic_bar(f, d), "build_B");
    must_add(arc, point_Z(f), "build_B");
    must_add(arc, point_B(f, G), "build_B");
    return finish(Kind::B, G, std::move(arc));
}

ConstructionResult build_C(std::shared_ptr<const Plane> pl, uint32_t J) {
    const Field& f = pl->field();
    if (!applicable_C(f) || f.q() < 27)
        throw std::invalid_argument(
            "build_C: q must be a prime power >= 27 with q == 3 (mod 4)");
    check_parameter(Kind::C, f.q(), J, "J");
    Arc arc(pl);
    for (uint32_t d = 0; d <= J; ++d) must_add(arc, conic_bar(f, d), "build_C");
    must_add(arc, point_P(), "build_C");
    must_add(arc, point_Z(f), "build_C");
    must_add(arc, point_B(f, J), "build_C");
    return finish(Kind::C, J, std::move(arc));
}

CriticalResult critical_H(const Plane& pl) {
    const Field& f = pl.field();
    if (!applicable_A(f))
        throw std::invalid_argument("critical_H: q must be an odd prime");
    uint32_t q = f.q();
    TargetSweep sw(pl);
    for (felem a = 0; a < q; ++a) {
        felem sq = f.mul(a, a);
        for (felem b = 0; b < q; ++b)
            if (b != sq) sw.mark_target((PointIdx)a * q + b);
    }
    sw.add(point_P());
    for (uint32_t i = 0; i <= (q - 1) / 2; ++i) {
        sw.add(conic_affine(f, i));
        if (sw.done()) return {false, i};
    }
    return {true, 0};
}

CriticalResult critical_G(const Plane& pl) {
    const Field& f = pl.field();
    if (!applicable_B(f))
        throw std::invalid_argument("critical_G: q == 3 (mod 4) not supported");
    uint32_t q = f.q();
    TargetSweep sw(pl);
    mark_targets_GJ(pl, sw);
    sw.add(point_Z(f));
    for (uint32_t d = 0; d <= (q - 2) / 2; ++d) {
        sw.add(conic_bar(f, d));
        if (sw.done()) return {false, d};
    }
    return {true, 0};
}

CriticalResult critical_J(const Plane& pl) {
    const Field& f = pl.field();
    if (!applicable_C(f))
        throw std::invalid_argument("critical_J: q must be == 3 (mod 4)");
    uint32_t q = f.q();
    TargetSweep sw(pl);
    mark_targets_GJ(pl, sw);
    sw.add(point_P());
    sw.add(point_Z(f));
    for (uint32_t d = 0; d <= (q - 3) / 2; ++d) {
        sw.add(conic_bar(f, d));
        if (sw.done()) return {false, d};
    }
    return {true, 0};
}

FamilyRange family_range(Kind k, const Plane& pl) {
    const Field& f = pl.field();
    uint32_t q = f.q();
    uint32_t lo, hi;
    parameter_range(k, q, lo, hi);

    CriticalResult crit;
    uint32_t extra = 0;
    switch (k) {
    case Kind::A:
        crit = critical_H(pl);
        extra = 3;
        break;
    case Kind::B:
        crit = critical_G(pl);
        extra = 3;
        break;
    case Kind::C:
        crit = critical_J(pl);
        extra = 4;
        break;
    }
    if (crit.overflow) return {false, 0, 0};
    uint32_t pmin = std::max(crit.value, lo);
    return {true, pmin + extra, hi + extra};
}

} // namespace pgarc
