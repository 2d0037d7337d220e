#include <doctest.h>
#include <algorithm>

#include "construct.hpp"
#include "rng.hpp"

#include <map>
#include <memory>

using namespace pgarc;

namespace {

std::shared_ptr<const Plane> make_plane(uint32_t q) {
    return std::make_shared<Plane>(field_of_order(q));
}

// Brute-force check, independent of the sweep: does every point satisfying
// `target` lie on some line through two members?
template <typename TargetFn>
bool covers_target(const Plane& pl, const std::vector<Point>& members,
                   TargetFn&& target) {
    std::vector<uint8_t> covered(pl.num_points(), 0);
    for (size_t i = 0; i + 1 < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j) {
            Line L = pl.line_through(members[i], members[j]);
            for (PointIdx t = 0; t < pl.num_points(); ++t)
                if (pl.incident(pl.point_at(t), L)) covered[t] = 1;
        }
    for (PointIdx t = 0; t < pl.num_points(); ++t)
        if (target(pl.point_at(t)) && !covered[t]) return false;
    return true;
}

std::vector<Point> sweep_members_H(const Plane& pl, uint32_t upto) {
    std::vector<Point> m{point_P()};
    for (uint32_t i = 0; i <= upto; ++i)
        m.push_back(conic_affine(pl.field(), i));
    return m;
}

std::vector<Point> sweep_members_G(const Plane& pl, uint32_t upto) {
    std::vector<Point> m{point_Z(pl.field())};
    for (uint32_t d = 0; d <= upto; ++d)
        m.push_back(conic_bar(pl.field(), d));
    return m;
}

std::vector<Point> sweep_members_J(const Plane& pl, uint32_t upto) {
    auto m = sweep_members_G(pl, upto);
    m.push_back(point_P());
    return m;
}

} // namespace

TEST_CASE("chord formulas: pinned values in GF(11)") {
    Plane pl(field_of_order(11));
    const Field& f = pl.field();

    CHECK(chord_l0_b(f, 2, 3) == 5);
    CHECK(pl.collinear(conic_affine(f, 2), conic_affine(f, 3), Point{0, 1, 5}));

    CHECK(chord_affine_b(f, 2, 3, 4) == 3); // 4*5 - 6 = 14 = 3 (mod 11)
    CHECK(pl.collinear(conic_affine(f, 2), conic_affine(f, 3), Point{1, 4, 3}));

    CHECK(chord_bar_l1_exp(f, 1, 2) == 3);
    Point l1pt{1, 0, f.mul(gamma_of(f), bar_pow(f, 3))};
    CHECK(pl.collinear(conic_bar(f, 1), conic_bar(f, 2), l1pt));

    CHECK_THROWS_AS(chord_l0_b(f, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(chord_affine_b(f, 4, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(chord_bar_l1_exp(f, 3, 3), std::invalid_argument);
}

TEST_CASE("tangent through P: (1,a,i^2) is collinear with P and A_i") {
    for (uint32_t q : {11u, 19u, 27u}) {
        Plane pl(field_of_order(q));
        const Field& f = pl.field();
        Rng rng(q);
        for (int t = 0; t < 50; ++t) {
            felem i = (felem)rng.below(q);
            felem a = (felem)rng.below(q);
            if (a == i) continue;
            CHECK(pl.collinear(point_P(), conic_affine(f, i),
                               Point{1, a, f.mul(i, i)}));
        }
    }
}

TEST_CASE("chord formulas agree with the determinant test and are unique") {
    for (uint32_t q : {19u, 27u, 32u, 49u, 64u, 81u, 103u}) {
        CAPTURE(q);
        Plane pl(field_of_order(q));
        const Field& f = pl.field();
        Rng rng(3 * q + 5);
        for (int t = 0; t < 60; ++t) {
            felem i = (felem)rng.below(q), j = (felem)rng.below(q);
            felem a = (felem)rng.below(q);
            uint32_t d = (uint32_t)rng.below(q - 1), e = (uint32_t)rng.below(q - 1);
            felem delta = 1 + (felem)rng.below(q - 1); // nonzero perturbation

            if (i != j) {
                felem b = chord_l0_b(f, i, j);
                Point Ai = conic_affine(f, i), Aj = conic_affine(f, j);
                CHECK(pl.collinear(Ai, Aj, Point{0, 1, b}));
                CHECK_FALSE(pl.collinear(Ai, Aj, Point{0, 1, f.add(b, delta)}));

                felem ab = chord_affine_b(f, i, j, a);
                Point X{1, a, ab};
                if (!(X == Ai) && !(X == Aj)) {
                    CHECK(pl.collinear(Ai, Aj, X));
                    Point Y{1, a, f.add(ab, delta)};
                    if (!(Y == Ai) && !(Y == Aj))
                        CHECK_FALSE(pl.collinear(Ai, Aj, Y));
                }
            }
            if (d != e) {
                felem b = chord_bar_l0_b(f, d, e);
                Point Ad = conic_bar(f, d), Ae = conic_bar(f, e);
                CHECK(pl.collinear(Ad, Ae, Point{0, 1, b}));
                CHECK_FALSE(pl.collinear(Ad, Ae, Point{0, 1, f.add(b, delta)}));

                uint32_t beta = chord_bar_l1_exp(f, d, e);
                felem g = gamma_of(f);
                Point W{1, 0, f.mul(g, bar_pow(f, beta))};
                CHECK(pl.collinear(Ad, Ae, W));
            }
            // mixed chord: line from A_bar_d to (1,0,gamma*U) meets l0
            felem U = 1 + (felem)rng.below(q - 1);
            felem g = gamma_of(f);
            Point S{1, 0, f.mul(g, U)};
            Point Ad = conic_bar(f, d);
            felem b = chord_mixed_l0_b(f, d, U);
            Point X{0, 1, b};
            CHECK(pl.collinear(Ad, S, X));
            CHECK_FALSE(pl.collinear(Ad, S, Point{0, 1, f.add(b, delta)}));
        }
    }
}

TEST_CASE("conic points satisfy x1^2 = x0 x2 and count q+1") {
    for (uint32_t q : {7u, 8u, 9u, 19u, 32u}) {
        Plane pl(field_of_order(q));
        const Field& f = pl.field();
        auto pts = conic_points(pl);
        CHECK(pts.size() == q + 1);
        for (const Point& P : pts)
            CHECK(f.mul(P.x1, P.x1) == f.mul(P.x0, P.x2));
        // A_bar_d enumerates exactly the affine conic points with nonzero x1
        for (uint32_t d = 0; d + 1 < q; ++d) {
            Point Ad = conic_bar(f, d);
            CHECK(f.mul(Ad.x1, Ad.x1) == f.mul(Ad.x0, Ad.x2));
            CHECK(Ad.x1 != 0);
        }
    }
}

TEST_CASE("special points sit on their lines, off the conic") {
    for (uint32_t q : {19u, 32u, 27u}) {
        Plane pl(field_of_order(q));
        const Field& f = pl.field();
        uint32_t lo, hi;

        if (applicable_A(f)) {
            parameter_range(Kind::A, q, lo, hi);
            CHECK(pl.incident(point_P(), line_l0()));
            for (uint32_t H = lo; H <= hi; ++H) {
                Point T = point_T(f, H);
                CHECK(pl.incident(T, line_l0()));
                CHECK(f.mul(T.x1, T.x1) != f.mul(T.x0, T.x2));
            }
        }
        uint32_t G = (q - 1) / 3;
        Point Z = point_Z(f), B = point_B(f, G);
        CHECK(pl.incident(Z, line_l1()));
        CHECK(pl.incident(B, line_l1()));
        CHECK(f.mul(Z.x1, Z.x1) != f.mul(Z.x0, Z.x2));
        CHECK(f.mul(B.x1, B.x1) != f.mul(B.x0, B.x2));
    }
    // b_H switches form exactly at the lower end: q=19, H=6=floor(18/3)
    Field f19(19, 1);
    CHECK(point_T(f19, 6) == Point{0, 1, 13});  // 2H+1
    CHECK(point_T(f19, 7) == Point{0, 1, 14});  // 2H
}

TEST_CASE("critical values match the published table") {
    const std::map<uint32_t, uint32_t> Hbar = {
        {19, 9},  {23, 11}, {29, 13}, {31, 14}, {37, 16}, {41, 16},
        {43, 19}, {47, 18}, {53, 20}, {59, 23}, {61, 22}, {67, 24},
        {71, 24}, {79, 29}, {83, 29}, {89, 32}, {107, 36}};
    const std::map<uint32_t, uint32_t> Gbar = {
        {32, 15}, {37, 16}, {41, 19}, {49, 18}, {53, 19},  {61, 22},
        {64, 24}, {73, 27}, {81, 29}, {97, 33}, {101, 35}, {125, 43}};
    const std::map<uint32_t, uint32_t> Jbar = {
        {27, 12},  {31, 14},  {43, 16},  {47, 18},  {59, 24},  {67, 23},
        {71, 25},  {79, 27},  {83, 29},  {103, 34}, {107, 30}, {127, 39},
        {131, 38}, {139, 38}, {151, 42}, {163, 41}, {167, 42}, {179, 62},
        {191, 49}, {211, 54}, {223, 60}, {343, 86}};

    for (auto [q, expect] : Hbar) {
        CAPTURE(q);
        auto r = critical_H(*make_plane(q));
        REQUIRE_FALSE(r.overflow);
        CHECK(r.value == expect);
    }
    for (auto [q, expect] : Gbar) {
        CAPTURE(q);
        auto r = critical_G(*make_plane(q));
        REQUIRE_FALSE(r.overflow);
        CHECK(r.value == expect);
    }
    for (auto [q, expect] : Jbar) {
        CAPTURE(q);
        auto r = critical_J(*make_plane(q));
        REQUIRE_FALSE(r.overflow);
        CHECK(r.value == expect);
    }
}

TEST_CASE("critical sweeps overflow below the viability threshold") {
    for (uint32_t q : {5u, 7u, 11u, 13u, 17u}) {
        CAPTURE(q);
        CHECK(critical_H(*make_plane(q)).overflow);
    }
    for (uint32_t q : {8u, 9u, 13u, 16u, 17u, 25u, 29u}) {
        CAPTURE(q);
        CHECK(critical_G(*make_plane(q)).overflow);
    }
    for (uint32_t q : {7u, 11u, 19u, 23u}) {
        CAPTURE(q);
        CHECK(critical_J(*make_plane(q)).overflow);
    }
    // wrong residue class / composite q for A
    CHECK_THROWS_AS(critical_H(*make_plane(9)), std::invalid_argument);
    CHECK_THROWS_AS(critical_G(*make_plane(27)), std::invalid_argument);
    CHECK_THROWS_AS(critical_J(*make_plane(29)), std::invalid_argument);
}

TEST_CASE("critical values are minimal: brute-force recheck") {
    SUBCASE("H at q=19, 23") {
        for (uint32_t q : {19u, 23u}) {
            CAPTURE(q);
            auto pl = make_plane(q);
            const Field& f = pl->field();
            uint32_t m = critical_H(*pl).value;
            auto target = [&](const Point& P) {
                return P.x0 == 1 && P.x2 != f.mul(P.x1, P.x1);
            };
            CHECK(covers_target(*pl, sweep_members_H(*pl, m), target));
            CHECK_FALSE(covers_target(*pl, sweep_members_H(*pl, m - 1), target));
        }
    }
    SUBCASE("G at q=32, 37") {
        for (uint32_t q : {32u, 37u}) {
            CAPTURE(q);
            auto pl = make_plane(q);
            const Field& f = pl->field();
            uint32_t m = critical_G(*pl).value;
            auto target = [&](const Point& P) {
                if (P.x0 == 1)
                    return P.x1 != 0 && P.x2 != f.mul(P.x1, P.x1);
                return P.x0 == 0 && P.x1 == 1 && P.x2 != 0;
            };
            CHECK(covers_target(*pl, sweep_members_G(*pl, m), target));
            CHECK_FALSE(covers_target(*pl, sweep_members_G(*pl, m - 1), target));
        }
    }
    SUBCASE("J at q=27, 31") {
        for (uint32_t q : {27u, 31u}) {
            CAPTURE(q);
            auto pl = make_plane(q);
            const Field& f = pl->field();
            uint32_t m = critical_J(*pl).value;
            auto target = [&](const Point& P) {
                if (P.x0 == 1)
                    return P.x1 != 0 && P.x2 != f.mul(P.x1, P.x1);
                return P.x0 == 0 && P.x1 == 1 && P.x2 != 0;
            };
            CHECK(covers_target(*pl, sweep_members_J(*pl, m), target));
            CHECK_FALSE(covers_target(*pl, sweep_members_J(*pl, m - 1), target));
        }
    }
}

TEST_CASE("constructions produce verified arcs of the stated size") {
    SUBCASE("A: q=109") {
        auto pl = make_plane(109);
        auto r36 = build_A(pl, 36);
        CHECK(r36.arc.size() == 39);
        CHECK(r36.verified_complete);
        auto rep = verify_arc(*pl, r36.arc.points());
        CHECK(rep.is_arc);
        CHECK(rep.is_complete);

        auto r54 = build_A(pl, 54);
        CHECK(r54.arc.size() == 57); // (q+5)/2
        CHECK(r54.verified_complete);
    }
    SUBCASE("B: q=32 and q=128") {
        auto r15 = build_B(make_plane(32), 15);
        CHECK(r15.arc.size() == 18);
        CHECK(r15.verified_complete);

        auto r42 = build_B(make_plane(128), 42);
        CHECK(r42.arc.size() == 45); // floor((q+8)/3)
        CHECK(r42.verified_complete);
    }
    SUBCASE("C: q=347 and q=27") {
        auto r86 = build_C(make_plane(347), 86);
        CHECK(r86.arc.size() == 90); // (q+13)/4
        CHECK(r86.verified_complete);

        auto r12 = build_C(make_plane(27), 12);
        CHECK(r12.arc.size() == 16);
        CHECK(r12.verified_complete);
    }
    SUBCASE("precondition errors") {
        CHECK_THROWS_AS(build_A(make_plane(9), 2), std::invalid_argument);
        CHECK_THROWS_AS(build_A(make_plane(13), 4), std::invalid_argument);
        CHECK_THROWS_AS(build_A(make_plane(109), 35), std::invalid_argument);
        CHECK_THROWS_AS(build_A(make_plane(109), 55), std::invalid_argument);
        CHECK_THROWS_AS(build_B(make_plane(31), 10), std::invalid_argument);
        CHECK_THROWS_AS(build_B(make_plane(29), 9), std::invalid_argument);
        CHECK_THROWS_AS(build_B(make_plane(32), 16), std::invalid_argument);
        CHECK_THROWS_AS(build_C(make_plane(29), 6), std::invalid_argument);
        CHECK_THROWS_AS(build_C(make_plane(27), 13), std::invalid_argument);
    }
}

TEST_CASE("every in-range parameter yields an arc (spot q values)") {
    for (uint32_t q : {19u, 23u, 29u}) {
        CAPTURE(q);
        auto pl = make_plane(q);
        uint32_t lo, hi;
        parameter_range(Kind::A, q, lo, hi);
        for (uint32_t H = lo; H <= hi; ++H) {
            auto r = build_A(pl, H);
            CHECK(r.arc.size() == H + 3);
            CHECK(verify_arc(*pl, r.arc.points()).is_arc);
        }
    }
    {
        auto pl = make_plane(32);
        uint32_t lo, hi;
        parameter_range(Kind::B, 32, lo, hi);
        for (uint32_t G = lo; G <= hi; ++G)
            CHECK(verify_arc(*pl, build_B(pl, G).arc.points()).is_arc);
    }
    {
        auto pl = make_plane(27);
        uint32_t lo, hi;
        parameter_range(Kind::C, 27, lo, hi);
        for (uint32_t J = lo; J <= hi; ++J)
            CHECK(verify_arc(*pl, build_C(pl, J).arc.points()).is_arc);
    }
}

TEST_CASE("P avoids all bisecants of the bar-conic prefix") {
    // For every q: P=(0,1,0) lies on no bisecant of the prefix A_bar_0..A_bar_G.
    // For q == 3 (mod 4) the same holds with Z and B_J added.
    for (uint32_t q : {32u, 49u, 64u, 81u}) {
        CAPTURE(q);
        auto pl = make_plane(q);
        uint32_t lo, hi;
        parameter_range(Kind::B, q, lo, hi);
        Arc prefix(pl);
        for (uint32_t d = 0; d <= hi; ++d)
            REQUIRE(prefix.try_add(conic_bar(pl->field(), d)).added);
        CHECK(prefix.addable(pl->index_of(point_P())));
    }
    for (uint32_t q : {27u, 31u, 43u}) {
        CAPTURE(q);
        auto pl = make_plane(q);
        const Field& f = pl->field();
        uint32_t lo, hi;
        parameter_range(Kind::C, q, lo, hi);
        for (uint32_t J : {lo, hi}) {
            Arc set(pl);
            for (uint32_t d = 0; d <= J; ++d)
                REQUIRE(set.try_add(conic_bar(f, d)).added);
            REQUIRE(set.try_add(point_Z(f)).added);
            REQUIRE(set.try_add(point_B(f, J)).added);
            CHECK(set.addable(pl->index_of(point_P())));
        }
    }
}

TEST_CASE("construction coverage: the guaranteed point classes lie on bisecants") {
    // A: all of l0 and C minus the prefix lie on bisecants of the arc.
    for (uint32_t q : {19u, 23u}) {
        CAPTURE(q);
        auto pl = make_plane(q);
        uint32_t lo, hi;
        parameter_range(Kind::A, q, lo, hi);
        for (uint32_t H : {lo, hi}) {
            auto r = build_A(pl, H);
            for (const Point& X : pl->points_on_line(line_l0()))
                if (!r.arc.contains(X))
                    CHECK(r.arc.covered(pl->index_of(X)));
            for (const Point& X : conic_points(*pl))
                if (!r.arc.contains(X))
                    CHECK(r.arc.covered(pl->index_of(X)));
        }
    }
    // B: {P}, all of l1, and C minus the prefix.
    for (uint32_t q : {32u, 37u}) {
        CAPTURE(q);
        auto pl = make_plane(q);
        uint32_t lo, hi;
        parameter_range(Kind::B, q, lo, hi);
        for (uint32_t G : {lo, hi}) {
            auto r = build_B(pl, G);
            CHECK(r.arc.covered(pl->index_of(point_P())));
            for (const Point& X : pl->points_on_line(line_l1()))
                if (!r.arc.contains(X))
                    CHECK(r.arc.covered(pl->index_of(X)));
            for (const Point& X : conic_points(*pl))
                if (!r.arc.contains(X))
                    CHECK(r.arc.covered(pl->index_of(X)));
        }
    }
    // C: all of l1 and C minus the prefix.
    for (uint32_t q : {27u, 31u}) {
        CAPTURE(q);
        auto pl = make_plane(q);
        uint32_t lo, hi;
        parameter_range(Kind::C, q, lo, hi);
        for (uint32_t J : {lo, hi}) {
            auto r = build_C(pl, J);
            for (const Point& X : pl->points_on_line(line_l1()))
                if (!r.arc.contains(X))
                    CHECK(r.arc.covered(pl->index_of(X)));
            for (const Point& X : conic_points(*pl))
                if (!r.arc.contains(X))
                    CHECK(r.arc.covered(pl->index_of(X)));
        }
    }
}

TEST_CASE("family_range pins the published size intervals") {
    {
        auto fr = family_range(Kind::A, *make_plane(109));
        REQUIRE(fr.guaranteed);
        CHECK(fr.k_min == 39);
        CHECK(fr.k_max == 57);
    }
    {
        auto fr = family_range(Kind::B, *make_plane(128));
        REQUIRE(fr.guaranteed);
        CHECK(fr.k_min == 45);
        CHECK(fr.k_max == 66);
    }
    {
        auto fr = family_range(Kind::C, *make_plane(347));
        REQUIRE(fr.guaranteed);
        CHECK(fr.k_min == 90);
        CHECK(fr.k_max == 176);
    }
    {
        // q=32: G_bar = 15 > floor(31/3) = 10, so k_min = 15 + 3
        auto fr = family_range(Kind::B, *make_plane(32));
        REQUIRE(fr.guaranteed);
        CHECK(fr.k_min == 18);
        CHECK(fr.k_max == 18); // ceil((32-3)/2) + 3
    }
    CHECK_FALSE(family_range(Kind::A, *make_plane(13)).guaranteed);
    CHECK_FALSE(family_range(Kind::B, *make_plane(29)).guaranteed);
    CHECK_FALSE(family_range(Kind::C, *make_plane(23)).guaranteed);
    CHECK_THROWS_AS(family_range(Kind::A, *make_plane(25)), std::invalid_argument);
}

TEST_CASE("completeness holds across the guaranteed parameter interval") {
    for (uint32_t q : {19u, 29u, 31u}) {
        CAPTURE(q);
        auto pl = make_plane(q);
        auto crit = critical_H(*pl);
        REQUIRE_FALSE(crit.overflow);
        uint32_t lo, hi;
        parameter_range(Kind::A, q, lo, hi);
        for (uint32_t H = std::max(crit.value, lo); H <= hi; ++H) {
            auto r = build_A(pl, H);
            CHECK(r.verified_complete);
            CHECK(verify_arc(*pl, r.arc.points()).is_complete);
        }
    }
}
