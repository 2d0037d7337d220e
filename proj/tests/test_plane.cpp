#include <doctest.h>

#include "plane.hpp"
#include "rng.hpp"

#include <algorithm>
#include <memory>
#include <set>

using namespace pgarc;

namespace {

Plane make_plane(uint32_t q) { return Plane(field_of_order(q)); }

} // namespace

TEST_CASE("normalize produces the three left-normalized shapes") {
    Plane pl = make_plane(7);
    CHECK(pl.normalize(3, 6, 1) == Point{1, 2, 5}); // scale by 3^-1 = 5
    CHECK(pl.normalize(0, 0, 4) == Point{0, 0, 1});
    CHECK(pl.normalize(0, 3, 5) == Point{0, 1, 4});
    CHECK(pl.normalize(1, 2, 5) == Point{1, 2, 5});
    CHECK_THROWS_AS(pl.normalize(0, 0, 0), std::invalid_argument);
}

TEST_CASE("point index is a bijection") {
    for (uint32_t q : {2u, 3u, 4u, 7u, 8u, 9u}) {
        CAPTURE(q);
        Plane pl = make_plane(q);
        CHECK(pl.num_points() == q * q + q + 1);
        for (PointIdx i = 0; i < pl.num_points(); ++i) {
            Point P = pl.point_at(i);
            CHECK(pl.index_of(P) == i);
            // the stored point is normalized
            Point N = pl.normalize(P.x0, P.x1, P.x2);
            CHECK(N == P);
        }
        CHECK_THROWS_AS(pl.point_at(pl.num_points()), std::out_of_range);
    }
}

TEST_CASE("line_through pinned cases") {
    Plane pl = make_plane(7);
    Point e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1};
    CHECK(pl.line_through(e0, e1) == Line{0, 0, 1});
    CHECK(pl.line_through(e1, e2) == Line{1, 0, 0}); // the line x0 = 0
    CHECK_THROWS_AS(pl.line_through(e1, e1), std::invalid_argument);

    // both endpoints satisfy the line equation
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Point P = pl.point_at((PointIdx)rng.below(pl.num_points()));
        Point Q = pl.point_at((PointIdx)rng.below(pl.num_points()));
        if (P == Q) continue;
        Line L = pl.line_through(P, Q);
        CHECK(pl.incident(P, L));
        CHECK(pl.incident(Q, L));
    }
}

TEST_CASE("points_on_line: size, order, membership") {
    SUBCASE("PG(2,2) line x0=0") {
        Plane pl = make_plane(2);
        auto pts = pl.points_on_line(Line{1, 0, 0});
        REQUIRE(pts.size() == 3);
        std::set<std::string> got;
        for (const auto& P : pts) got.insert(point_text(P));
        CHECK(got == std::set<std::string>{"0:0:1", "0:1:0", "0:1:1"});
    }
    SUBCASE("PG(2,3) line x2=0") {
        Plane pl = make_plane(3);
        auto pts = pl.points_on_line(Line{0, 0, 1});
        REQUIRE(pts.size() == 4);
        for (const auto& P : pts) CHECK(P.x2 == 0);
    }
    SUBCASE("every line has q+1 distinct points, ascending by index") {
        for (uint32_t q : {7u, 8u, 9u}) {
            CAPTURE(q);
            Plane pl = make_plane(q);
            for (PointIdx li = 0; li < pl.num_points(); ++li) {
                Line L = pl.line_at(li);
                auto pts = pl.points_on_line(L);
                REQUIRE(pts.size() == q + 1);
                PointIdx prev = 0;
                for (size_t k = 0; k < pts.size(); ++k) {
                    CHECK(pl.incident(pts[k], L));
                    PointIdx idx = pl.index_of(pts[k]);
                    if (k > 0) CHECK(idx > prev);
                    prev = idx;
                }
            }
        }
    }
}

TEST_CASE("collinear pinned cases in GF(11)") {
    Plane pl = make_plane(11);
    Point A2{1, 2, 4}, A3{1, 3, 9};
    CHECK(pl.collinear(A2, A3, Point{0, 1, 5}));
    CHECK_FALSE(pl.collinear(A2, A3, Point{0, 1, 6}));
    CHECK_FALSE(pl.collinear(Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}));
    CHECK_THROWS_AS(pl.collinear(A2, A2, A3), std::invalid_argument);
}

TEST_CASE("collinear agrees with line membership") {
    for (uint32_t q : {7u, 9u, 13u}) {
        CAPTURE(q);
        Plane pl = make_plane(q);
        Rng rng(q);
        for (int t = 0; t < 300; ++t) {
            Point P = pl.point_at((PointIdx)rng.below(pl.num_points()));
            Point Q = pl.point_at((PointIdx)rng.below(pl.num_points()));
            Point R = pl.point_at((PointIdx)rng.below(pl.num_points()));
            if (P == Q || P == R || Q == R) continue;
            auto on = pl.points_on_line(pl.line_through(P, Q));
            bool member = std::find(on.begin(), on.end(), R) != on.end();
            CHECK(pl.collinear(P, Q, R) == member);
        }
    }
}

TEST_CASE("incidence structure axioms") {
    for (uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
        CAPTURE(q);
        Plane pl = make_plane(q);
        uint32_t n = pl.num_points();
        // exactly one line through every pair of distinct points
        for (PointIdx i = 0; i < n; ++i) {
            Point P = pl.point_at(i);
            for (PointIdx j = i + 1; j < n; ++j) {
                Point Q = pl.point_at(j);
                uint32_t count = 0;
                for (PointIdx li = 0; li < n; ++li) {
                    Line L = pl.line_at(li);
                    if (pl.incident(P, L) && pl.incident(Q, L)) ++count;
                }
                CHECK(count == 1);
            }
        }
        // dual: every pair of distinct lines meets in exactly one point
        for (PointIdx li = 0; li < n; ++li) {
            Line L = pl.line_at(li);
            for (PointIdx mi = li + 1; mi < n; ++mi) {
                Line M = pl.line_at(mi);
                uint32_t count = 0;
                for (PointIdx i = 0; i < n; ++i) {
                    Point P = pl.point_at(i);
                    if (pl.incident(P, L) && pl.incident(P, M)) ++count;
                }
                CHECK(count == 1);
            }
        }
    }
}

TEST_CASE("point text form") {
    CHECK(point_text(Point{1, 0, 12}) == "1:0:12");
    CHECK(point_text(Point{0, 1, 3}) == "0:1:3");
}
