// Points, lines and incidence in PG(2,q).
//
// Points are homogeneous triples normalized so the leftmost nonzero
// coordinate is 1, which leaves exactly the shapes (1,b,c), (0,1,c), (0,0,1).
// Lines use dual coordinates with the same normalization. The dense index
// maps the q^2+q+1 normalized points onto [0, q^2+q+1) so coverage state can
// live in a flat array.
#pragma once

#include "field.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pgarc {

struct Point {
    felem x0 = 0, x1 = 0, x2 = 0;
    bool operator==(const Point&) const = default;
};

struct Line {
    felem l0 = 0, l1 = 0, l2 = 0;
    bool operator==(const Line&) const = default;
};

using PointIdx = uint32_t;

// "x0:x1:x2" with integer element codes.
std::string point_text(const Point& P);

class Plane {
public:
    explicit Plane(Field f);

    const Field& field() const { return f_; }
    uint32_t q() const { return f_.q(); }
    // Also the number of lines.
    uint32_t num_points() const { return n_; }

    Point normalize(felem x0, felem x1, felem x2) const;
    Line line_normalize(felem l0, felem l1, felem l2) const;

    // P must be normalized (every Point this class hands out is).
    PointIdx index_of(const Point& P) const {
        return index_of_coords(P.x0, P.x1, P.x2);
    }
    Point point_at(PointIdx i) const;

    // Lines share the index layout of points.
    PointIdx line_index(const Line& L) const {
        return index_of_coords(L.l0, L.l1, L.l2);
    }
    Line line_at(PointIdx i) const;

    Line line_through(const Point& P, const Point& Q) const;

    bool incident(const Point& P, const Line& L) const {
        felem s = f_.add(f_.mul(L.l0, P.x0), f_.mul(L.l1, P.x1));
        return f_.add(s, f_.mul(L.l2, P.x2)) == 0;
    }

    bool collinear(const Point& P, const Point& Q, const Point& R) const;

    // The q+1 points of L, ascending by index.
    std::vector<Point> points_on_line(const Line& L) const;
    std::vector<PointIdx> indices_on_line(const Line& L) const;

    // Hot path for coverage marking: visits the q+1 point indices of L in
    // unspecified order, no allocation.
    template <typename F>
    void for_each_point_on_line(const Line& L, F&& fn) const {
        std::array<felem, 3> u, v;
        span_of_line(L, u, v);
        fn(index_of_coords(u[0], u[1], u[2]));
        for (uint32_t lam = 0; lam < f_.q(); ++lam) {
            felem a = f_.add(v[0], f_.mul(lam, u[0]));
            felem b = f_.add(v[1], f_.mul(lam, u[1]));
            felem c = f_.add(v[2], f_.mul(lam, u[2]));
            fn(index_of_coords(a, b, c));
        }
    }

private:
    PointIdx index_of_coords(felem a, felem b, felem c) const {
        if (a != 0) {
            if (a != 1) {
                felem ia = f_.inv(a);
                b = f_.mul(b, ia);
                c = f_.mul(c, ia);
            }
            return (PointIdx)b * f_.q() + c;
        }
        if (b != 0) {
            if (b != 1) c = f_.div(c, b);
            return (PointIdx)f_.q() * f_.q() + c;
        }
        return (PointIdx)f_.q() * f_.q() + f_.q();
    }

    std::array<felem, 3> cross(const std::array<felem, 3>& u,
                               const std::array<felem, 3>& v) const;
    // Two distinct points spanning L, as raw (unnormalized) triples.
    void span_of_line(const Line& L, std::array<felem, 3>& u,
                      std::array<felem, 3>& v) const;

    Field f_;
    uint32_t n_;
};

} // namespace pgarc
