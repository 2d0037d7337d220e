#include "plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgarc {

std::string point_text(const Point& P) {
    return std::to_string(P.x0) + ":" + std::to_string(P.x1) + ":" +
           std::to_string(P.x2);
}

Plane::Plane(Field f) : f_(std::move(f)) {
    n_ = f_.q() * f_.q() + f_.q() + 1;
}

Point Plane::normalize(felem x0, felem x1, felem x2) const {
    if (x0 != 0) {
        felem ia = f_.inv(x0);
        return {1, f_.mul(x1, ia), f_.mul(x2, ia)};
    }
    if (x1 != 0) return {0, 1, f_.div(x2, x1)};
    if (x2 != 0) return {0, 0, 1};
    throw std::invalid_argument("normalize: zero triple");
}

Line Plane::line_normalize(felem l0, felem l1, felem l2) const {
    Point p = normalize(l0, l1, l2);
    return {p.x0, p.x1, p.x2};
}

Point Plane::point_at(PointIdx i) const {
    uint32_t q = f_.q();
    if (i < q * q) return {1, i / q, i % q};
    if (i < q * q + q) return {0, 1, i - q * q};
    if (i == q * q + q) return {0, 0, 1};
    throw std::out_of_range("point_at: index " + std::to_string(i));
}

Line Plane::line_at(PointIdx i) const {
    Point p = point_at(i);
    return {p.x0, p.x1, p.x2};
}

std::array<felem, 3> Plane::cross(const std::array<felem, 3>& u,
                                  const std::array<felem, 3>& v) const {
    return {f_.sub(f_.mul(u[1], v[2]), f_.mul(u[2], v[1])),
            f_.sub(f_.mul(u[2], v[0]), f_.mul(u[0], v[2])),
            f_.sub(f_.mul(u[0], v[1]), f_.mul(u[1], v[0]))};
}

Line Plane::line_through(const Point& P, const Point& Q) const {
    auto c = cross({P.x0, P.x1, P.x2}, {Q.x0, Q.x1, Q.x2});
    if (c[0] == 0 && c[1] == 0 && c[2] == 0)
        throw std::invalid_argument("line_through: identical points");
    return line_normalize(c[0], c[1], c[2]);
}

bool Plane::collinear(const Point& P, const Point& Q, const Point& R) const {
    if (P == Q || P == R || Q == R)
        throw std::invalid_argument("collinear: repeated point");
    // 3x3 determinant, expanded along the first row
    felem m0 = f_.sub(f_.mul(Q.x1, R.x2), f_.mul(Q.x2, R.x1));
    felem m1 = f_.sub(f_.mul(Q.x0, R.x2), f_.mul(Q.x2, R.x0));
    felem m2 = f_.sub(f_.mul(Q.x0, R.x1), f_.mul(Q.x1, R.x0));
    felem det = f_.add(f_.sub(f_.mul(P.x0, m0), f_.mul(P.x1, m1)),
                       f_.mul(P.x2, m2));
    return det == 0;
}

void Plane::span_of_line(const Line& L, std::array<felem, 3>& u,
                         std::array<felem, 3>& v) const {
    const std::array<std::array<felem, 3>, 3> cand = {{
        {0, L.l2, f_.neg(L.l1)},
        {f_.neg(L.l2), 0, L.l0},
        {L.l1, f_.neg(L.l0), 0},
    }};
    auto nonzero = [](const std::array<felem, 3>& w) {
        return w[0] != 0 || w[1] != 0 || w[2] != 0;
    };
    size_t ui = 0;
    while (ui < 3 && !nonzero(cand[ui])) ++ui;
    if (ui == 3) throw std::invalid_argument("span_of_line: zero line");
    u = cand[ui];
    for (size_t vi = ui + 1; vi < 3; ++vi) {
        if (nonzero(cand[vi]) && nonzero(cross(u, cand[vi]))) {
            v = cand[vi];
            return;
        }
    }
    throw std::logic_error("span_of_line: no independent second point");
}

std::vector<PointIdx> Plane::indices_on_line(const Line& L) const {
    std::vector<PointIdx> out;
    out.reserve(f_.q() + 1);
    for_each_point_on_line(L, [&](PointIdx i) { out.push_back(i); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Point> Plane::points_on_line(const Line& L) const {
    auto idx = indices_on_line(L);
    std::vector<Point> out;
    out.reserve(idx.size());
    for (PointIdx i : idx) out.push_back(point_at(i));
    return out;
}

} // namespace pgarc
