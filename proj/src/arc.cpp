#include "arc.hpp"

#include <stdexcept>

namespace pgarc {

Arc::Arc(std::shared_ptr<const Plane> pl) : pl_(std::move(pl)) {
    member_.assign(pl_->num_points(), 0);
    covered_.assign(pl_->num_points(), 0);
}

Arc::AddResult Arc::try_add(const Point& P) {
    PointIdx pi = pl_->index_of(P);
    if (member_[pi]) throw std::invalid_argument("try_add: duplicate point");

    AddResult res;
    if (covered_[pi]) {
        // P sits on some bisecant; find one for the report.
        for (size_t i = 0; i + 1 < pts_.size(); ++i) {
            for (size_t j = i + 1; j < pts_.size(); ++j) {
                Line L = pl_->line_through(pts_[i], pts_[j]);
                if (pl_->incident(P, L)) {
                    res.bisecant = L;
                    res.s1 = pts_[i];
                    res.s2 = pts_[j];
                    return res;
                }
            }
        }
        return res;
    }

    for (const Point& s : pts_) {
        Line L = pl_->line_through(P, s);
        pl_->for_each_point_on_line(L, [&](PointIdx i) {
            if (!covered_[i]) {
                covered_[i] = 1;
                ++covered_count_;
            }
        });
    }
    pts_.push_back(P);
    idx_.push_back(pi);
    member_[pi] = 1;
    res.added = true;
    return res;
}

uint32_t Arc::objective_f(const Point& P) const {
    PointIdx pi = pl_->index_of(P);
    if (member_[pi] || covered_[pi])
        throw std::invalid_argument("objective_f: point violates the arc property");

    // The new bisecants (P, s) pairwise meet only at P, so no point other
    // than P is seen twice. P itself is uncovered and appears on all k lines.
    uint32_t fresh = 0;
    for (const Point& s : pts_) {
        Line L = pl_->line_through(P, s);
        pl_->for_each_point_on_line(L, [&](PointIdx i) {
            if (!covered_[i]) ++fresh;
        });
    }
    if (!pts_.empty()) fresh -= (uint32_t)pts_.size() - 1;
    return covered_count_ + fresh;
}

bool Arc::is_complete() const {
    for (uint32_t i = 0; i < pl_->num_points(); ++i)
        if (!member_[i] && !covered_[i]) return false;
    return true;
}

std::vector<Point> Arc::uncovered_points() const {
    std::vector<Point> out;
    for (uint32_t i = 0; i < pl_->num_points(); ++i)
        if (!member_[i] && !covered_[i]) out.push_back(pl_->point_at(i));
    return out;
}

VerifyReport verify_arc(const Plane& pl, const std::vector<Point>& pts) {
    VerifyReport rep;
    rep.size = (uint32_t)pts.size();

    std::vector<uint8_t> member(pl.num_points(), 0);
    for (const Point& P : pts) {
        PointIdx i = pl.index_of(P);
        if (member[i]) {
            rep.duplicate = true;
            return rep;
        }
        member[i] = 1;
    }

    std::vector<uint8_t> covered(pl.num_points(), 0);
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            Line L = pl.line_through(pts[i], pts[j]);
            uint32_t members_on_line = 0;
            pl.for_each_point_on_line(L, [&](PointIdx t) {
                covered[t] = 1;
                members_on_line += member[t];
            });
            if (members_on_line > 2) {
                rep.has_witness = true;
                rep.witness[0] = pts[i];
                rep.witness[1] = pts[j];
                for (const Point& R : pts) {
                    PointIdx ri = pl.index_of(R);
                    if (ri != pl.index_of(pts[i]) && ri != pl.index_of(pts[j]) &&
                        pl.incident(R, L)) {
                        rep.witness[2] = R;
                        break;
                    }
                }
                return rep;
            }
        }
    }

    rep.is_arc = true;
    rep.is_complete = true;
    for (uint32_t i = 0; i < pl.num_points(); ++i) {
        if (!member[i] && !covered[i]) {
            rep.is_complete = false;
            rep.uncovered.push_back(pl.point_at(i));
        }
    }
    return rep;
}

} // namespace pgarc
