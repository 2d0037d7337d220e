// Arcs in PG(2,q) with incremental bisecant-coverage tracking.
//
// The coverage map is a flat boolean array over PointIdx plus a running
// count of covered points. A point is covered once it lies on any line
// through two distinct arc members; marking is saturating, points are never
// removed. Arc members themselves become covered as soon as a bisecant
// passes through them, which the objective function relies on, but
// completeness is judged over non-member points only.
#pragma once

#include "plane.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace pgarc {

// m2(2,q): the size of the largest arc, q+1 for odd q, q+2 for even q.
inline uint32_t max_arc_size(uint32_t q) { return (q % 2 == 0) ? q + 2 : q + 1; }

class Arc {
public:
    explicit Arc(std::shared_ptr<const Plane> pl);

    const Plane& plane() const { return *pl_; }
    const std::shared_ptr<const Plane>& plane_ptr() const { return pl_; }
    uint32_t q() const { return pl_->q(); }

    uint32_t size() const { return (uint32_t)pts_.size(); }
    const std::vector<Point>& points() const { return pts_; }
    const std::vector<PointIdx>& point_indices() const { return idx_; }

    bool contains(PointIdx i) const { return member_[i] != 0; }
    bool contains(const Point& P) const { return contains(pl_->index_of(P)); }

    uint32_t covered_count() const { return covered_count_; }
    bool covered(PointIdx i) const { return covered_[i] != 0; }
    // True iff try_add would accept: not a member and on no bisecant.
    bool addable(PointIdx i) const { return !member_[i] && !covered_[i]; }

    struct AddResult {
        bool added = false;
        // Set on rejection: the violated bisecant and the two members spanning it.
        Line bisecant{};
        Point s1{}, s2{};
    };
    // Appends P and marks every point on every new bisecant (P, s).
    // Throws std::invalid_argument if P is already a member.
    AddResult try_add(const Point& P);

    // covered_count after hypothetically adding P, without mutating the arc.
    // Throws std::invalid_argument unless P is addable.
    uint32_t objective_f(const Point& P) const;

    bool is_complete() const;
    // Non-member points lying on no bisecant, ascending by index.
    std::vector<Point> uncovered_points() const;

private:
    std::shared_ptr<const Plane> pl_;
    std::vector<Point> pts_;
    std::vector<PointIdx> idx_;
    std::vector<uint8_t> member_;
    std::vector<uint8_t> covered_;
    uint32_t covered_count_ = 0;
};

struct VerifyReport {
    bool is_arc = false;
    bool is_complete = false;
    uint32_t size = 0;         // points supplied, including any duplicates
    bool duplicate = false;    // some point occurs twice (fails the arc check)
    bool has_witness = false;  // three collinear members found
    std::array<Point, 3> witness{};
    std::vector<Point> uncovered; // meaningful when is_arc holds
};

// Full re-derivation from the point list, O(k^2 q); never trusts any
// incrementally maintained state.
VerifyReport verify_arc(const Plane& pl, const std::vector<Point>& pts);

} // namespace pgarc
