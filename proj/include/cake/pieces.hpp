#pragma once

#include "cake/rational.hpp"

#include <vector>

namespace cake {

/// Half-open interval [lo, hi) inside the unit cake. lo == hi is the empty interval.
struct Interval {
    Rat lo;
    Rat hi;

    Interval() = default;
    Interval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw domain_error("interval with lo > hi");
    }

    bool empty() const { return lo == hi; }
    Rat length() const { return hi - lo; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Canonical finite union of disjoint half-open intervals: sorted by lo,
/// touching intervals merged, no empty members. Equal sets compare equal
/// member-by-member.
class PieceSet {
public:
    PieceSet() = default;
    explicit PieceSet(std::vector<Interval> ivs) : ivs_(canonicalize(std::move(ivs))) {}
    PieceSet(std::initializer_list<Interval> ivs)
        : ivs_(canonicalize(std::vector<Interval>(ivs))) {}

    static PieceSet unit() { return PieceSet({Interval(Rat(0), Rat(1))}); }

    const std::vector<Interval>& intervals() const { return ivs_; }
    bool empty() const { return ivs_.empty(); }
    std::size_t size() const { return ivs_.size(); }

    Rat total_length() const;

    /// Leftmost point of the set. Requires non-empty.
    Rat left_edge() const {
        if (ivs_.empty()) throw domain_error("left edge of empty piece set");
        return ivs_.front().lo;
    }

    bool contains_point(const Rat& x) const;

    /// True iff every point of `sub` lies in this set.
    bool contains(const PieceSet& sub) const;

    /// This set clipped to [lo, hi).
    PieceSet clip(const Rat& lo, const Rat& hi) const;

    /// This set restricted to points >= x.
    PieceSet from(const Rat& x) const;

    friend PieceSet unite(const PieceSet& a, const PieceSet& b) {
        std::vector<Interval> all = a.ivs_;
        all.insert(all.end(), b.ivs_.begin(), b.ivs_.end());
        return PieceSet(std::move(all));
    }

    friend bool operator==(const PieceSet& a, const PieceSet& b) { return a.ivs_ == b.ivs_; }
    friend bool operator!=(const PieceSet& a, const PieceSet& b) { return !(a.ivs_ == b.ivs_); }

private:
    static std::vector<Interval> canonicalize(std::vector<Interval> ivs);
    std::vector<Interval> ivs_;
};

/// region \ sub. Throws domain_error unless sub is contained in region.
PieceSet complement(const PieceSet& region, const PieceSet& sub);

} // namespace cake
