#include "cake/pieces.hpp"

#include <algorithm>

namespace cake {

std::vector<Interval> PieceSet::canonicalize(std::vector<Interval> ivs) {
    std::erase_if(ivs, [](const Interval& iv) { return iv.empty(); });
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo;
    });
    std::vector<Interval> out;
    for (auto& iv : ivs) {
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (iv.lo < out.back().hi && iv.hi > out.back().hi) {
                // proper overlap is tolerated by union semantics
                out.back().hi = iv.hi;
            } else if (iv.lo == out.back().hi) {
                out.back().hi = iv.hi; // merge touching
            } else if (iv.hi > out.back().hi) {
                out.back().hi = iv.hi;
            }
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

Rat PieceSet::total_length() const {
    Rat sum;
    for (const auto& iv : ivs_) sum += iv.length();
    return sum;
}

bool PieceSet::contains_point(const Rat& x) const {
    for (const auto& iv : ivs_) {
        if (x >= iv.lo && x < iv.hi) return true;
        if (iv.lo > x) break;
    }
    return false;
}

bool PieceSet::contains(const PieceSet& sub) const {
    for (const auto& s : sub.ivs_) {
        bool covered = false;
        for (const auto& r : ivs_) {
            if (s.lo >= r.lo && s.hi <= r.hi) { covered = true; break; }
        }
        if (!covered) return false;
    }
    return true;
}

PieceSet PieceSet::clip(const Rat& lo, const Rat& hi) const {
    std::vector<Interval> out;
    for (const auto& iv : ivs_) {
        Rat a = max(iv.lo, lo);
        Rat b = min(iv.hi, hi);
        if (a < b) out.emplace_back(a, b);
    }
    return PieceSet(std::move(out));
}

PieceSet PieceSet::from(const Rat& x) const {
    std::vector<Interval> out;
    for (const auto& iv : ivs_) {
        if (iv.hi <= x) continue;
        out.emplace_back(max(iv.lo, x), iv.hi);
    }
    return PieceSet(std::move(out));
}

PieceSet complement(const PieceSet& region, const PieceSet& sub) {
    if (!region.contains(sub)) throw domain_error("complement: sub not contained in region");
    std::vector<Interval> out;
    for (const auto& r : region.intervals()) {
        Rat cursor = r.lo;
        for (const auto& s : sub.intervals()) {
            if (s.hi <= r.lo || s.lo >= r.hi) continue;
            if (s.lo > cursor) out.emplace_back(cursor, s.lo);
            cursor = max(cursor, s.hi);
        }
        if (cursor < r.hi) out.emplace_back(cursor, r.hi);
    }
    return PieceSet(std::move(out));
}

} // namespace cake
