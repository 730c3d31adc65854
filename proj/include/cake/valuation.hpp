#pragma once

#include "cake/pieces.hpp"

#include <vector>

namespace cake {

/// Additive measure on [0,1] with piecewise-constant density.
/// Interior breakpoints are strictly increasing in (0,1); masses has one
/// entry per segment, each >= 0, summing to exactly 1.
class Valuation {
public:
    Valuation(std::vector<Rat> breakpoints, std::vector<Rat> masses);

    /// Uniform mass 1 on [lo, hi), zero elsewhere.
    static Valuation uniform_on(const Rat& lo, const Rat& hi);

    /// Mass 1 spread over `support` proportionally to length, zero elsewhere.
    /// Throws domain_error when support is empty. Houses the Theorem-1 style
    /// adversarial construction.
    static Valuation concentrated_on(const PieceSet& support);

    const std::vector<Rat>& breakpoints() const { return bps_; }
    const std::vector<Rat>& masses() const { return masses_; }

    /// Measure of [iv.lo, iv.hi). Throws domain_error outside [0,1].
    Rat value(const Interval& iv) const;

    /// Sum of member values.
    Rat value(const PieceSet& ps) const;

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.bps_ == b.bps_ && a.masses_ == b.masses_;
    }

private:
    // segment i spans [edge(i), edge(i+1)) where edges are 0, bps..., 1
    Rat edge(std::size_t i) const;
    Rat density(std::size_t seg) const;

    std::vector<Rat> bps_;
    std::vector<Rat> masses_;

    friend Rat mark_from(const Valuation&, const PieceSet&, const Rat&, const Rat&);
};

/// Leftmost x such that v(region ∩ [start, x)) == target; the sweep skips
/// gaps in the region and fires as soon as the target value is reached.
/// Throws infeasible_error when target exceeds the available value.
Rat mark_from(const Valuation& v, const PieceSet& region, const Rat& start, const Rat& target);

/// Splits region into m piece sets, contiguous in sweep order, each worth
/// exactly v(region)/m to the marker. Cut points are leftmost-reaching.
std::vector<PieceSet> split_equal(const Valuation& v, const PieceSet& region, int m);

} // namespace cake
