#include "cake/valuation.hpp"

namespace cake {

Valuation::Valuation(std::vector<Rat> breakpoints, std::vector<Rat> masses)
    : bps_(std::move(breakpoints)), masses_(std::move(masses)) {
    if (masses_.size() != bps_.size() + 1)
        throw domain_error("valuation: need one mass per segment");
    Rat prev(0);
    for (const auto& b : bps_) {
        if (b <= prev || b >= Rat(1))
            throw domain_error("valuation: breakpoints must be strictly increasing in (0,1)");
        prev = b;
    }
    Rat sum;
    for (const auto& m : masses_) {
        if (m.sign() < 0) throw domain_error("valuation: negative segment mass");
        sum += m;
    }
    if (sum != Rat(1)) throw domain_error("valuation: masses must sum to exactly 1");
}

Valuation Valuation::uniform_on(const Rat& lo, const Rat& hi) {
    if (lo >= hi) throw domain_error("uniform_on: empty support");
    std::vector<Rat> bps;
    std::vector<Rat> masses;
    if (lo > Rat(0)) { bps.push_back(lo); masses.push_back(Rat(0)); }
    masses.push_back(Rat(1));
    if (hi < Rat(1)) { bps.push_back(hi); masses.push_back(Rat(0)); }
    return Valuation(std::move(bps), std::move(masses));
}

Valuation Valuation::concentrated_on(const PieceSet& support) {
    if (support.empty()) throw domain_error("concentrated_on: empty support");
    Rat total = support.total_length();
    std::vector<Rat> bps;
    std::vector<Rat> masses;
    Rat cursor(0);
    for (const auto& iv : support.intervals()) {
        if (iv.lo > cursor) {
            bps.push_back(iv.lo);
            masses.push_back(Rat(0));
        }
        if (iv.hi < Rat(1)) bps.push_back(iv.hi);
        masses.push_back(iv.length() / total);
        cursor = iv.hi;
    }
    if (cursor < Rat(1)) masses.push_back(Rat(0));
    return Valuation(std::move(bps), std::move(masses));
}

Rat Valuation::edge(std::size_t i) const {
    if (i == 0) return Rat(0);
    if (i <= bps_.size()) return bps_[i - 1];
    return Rat(1);
}

Rat Valuation::density(std::size_t seg) const {
    Rat len = edge(seg + 1) - edge(seg);
    return masses_[seg] / len;
}

Rat Valuation::value(const Interval& iv) const {
    if (iv.lo < Rat(0) || iv.hi > Rat(1))
        throw domain_error("value: interval outside [0,1]");
    Rat sum;
    for (std::size_t s = 0; s < masses_.size(); ++s) {
        Rat a = max(iv.lo, edge(s));
        Rat b = min(iv.hi, edge(s + 1));
        if (a < b) sum += masses_[s] * (b - a) / (edge(s + 1) - edge(s));
    }
    return sum;
}

Rat Valuation::value(const PieceSet& ps) const {
    Rat sum;
    for (const auto& iv : ps.intervals()) sum += value(iv);
    return sum;
}

Rat mark_from(const Valuation& v, const PieceSet& region, const Rat& start, const Rat& target) {
    if (target.sign() < 0) throw domain_error("mark_from: negative target");
    if (target.is_zero()) return start;
    Rat acc;
    for (const auto& piece : region.intervals()) {
        if (piece.hi <= start) continue;
        Rat lo = max(piece.lo, start);
        // walk the valuation segments overlapping [lo, piece.hi)
        for (std::size_t s = 0; s < v.masses_.size(); ++s) {
            Rat a = max(lo, v.edge(s));
            Rat b = min(piece.hi, v.edge(s + 1));
            if (a >= b) continue;
            Rat d = v.density(s);
            Rat chunk = d * (b - a);
            if (acc + chunk >= target) {
                // fires inside this chunk; d > 0 here since chunk >= target - acc > 0
                return a + (target - acc) / d;
            }
            acc += chunk;
        }
    }
    throw infeasible_error("mark_from: target exceeds available value");
}

std::vector<PieceSet> split_equal(const Valuation& v, const PieceSet& region, int m) {
    if (m < 1) throw domain_error("split_equal: m must be >= 1");
    if (m == 1) return {region};
    Rat total = v.value(region);
    Rat share = total / Rat(m);
    std::vector<PieceSet> out;
    Rat cursor = region.empty() ? Rat(0) : region.left_edge();
    for (int k = 1; k < m; ++k) {
        Rat cut = mark_from(v, region, cursor, share);
        out.push_back(region.clip(cursor, cut));
        cursor = cut;
    }
    out.push_back(region.from(cursor));
    return out;
}

} // namespace cake
