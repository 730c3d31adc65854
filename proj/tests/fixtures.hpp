#pragma once

#include "cake/trace.hpp"

// Hand-checked instances reused across the test binaries.

namespace fixtures {

using cake::Instance;
using cake::Rat;
using cake::Valuation;

// Three agents with uniform block preferences: [1/2,1], [1/3,1], [0,3/4].
inline Instance three_blocks() {
    return {{Valuation::uniform_on(Rat(1, 2), Rat(1)),
             Valuation::uniform_on(Rat(1, 3), Rat(1)),
             Valuation::uniform_on(Rat(0), Rat(3, 4))}};
}

// Four agents whose default run is ([0,1/4],[1/4,1/2],[1/2,3/4],[3/4,1])
// under every online procedure, yet the outcome fails proportionality,
// envy-freeness, equitability and permutation-Pareto optimality.
inline Instance four_agent_counterexample() {
    return {{
        Valuation({Rat(1, 4), Rat(3, 4)}, {Rat(1, 4), Rat(1, 12), Rat(2, 3)}),
        Valuation({Rat(1, 4), Rat(1, 2), Rat(5, 8)}, {Rat(0), Rat(1, 3), Rat(2, 3), Rat(0)}),
        Valuation({Rat(1, 4), Rat(1, 2), Rat(5, 8), Rat(3, 4)},
                  {Rat(1, 2), Rat(0), Rat(1, 12), Rat(1, 6), Rat(1, 4)}),
        Valuation({Rat(1, 4), Rat(1, 2), Rat(3, 4)},
                  {Rat(0), Rat(3, 4), Rat(1, 12), Rat(1, 6)}),
    }};
}

// Three agents where arriving earlier hurts agent 3 in the moving knife.
inline Instance knife_order_instance() {
    return {{
        Valuation::uniform_on(Rat(0), Rat(1)),
        Valuation({Rat(1, 3)}, {Rat(0), Rat(1)}),
        Valuation({Rat(1, 6), Rat(2, 3)}, {Rat(1, 3), Rat(0), Rat(2, 3)}),
    }};
}

// Three agents where arriving earlier hurts agent 3 in mark-and-choose.
inline Instance mark_order_instance() {
    return {{
        Valuation::uniform_on(Rat(0), Rat(1)),
        Valuation({Rat(1, 3), Rat(2, 3), Rat(5, 6)}, {Rat(0), Rat(1, 2), Rat(1, 4), Rat(1, 4)}),
        Valuation({Rat(1, 6), Rat(2, 3), Rat(5, 6)}, {Rat(1, 6), Rat(0), Rat(5, 12), Rat(5, 12)}),
    }};
}

// Late arrival worthless online, fine offline: cut-and-choose variant.
inline Instance unbounded_cc_instance() {
    return {{Valuation::uniform_on(Rat(1, 2), Rat(1)),
             Valuation::uniform_on(Rat(1, 3), Rat(1)),
             Valuation::uniform_on(Rat(0), Rat(2, 3))}};
}

// Late arrival worthless online, fine offline: moving-knife variant.
inline Instance unbounded_mk_instance() {
    return {{Valuation::uniform_on(Rat(1, 2), Rat(1)),
             Valuation::uniform_on(Rat(1, 4), Rat(1, 2)),
             Valuation::uniform_on(Rat(0), Rat(1, 4))}};
}

} // namespace fixtures
