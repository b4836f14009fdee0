#pragma once

#include <utility>
#include <vector>

#include "gbgg/errors.hpp"

namespace gbgg {

// Upper bound for h^2 in terms of q and the top form degree d, together with
// the per-step table it aggregates.
struct BoundRhs {
    long long value = 0;
    int maximizing_r = 0;  // 0 when no step applies (q == 1)
    std::vector<std::pair<int, long long>> per_r;
};

// Per-step bound 2*r*q - C(2r+1, 2), valid whenever every nonzero kernel
// bivector has rank > 2r.
long long step_bound(int r, int q);

// Aggregate of the per-step bounds over r in 1..min(q/2, d-1). Closed form:
// C(q,2) when q <= 2d-1, and 2(d-1)q - C(2d-1,2) otherwise. Requires q >= 1
// and d >= 2.
BoundRhs bound_rhs(int q, int d);

}  // namespace gbgg
