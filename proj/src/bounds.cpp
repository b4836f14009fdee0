#include "gbgg/bounds.hpp"

#include "gbgg/combinatorics.hpp"

namespace gbgg {

long long step_bound(int r, int q) {
    return 2LL * r * q - binomial(2 * r + 1, 2);
}

BoundRhs bound_rhs(int q, int d) {
    if (q < 1) throw DimensionError("bound needs q >= 1");
    if (d < 2) throw DimensionError("bound needs d >= 2");
    BoundRhs out;
    int r_max = std::min(q / 2, d - 1);
    for (int r = 1; r <= r_max; ++r) out.per_r.emplace_back(r, step_bound(r, q));
    // The per-step bound is strictly increasing in r on this range, so the
    // aggregate is attained at the right endpoint.
    out.maximizing_r = r_max;
    long long closed = q <= 2 * d - 1 ? binomial(q, 2) : 2LL * (d - 1) * q - binomial(2 * d - 1, 2);
    if (r_max == 0) {
        out.value = closed;  // q == 1: C(1,2) == 0, no step applies
        return out;
    }
    long long from_table = out.per_r.back().second;
    if (from_table != closed)
        throw InternalError("aggregate bound mismatch: table gives " + std::to_string(from_table) +
                            ", closed form gives " + std::to_string(closed));
    out.value = closed;
    return out;
}

}  // namespace gbgg
