#include "ellsurf/surface.hpp"

#include <algorithm>
#include <cassert>

#include "ellsurf/errors.hpp"

namespace ellsurf {

SurfaceInvariants surface_invariants(const WeierstrassModel& m) {
    validate(m);
    SurfaceInvariants s;
    for (const LocalFiberData& d : fiber_table(m)) {
        s.e += d.place.degree() * d.e_loc;
        s.sum_m_minus_1 += d.place.degree() * (d.m_s - 1);
    }
    assert(s.e % 12 == 0);
    s.chiO = s.e / 12;
    s.p_g = s.chiO - 1;
    s.q = 0;
    s.b1 = 0;
    s.b2 = s.e - 2;
    s.h11 = s.b2 - 2 * s.p_g;
    s.rank_bound = s.h11 - 2 - s.sum_m_minus_1;
    s.j_degree = j_degree(m);
    return s;
}

long j_degree(const WeierstrassModel& m) {
    RatFunc j = invariants(m).j;
    return std::max<long>(j.num().degree(), j.den().degree());
}

IsogenyComparison compare_isogeny_invariants(const WeierstrassModel& m1,
                                             const WeierstrassModel& m2) {
    SurfaceInvariants a = surface_invariants(m1), b = surface_invariants(m2);
    IsogenyComparison cmp;
    auto push = [&](const std::string& name, long x, long y) {
        cmp.items.push_back({name, x, y});
        if (x != y) cmp.compatible = false;
    };
    push("j_degree", a.j_degree, b.j_degree);
    push("e", a.e, b.e);
    push("b0", 1, 1);
    push("b1", a.b1, b.b1);
    push("b2", a.b2, b.b2);
    push("b3", a.b1, b.b1); // Poincare duality
    push("b4", 1, 1);
    push("p_g", a.p_g, b.p_g);
    push("q", a.q, b.q);
    push("sum_m_minus_1", a.sum_m_minus_1, b.sum_m_minus_1);
    cmp.verdict = cmp.compatible ? "necessary conditions hold" : "not generically isogenous";
    cmp.note = "fiber multiplicities m_s at individual places need not match; "
               "only their global sum is an isogeny invariant";
    return cmp;
}

} // namespace ellsurf
