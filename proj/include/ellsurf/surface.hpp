#ifndef ELLSURF_SURFACE_HPP
#define ELLSURF_SURFACE_HPP

#include <string>
#include <vector>

#include "ellsurf/weierstrass.hpp"

namespace ellsurf {

// Shioda-Tate bookkeeping for a relatively minimal elliptic fibration with
// section over the projective line.
struct SurfaceInvariants {
    long e = 0;              // topological Euler number
    long chiO = 0;           // e / 12
    long p_g = 0;            // chiO - 1
    long q = 0;              // base is P^1
    long b1 = 0;
    long b2 = 0;             // e - 2
    long h11 = 0;            // b2 - 2 p_g
    long sum_m_minus_1 = 0;  // sum over geometric points of (m_s - 1)
    long rank_bound = 0;     // h11 - 2 - sum_m_minus_1
    long j_degree = 0;

    // Picard number as a function of the Mordell-Weil rank.
    long rho_given_r(long r) const { return r + 2 + sum_m_minus_1; }
};

SurfaceInvariants surface_invariants(const WeierstrassModel& m);

long j_degree(const WeierstrassModel& m);

struct IsogenyComparison {
    struct Item {
        std::string name;
        long lhs = 0, rhs = 0;
        bool equal() const { return lhs == rhs; }
    };
    std::vector<Item> items;
    bool compatible = true; // all necessary conditions hold
    std::string verdict;
    std::string note; // fiber multiplicities per place need not match, only the sum
};

IsogenyComparison compare_isogeny_invariants(const WeierstrassModel& m1,
                                             const WeierstrassModel& m2);

} // namespace ellsurf

#endif
