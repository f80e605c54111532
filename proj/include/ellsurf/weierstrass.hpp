#ifndef ELLSURF_WEIERSTRASS_HPP
#define ELLSURF_WEIERSTRASS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ellsurf/place.hpp"
#include "ellsurf/ratfunc.hpp"

namespace ellsurf {

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// over Q(t).
struct WeierstrassModel {
    RatFunc a1, a2, a3, a4, a6;

    static WeierstrassModel short_form(RatFunc A, RatFunc B) {
        return {RatFunc::zero(), RatFunc::zero(), RatFunc::zero(), std::move(A), std::move(B)};
    }
};

struct WeierstrassInvariants {
    RatFunc b2, b4, b6, b8, c4, c6, delta, j;
};

// Standard formulary; throws SingularModel when delta = 0.
WeierstrassInvariants invariants(const WeierstrassModel& m);

// Quadratic twist x -> u^2 x, y -> u^3 y (scales a_i by u^i).
WeierstrassModel twist(const WeierstrassModel& m, const RatFunc& u);

// Base change t -> alpha*t + beta, alpha != 0.
WeierstrassModel substitute_affine(const WeierstrassModel& m, const Rat& alpha, const Rat& beta);

// Passes iff delta != 0 and the family is not an everywhere-good-reduction
// constant-j family; throws SingularModel or Isotrivial.
void validate(const WeierstrassModel& m);

struct KodairaType {
    enum class Tag { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };
    Tag tag = Tag::I0;
    int n = 0; // for In / Instar

    int components() const;        // m
    int euler() const;             // e_loc
    int trace() const;             // local monodromy trace
    std::string name() const;
    bool operator==(const KodairaType& o) const { return tag == o.tag && n == o.n; }
};

struct MinimalValuations {
    // nullopt = +infinity (the corresponding invariant vanishes identically)
    std::optional<long> vc4, vc6;
    long vdelta = 0;
    long twist = 0; // power of the uniformizer absorbed to reach minimality
};

// Valuations of the minimal model at the place (uniformizer 1/t at infinity).
MinimalValuations minimalize_at(const WeierstrassModel& m, const Place& v);

KodairaType kodaira_type(const std::optional<long>& vc4, const std::optional<long>& vc6,
                         long vdelta);

struct LocalFiberData {
    Place place;
    KodairaType type;
    MinimalValuations vals;
    int m_s = 0;
    int e_loc = 0;
    int trace = 0;
};

LocalFiberData local_fiber_data(const WeierstrassModel& m, const Place& v);

// Places of bad reduction of the minimal model (vdelta > 0), infinity included
// when the twisted model there is bad. Requires a validated model.
std::vector<Place> bad_places(const WeierstrassModel& m);

std::vector<LocalFiberData> fiber_table(const WeierstrassModel& m);

} // namespace ellsurf

#endif
