#ifndef ELLSURF_GAUSSMANIN_HPP
#define ELLSURF_GAUSSMANIN_HPP

#include "ellsurf/diffop.hpp"
#include "ellsurf/weierstrass.hpp"

namespace ellsurf {

// Point of the generic fiber over Q(t); the zero section is the point at
// infinity of every fiber.
struct Section {
    bool at_infinity = true;
    RatFunc X, Y;

    static Section zero() { return Section{}; }
    static Section affine(RatFunc x, RatFunc y) {
        return Section{false, std::move(x), std::move(y)};
    }
    bool operator==(const Section& o) const {
        return at_infinity == o.at_infinity && (at_infinity || (X == o.X && Y == o.Y));
    }
};

bool section_on_curve(const WeierstrassModel& m, const Section& s);

// Group law on sections; defined for models with a1 = a3 = 0.
Section section_negate(const WeierstrassModel& m, const Section& s);
Section section_add(const WeierstrassModel& m, const Section& a, const Section& b);

// The operator annihilating the periods of dx/y (short form reached through
// the b-invariants when the model is long).
DiffOp2 picard_fuchs(const WeierstrassModel& m);

enum class SingKind { TrueSingular, Apparent };

struct SingPoint {
    Place place;
    std::pair<Rat, Rat> exponents; // rho1 <= rho2
    SingKind kind = SingKind::TrueSingular;
    bool logarithmic = false;
};

// Requires: v is a singularity of op; op = picard_fuchs(m).
SingPoint classify_singularity(const DiffOp2& op, const Place& v, const WeierstrassModel& m);

// Z = op(f) for f(t) the incomplete period from the zero section to s.
RatFunc manin_map(const WeierstrassModel& m, const DiffOp2& op, const Section& s);

} // namespace ellsurf

#endif
