#include "ellsurf/weierstrass.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "ellsurf/errors.hpp"
#include "ellsurf/factor.hpp"

namespace ellsurf {

WeierstrassInvariants invariants(const WeierstrassModel& m) {
    WeierstrassInvariants iv;
    const RatFunc four(Rat(4)), two(Rat(2));
    iv.b2 = m.a1 * m.a1 + four * m.a2;
    iv.b4 = two * m.a4 + m.a1 * m.a3;
    iv.b6 = m.a3 * m.a3 + four * m.a6;
    iv.b8 = m.a1 * m.a1 * m.a6 + four * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
            m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
    iv.c4 = iv.b2 * iv.b2 - RatFunc(Rat(24)) * iv.b4;
    iv.c6 = -iv.b2 * iv.b2 * iv.b2 + RatFunc(Rat(36)) * iv.b2 * iv.b4 - RatFunc(Rat(216)) * iv.b6;
    iv.delta = -iv.b2 * iv.b2 * iv.b8 - RatFunc(Rat(8)) * iv.b4 * iv.b4 * iv.b4 -
               RatFunc(Rat(27)) * iv.b6 * iv.b6 + RatFunc(Rat(9)) * iv.b2 * iv.b4 * iv.b6;
    if (iv.delta.is_zero()) throw SingularModel("delta = 0");
    iv.j = iv.c4 * iv.c4 * iv.c4 / iv.delta;
    return iv;
}

WeierstrassModel twist(const WeierstrassModel& m, const RatFunc& u) {
    if (u.is_zero()) throw ZeroGauge();
    return {m.a1 * u, m.a2 * u.pow(2), m.a3 * u.pow(3), m.a4 * u.pow(4), m.a6 * u.pow(6)};
}

WeierstrassModel substitute_affine(const WeierstrassModel& m, const Rat& alpha, const Rat& beta) {
    if (sgn(alpha) == 0) throw Error("substitute_affine: alpha = 0");
    RatFunc s = RatFunc::variable() * RatFunc(alpha) + RatFunc(beta);
    return {m.a1.compose(s), m.a2.compose(s), m.a3.compose(s), m.a4.compose(s), m.a6.compose(s)};
}

void validate(const WeierstrassModel& m) {
    WeierstrassInvariants iv = invariants(m); // throws SingularModel
    if (iv.j.is_constant() && bad_places(m).empty())
        throw Isotrivial("j = " + iv.j.to_string() + " is constant and the family has no bad fibers");
}

int KodairaType::components() const {
    switch (tag) {
        case Tag::I0: return 1;
        case Tag::In: return n == 1 ? 1 : n;
        case Tag::II: return 1;
        case Tag::III: return 2;
        case Tag::IV: return 3;
        case Tag::I0star: return 5;
        case Tag::Instar: return 5 + n;
        case Tag::IVstar: return 7;
        case Tag::IIIstar: return 8;
        case Tag::IIstar: return 9;
    }
    return 0;
}

int KodairaType::euler() const {
    switch (tag) {
        case Tag::I0: return 0;
        case Tag::In: return n;
        case Tag::II: return 2;
        case Tag::III: return 3;
        case Tag::IV: return 4;
        case Tag::I0star: return 6;
        case Tag::Instar: return 6 + n;
        case Tag::IVstar: return 8;
        case Tag::IIIstar: return 9;
        case Tag::IIstar: return 10;
    }
    return 0;
}

int KodairaType::trace() const {
    switch (tag) {
        case Tag::I0: return 2;
        case Tag::In: return 2;
        case Tag::II: return 1;
        case Tag::III: return 0;
        case Tag::IV: return -1;
        case Tag::I0star: return -2;
        case Tag::Instar: return -2;
        case Tag::IVstar: return -1;
        case Tag::IIIstar: return 0;
        case Tag::IIstar: return 1;
    }
    return 0;
}

std::string KodairaType::name() const {
    switch (tag) {
        case Tag::I0: return "I0";
        case Tag::In: return "I" + std::to_string(n);
        case Tag::II: return "II";
        case Tag::III: return "III";
        case Tag::IV: return "IV";
        case Tag::I0star: return "I0*";
        case Tag::Instar: return "I" + std::to_string(n) + "*";
        case Tag::IVstar: return "IV*";
        case Tag::IIIstar: return "III*";
        case Tag::IIstar: return "II*";
    }
    return "?";
}

MinimalValuations minimalize_at(const WeierstrassModel& m, const Place& v) {
    WeierstrassInvariants iv = invariants(m);
    Valuation vc4 = valuation(iv.c4, v), vc6 = valuation(iv.c6, v), vd = valuation(iv.delta, v);
    assert(vd.has_value());

    // largest k with (vc4,vc6,vdelta) >= k*(4,6,12)
    auto fdiv = [](long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    long k = fdiv(*vd, 12);
    if (vc4) k = std::min(k, fdiv(*vc4, 4));
    if (vc6) k = std::min(k, fdiv(*vc6, 6));

    MinimalValuations out;
    out.twist = -k;
    if (vc4) out.vc4 = *vc4 - 4 * k;
    if (vc6) out.vc6 = *vc6 - 6 * k;
    out.vdelta = *vd - 12 * k;
    return out;
}

KodairaType kodaira_type(const std::optional<long>& vc4, const std::optional<long>& vc6,
                         long vdelta) {
    auto geq = [](const std::optional<long>& v, long k) { return !v || *v >= k; };
    auto eq = [](const std::optional<long>& v, long k) { return v && *v == k; };
    using Tag = KodairaType::Tag;
    if (vdelta == 0) return {Tag::I0, 0};
    if (eq(vc4, 0)) return {Tag::In, static_cast<int>(vdelta)};
    if (eq(vc6, 1) && vdelta == 2) return {Tag::II, 0};
    if (eq(vc4, 1) && vdelta == 3) return {Tag::III, 0};
    if (eq(vc6, 2) && vdelta == 4) return {Tag::IV, 0};
    if (vdelta == 6 && geq(vc4, 2) && geq(vc6, 3)) return {Tag::I0star, 0};
    if (eq(vc4, 2) && eq(vc6, 3) && vdelta > 6) return {Tag::Instar, static_cast<int>(vdelta - 6)};
    if (eq(vc6, 4) && vdelta == 8) return {Tag::IVstar, 0};
    if (eq(vc4, 3) && vdelta == 9) return {Tag::IIIstar, 0};
    if (eq(vc6, 5) && vdelta == 10) return {Tag::IIstar, 0};
    throw UnclassifiedValuations(
        "(vc4, vc6, vdelta) = (" + (vc4 ? std::to_string(*vc4) : "inf") + ", " +
        (vc6 ? std::to_string(*vc6) : "inf") + ", " + std::to_string(vdelta) + ")");
}

LocalFiberData local_fiber_data(const WeierstrassModel& m, const Place& v) {
    LocalFiberData d{v};
    d.vals = minimalize_at(m, v);
    d.type = kodaira_type(d.vals.vc4, d.vals.vc6, d.vals.vdelta);
    d.m_s = d.type.components();
    d.e_loc = d.type.euler();
    d.trace = d.type.trace();
    return d;
}

std::vector<Place> bad_places(const WeierstrassModel& m) {
    WeierstrassInvariants iv = invariants(m);
    std::set<Poly> candidates;
    auto add = [&](const Poly& p) {
        if (p.degree() >= 1)
            for (const Poly& f : irreducible_factors(p)) candidates.insert(f);
    };
    add(iv.delta.num());
    add(iv.delta.den());
    if (!iv.c4.is_zero()) add(iv.c4.den());
    if (!iv.c6.is_zero()) add(iv.c6.den());

    std::vector<Place> out;
    for (const Poly& pi : candidates) {
        Place v = Place::finite(pi);
        if (minimalize_at(m, v).vdelta > 0) out.push_back(v);
    }
    if (minimalize_at(m, Place::infinity()).vdelta > 0) out.push_back(Place::infinity());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LocalFiberData> fiber_table(const WeierstrassModel& m) {
    std::vector<LocalFiberData> out;
    for (const Place& v : bad_places(m)) out.push_back(local_fiber_data(m, v));
    return out;
}

} // namespace ellsurf
