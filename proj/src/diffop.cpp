#include "ellsurf/diffop.hpp"

#include <algorithm>
#include <set>

#include "ellsurf/factor.hpp"

namespace ellsurf {

DiffOp2 gauge_transform(const DiffOp2& op, const RatFunc& g) {
    if (g.is_zero()) throw ZeroGauge();
    RatFunc l = g.derivative() / g; // logarithmic derivative
    RatFunc two(Rat(2));
    return {op.p - two * l, op.q - op.p * l + two * l * l - g.derivative().derivative() / g};
}

DiffOp2 infinity_chart(const DiffOp2& op) {
    RatFunc u = RatFunc::variable();
    RatFunc uinv = u.inverse();
    return {RatFunc(Rat(2)) / u - op.p.compose(uinv) / (u * u),
            op.q.compose(uinv) / u.pow(4)};
}

RatFunc infinity_chart_rhs(const RatFunc& Z) {
    RatFunc u = RatFunc::variable();
    return Z.compose(u.inverse()) / u.pow(4);
}

std::vector<Place> singular_support(const DiffOp2& op) {
    std::set<Poly> pis;
    for (const RatFunc* f : {&op.p, &op.q})
        if (!f->is_zero() && f->den().degree() >= 1)
            for (const Poly& pi : irreducible_factors(f->den())) pis.insert(pi);
    std::vector<Place> out;
    for (const Poly& pi : pis) out.push_back(Place::finite(pi));
    if (is_singular_at(op, Place::infinity())) out.push_back(Place::infinity());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_singular_at(const DiffOp2& op, const Place& v) {
    if (v.is_infinity()) {
        DiffOp2 inf = infinity_chart(op);
        Place zero = Place::rational(Rat(0));
        Valuation vp = valuation(inf.p, zero), vq = valuation(inf.q, zero);
        return (vp && *vp < 0) || (vq && *vq < 0);
    }
    Valuation vp = valuation(op.p, v), vq = valuation(op.q, v);
    return (vp && *vp < 0) || (vq && *vq < 0);
}

static std::pair<Rat, Rat> exponents_from_indicial(const Rat& P0, const Rat& Q0) {
    // rho^2 + (P0 - 1) rho + Q0
    Rat b = P0 - 1, disc = b * b - 4 * Q0;
    auto s = rat_sqrt(disc);
    if (!s) throw NonRationalExponents("indicial discriminant " + rat_to_string(disc) +
                                       " is not a rational square");
    Rat r1 = (-b - *s) / 2, r2 = (-b + *s) / 2;
    return {r1, r2};
}

std::pair<Rat, Rat> local_exponents(const DiffOp2& op, const Place& v) {
    if (v.is_infinity())
        return local_exponents(infinity_chart(op), Place::rational(Rat(0)));
    if (v.degree() == 1) {
        auto ode = localize<Rat>(op, place_root_rational(v), 1);
        return exponents_from_indicial(ode.P[0], ode.Q[0]);
    }
    auto fld = std::make_shared<const ResidueField>(ResidueField{v.pi()});
    auto ode = localize<ResidueElem>(op, place_root(v, fld), 1);
    if (!ode.P[0].is_rational() || !ode.Q[0].is_rational())
        throw NonRationalExponents("indicial coefficients generate the residue field");
    return exponents_from_indicial(ode.P[0].rational_value(), ode.Q[0].rational_value());
}

} // namespace ellsurf
