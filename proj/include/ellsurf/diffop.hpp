#ifndef ELLSURF_DIFFOP_HPP
#define ELLSURF_DIFFOP_HPP

#include <utility>
#include <vector>

#include "ellsurf/series.hpp"

namespace ellsurf {

// D^2 + p D + q with D = d/dt.
struct DiffOp2 {
    RatFunc p, q;

    RatFunc apply(const RatFunc& f) const {
        return f.derivative().derivative() + p * f.derivative() + q * f;
    }
    bool operator==(const DiffOp2& o) const { return p == o.p && q == o.q; }
};

// Conjugation by the gauge change of the solution sheaf f -> g f.
DiffOp2 gauge_transform(const DiffOp2& op, const RatFunc& g);

// The operator in the chart u = 1/t; solutions transport as f(t) = f(1/u).
DiffOp2 infinity_chart(const DiffOp2& op);
// Right-hand sides of op f = Z transport as Z(1/u)/u^4.
RatFunc infinity_chart_rhs(const RatFunc& Z);

// Finite poles of p or q, plus infinity when the u-chart operator is singular
// at u = 0. Sorted, deterministic.
std::vector<Place> singular_support(const DiffOp2& op);

bool is_singular_at(const DiffOp2& op, const Place& v);

// Exponents at the place: roots of rho(rho-1) + P0 rho + Q0; throws
// IrregularSingularity when the Fuchs criterion fails and NonRationalExponents
// when the indicial data or its roots leave the rationals.
std::pair<Rat, Rat> local_exponents(const DiffOp2& op, const Place& v);

// Series data of the regular-singular local form: P = u*p and Q = u^2*q as
// power series in the uniformizer, truncated to `terms` coefficients.
template <class F>
struct LocalODE {
    std::vector<F> P, Q;

    // indicial polynomial I(rho) = rho(rho-1) + P[0] rho + Q[0]
    F indicial(const Rat& rho, const F& model_zero) const {
        F r = scalar_mul(rho, one_like(model_zero));
        return r * r - r + P[0] * r + Q[0];
    }
};

template <class F>
LocalODE<F> localize(const DiffOp2& op, const F& theta, size_t terms) {
    F z = zero_like(theta);
    LocalODE<F> out;
    out.P.assign(terms, z);
    out.Q.assign(terms, z);
    LocalExpansion<F> pe = local_expansion(op.p, theta, terms + 2);
    LocalExpansion<F> qe = local_expansion(op.q, theta, terms + 2);
    if ((!pe.is_zero() && pe.val < -1) || (!qe.is_zero() && qe.val < -2))
        throw IrregularSingularity("Fuchs criterion fails");
    for (size_t k = 0; k < terms; ++k) {
        out.P[k] = pe.at(static_cast<long>(k) - 1, z);
        out.Q[k] = qe.at(static_cast<long>(k) - 2, z);
    }
    return out;
}

} // namespace ellsurf

#endif
