#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "ellsurf/errors.hpp"
#include "ellsurf/gaussmanin.hpp"
#include "ellsurf/idr.hpp"
#include "ellsurf/localsolve.hpp"
#include "ellsurf/series.hpp"

using namespace ellsurf;

namespace {

std::mt19937 rng(20240817);

Poly random_poly(int maxdeg, long lo = -5, long hi = 5) {
    std::uniform_int_distribution<int> dd(0, maxdeg);
    std::uniform_int_distribution<long> dc(lo, hi);
    int d = dd(rng);
    std::vector<Rat> c(d + 1);
    for (auto& x : c) x = Rat(dc(rng));
    return Poly(std::move(c));
}

RatFunc random_ratfunc(int maxdeg = 3) {
    Poly d = random_poly(2);
    while (d.is_zero()) d = random_poly(2);
    return RatFunc(random_poly(maxdeg), d);
}

// validated random model with coefficient degree <= 6, or nullopt
std::optional<WeierstrassModel> random_model() {
    std::uniform_int_distribution<int> kind(0, 2);
    WeierstrassModel m{RatFunc::zero(), RatFunc::zero(), RatFunc::zero(), RatFunc::zero(),
                       RatFunc::zero()};
    switch (kind(rng)) {
    case 0:
        m = WeierstrassModel::short_form(RatFunc(random_poly(6)), RatFunc(random_poly(6)));
        break;
    case 1:
        m = {RatFunc(random_poly(1)), RatFunc(random_poly(2)), RatFunc(random_poly(2)),
             RatFunc(random_poly(4)), RatFunc(random_poly(6))};
        break;
    default:
        m = WeierstrassModel::short_form(RatFunc(random_poly(3)), RatFunc(random_poly(4)));
        break;
    }
    try {
        validate(m);
    } catch (const Error&) {
        return std::nullopt;
    }
    return m;
}

std::vector<WeierstrassModel> corpus() {
    static std::vector<WeierstrassModel> models = [] {
        std::vector<WeierstrassModel> out;
        while (out.size() < 200) {
            auto m = random_model();
            if (m) out.push_back(std::move(*m));
        }
        return out;
    }();
    return models;
}

// sum of the two local exponents over all geometric points of the place,
// computed from the residue trace of p so irrational exponents are fine
Rat exponent_sum(const DiffOp2& op, const Place& v) {
    DiffOp2 local = v.is_infinity() ? infinity_chart(op) : op;
    Place w = v.is_infinity() ? Place::rational(Rat(0)) : v;
    auto fld = std::make_shared<const ResidueField>(ResidueField{w.pi()});
    ResidueElem theta = place_root(w, fld);
    auto ode = localize<ResidueElem>(local, theta, 1);
    // indicial rho(rho-1) + P0 rho + Q0: sum of roots = 1 - P0 per point
    return Rat(v.is_infinity() ? 1 : v.degree()) - ode.P[0].trace();
}

} // namespace

TEST_CASE("weierstrass identities hold on the fuzz corpus") {
    for (const auto& m : corpus()) {
        auto iv = invariants(m);
        CHECK(iv.c4.pow(3) - iv.c6.pow(2) == RatFunc(Rat(1728)) * iv.delta);
        CHECK(iv.b2 * iv.b6 - iv.b4 * iv.b4 == RatFunc(Rat(4)) * iv.b8);
        CHECK(iv.j == iv.c4.pow(3) / iv.delta);
    }
}

TEST_CASE("euler numbers are multiples of 12 and Leray holds") {
    for (const auto& m : corpus()) {
        SurfaceInvariants inv = surface_invariants(m);
        CHECK(inv.e % 12 == 0);
        CHECK(inv.e >= 12);
        CHECK(expected_dimension(m) + 2 + inv.sum_m_minus_1 == inv.b2);
        CHECK(inv.h11 == inv.b2 - 2 * inv.p_g);
        CHECK(inv.rho_given_r(inv.rank_bound) == inv.h11);
    }
}

TEST_CASE("surface invariants are twist and substitution invariants") {
    std::uniform_int_distribution<long> dc(1, 4);
    for (const auto& m : corpus()) {
        SurfaceInvariants inv = surface_invariants(m);
        WeierstrassModel tw = twist(m, RatFunc(Rat(dc(rng), dc(rng))));
        SurfaceInvariants invt = surface_invariants(tw);
        CHECK(inv.e == invt.e);
        CHECK(inv.sum_m_minus_1 == invt.sum_m_minus_1);
        CHECK(inv.j_degree == invt.j_degree);

        WeierstrassModel sub = substitute_affine(m, Rat(dc(rng)), Rat(dc(rng) - 2));
        SurfaceInvariants invs = surface_invariants(sub);
        CHECK(inv.e == invs.e);
        CHECK(inv.sum_m_minus_1 == invs.sum_m_minus_1);
        CHECK(inv.rank_bound == invs.rank_bound);
    }
}

TEST_CASE("every computed operator is Fuchsian with the right exponent sum") {
    int checked = 0;
    for (const auto& m : corpus()) {
        DiffOp2 op;
        try {
            op = picard_fuchs(m);
        } catch (const NonGenericReduction&) {
            continue; // the reduction basis degenerates for some models
        }
        ++checked;
        Rat total(0);
        long n_finite = 0;
        bool saw_infinity = false;
        for (const Place& v : singular_support(op)) {
            if (v.is_infinity()) {
                saw_infinity = true;
            } else {
                CHECK(*valuation(op.p, v) >= -1); // regular singular
                CHECK(*valuation(op.q, v) >= -2);
                n_finite += v.degree();
                total += exponent_sum(op, v);
            }
        }
        DiffOp2 chart = infinity_chart(op);
        Place zero = Place::rational(Rat(0));
        if (is_singular_at(chart, zero) || saw_infinity) {
            CHECK(*valuation(chart.p, zero) >= -1);
            CHECK(*valuation(chart.q, zero) >= -2);
        }
        total += exponent_sum(op, Place::infinity());
        // Fuchs relation on P^1 for a second-order operator
        CHECK(total == Rat(n_finite - 1));
    }
    CHECK(checked >= 150);
}

TEST_CASE("gauge transforms form a group action") {
    for (int iter = 0; iter < 25; ++iter) {
        auto m = random_model();
        if (!m) continue;
        DiffOp2 op;
        try {
            op = picard_fuchs(*m);
        } catch (const NonGenericReduction&) {
            continue;
        }
        RatFunc g = random_ratfunc();
        RatFunc h = random_ratfunc();
        while (g.is_zero()) g = random_ratfunc();
        while (h.is_zero()) h = random_ratfunc();
        CHECK(gauge_transform(op, RatFunc::one()) == op);
        CHECK(gauge_transform(gauge_transform(op, g), h) == gauge_transform(op, g * h));
        CHECK(gauge_transform(gauge_transform(op, g), g.inverse()) == op);
    }
}

TEST_CASE("exact classes are locally exact") {
    WeierstrassModel models[] = {
        {RatFunc::zero(), RatFunc(Poly(std::vector<Rat>{Rat(-1), Rat(-1)})), RatFunc::zero(),
         RatFunc::variable(), RatFunc::zero()},
        WeierstrassModel::short_form(RatFunc::variable(), RatFunc::one())};
    for (const auto& m : models) {
        DiffOp2 op = picard_fuchs(m);
        for (int iter = 0; iter < 20; ++iter) {
            RatFunc f = random_ratfunc();
            RatFunc Z = op.apply(f);
            if (Z.is_zero()) continue;
            std::vector<Place> places = singular_support(op);
            for (const Place& v : support(Z)) {
                bool seen = false;
                for (const Place& w : places) seen = seen || w == v;
                if (!seen) places.push_back(v);
            }
            for (const Place& v : places) CHECK(is_locally_exact(op, Z, v).locally_exact);
        }
    }
}
