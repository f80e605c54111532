#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellsurf/errors.hpp"
#include "ellsurf/weierstrass.hpp"

using namespace ellsurf;

namespace {

Poly P(std::vector<long> c) {
    std::vector<Rat> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = Rat(c[i]);
    return Poly(std::move(r));
}

RatFunc RF(std::vector<long> c) { return RatFunc(P(std::move(c))); }

// y^2 = x(x-1)(x-lambda)
WeierstrassModel legendre_model() {
    return {RatFunc::zero(), RF({-1, -1}), RatFunc::zero(), RF({0, 1}), RatFunc::zero()};
}

// y^2 = x^3 + t x + 1
WeierstrassModel rank1_model() {
    return WeierstrassModel::short_form(RF({0, 1}), RF({1}));
}

// y^2 = x^3 + t^7 + 1
WeierstrassModel k3_model() {
    return WeierstrassModel::short_form(RatFunc::zero(), RF({1, 0, 0, 0, 0, 0, 0, 1}));
}

// Hesse pencil at level 3, Weierstrass form
WeierstrassModel level3_model() {
    RatFunc mu = RatFunc::variable();
    RatFunc disc = mu.pow(3) - RatFunc(Rat(27));
    return {-mu * mu, RatFunc(Rat(-27)) * mu, RatFunc::zero(),
            RatFunc(Rat(-9)) * mu * mu * disc, -mu.pow(3) * disc * disc};
}

KodairaType fiber_at(const WeierstrassModel& m, const Place& v) {
    return local_fiber_data(m, v).type;
}

} // namespace

TEST_CASE("invariant formulary on the Legendre family") {
    auto iv = invariants(legendre_model());
    CHECK(iv.b2 == RF({-4, -4}));
    CHECK(iv.c4 == RF({16, -16, 16}));                    // 16(l^2 - l + 1)
    CHECK(iv.delta == RatFunc(P({0, 0, 1}) * P({-1, 1}).pow(2) * Rat(16))); // 16 l^2 (l-1)^2
    CHECK(iv.c4.pow(3) - iv.c6.pow(2) == RatFunc(Rat(1728)) * iv.delta);
}

TEST_CASE("invariant formulary on y^2 = x^3 + t x + 1") {
    auto iv = invariants(rank1_model());
    CHECK(iv.c4 == RF({0, -48}));
    CHECK(iv.c6 == RF({-864}));
    CHECK(iv.delta == RF({-432, 0, 0, -64})); // -16 (4t^3 + 27)
    CHECK(iv.j == iv.c4.pow(3) / iv.delta);
}

TEST_CASE("c4^3 - c6^2 = 1728 delta on a long model") {
    WeierstrassModel m{RF({1, 1}), RF({0, 2}), RF({3}), RF({-1, 0, 1}), RF({5, -2})};
    auto iv = invariants(m);
    CHECK(iv.c4.pow(3) - iv.c6.pow(2) == RatFunc(Rat(1728)) * iv.delta);
    CHECK(iv.b2 * iv.b6 - iv.b4 * iv.b4 == RatFunc(Rat(4)) * iv.b8);
}

TEST_CASE("validate") {
    CHECK_NOTHROW(validate(legendre_model()));
    CHECK_NOTHROW(validate(rank1_model()));
    // constant j with bad fibers is a genuine family
    CHECK_NOTHROW(validate(k3_model()));
    // y^2 = x^3 is singular
    CHECK_THROWS_AS(validate(WeierstrassModel::short_form(RatFunc::zero(), RatFunc::zero())),
                    SingularModel);
    // y^2 = x^3 + 1 is a constant curve
    CHECK_THROWS_AS(validate(WeierstrassModel::short_form(RatFunc::zero(), RF({1}))),
                    Isotrivial);
}

TEST_CASE("twist and base change preserve j") {
    WeierstrassModel m = rank1_model();
    RatFunc j = invariants(m).j;
    RatFunc u = (RatFunc::variable() + RatFunc(Rat(2))) / RF({1, 0, 1});
    auto tw = invariants(twist(m, u));
    CHECK(tw.j == j);
    CHECK(tw.delta == u.pow(12) * invariants(m).delta);
    CHECK_THROWS_AS(twist(m, RatFunc::zero()), ZeroGauge);

    WeierstrassModel sub = substitute_affine(m, Rat(3), Rat(-1));
    CHECK(invariants(sub).j == j.compose(RF({-1, 3})));
}

TEST_CASE("minimalize_at") {
    // Legendre at infinity: raw (-2, -3, -4), one twist step up
    auto mv = minimalize_at(legendre_model(), Place::infinity());
    CHECK(mv.twist == 1);
    CHECK(mv.vc4 == 2);
    CHECK(mv.vc6 == 3);
    CHECK(mv.vdelta == 8);

    // already minimal at lambda = 0
    mv = minimalize_at(legendre_model(), Place::rational(Rat(0)));
    CHECK(mv.twist == 0);
    CHECK(mv.vdelta == 2);
    CHECK(mv.vc4 == 0);

    // level 3 family: mu = 0 becomes good after one twist
    mv = minimalize_at(level3_model(), Place::rational(Rat(0)));
    CHECK(mv.twist == -1);
    CHECK(mv.vdelta == 0);

    // c4 = 0 reports the infinite valuation as nullopt
    mv = minimalize_at(k3_model(), Place::finite(P({1, 1})));
    CHECK(!mv.vc4.has_value());
    CHECK(mv.vc6 == 1);
    CHECK(mv.vdelta == 2);
}

TEST_CASE("kodaira_type classification table") {
    CHECK(kodaira_type(0, 0, 0).name() == "I0");
    CHECK(kodaira_type(0, 0, 2).name() == "I2");
    CHECK(kodaira_type(std::nullopt, 1, 2).name() == "II");
    CHECK(kodaira_type(1, 2, 3).name() == "III");
    CHECK(kodaira_type(std::nullopt, 2, 4).name() == "IV");
    CHECK(kodaira_type(2, 3, 6).name() == "I0*");
    CHECK(kodaira_type(2, 3, 8).name() == "I2*");
    CHECK(kodaira_type(std::nullopt, 4, 8).name() == "IV*");
    CHECK(kodaira_type(3, 6, 9).name() == "III*");
    CHECK(kodaira_type(std::nullopt, 5, 10).name() == "II*");
    CHECK_THROWS_AS(kodaira_type(1, 1, 1), UnclassifiedValuations);

    KodairaType i2s = kodaira_type(2, 3, 8);
    CHECK(i2s.components() == 7);
    CHECK(i2s.euler() == 8);
    CHECK(i2s.trace() == -2);
    KodairaType i1 = kodaira_type(0, 0, 1);
    CHECK(i1.components() == 1);
    CHECK(i1.euler() == 1);
    CHECK(i1.trace() == 2);
}

TEST_CASE("fiber tables") {
    SUBCASE("legendre") {
        auto bad = bad_places(legendre_model());
        REQUIRE(bad.size() == 3);
        CHECK(bad[0] == Place::rational(Rat(1)));
        CHECK(bad[1] == Place::rational(Rat(0)));
        CHECK(bad[2] == Place::infinity());
        CHECK(fiber_at(legendre_model(), bad[0]) == KodairaType{KodairaType::Tag::In, 2});
        CHECK(fiber_at(legendre_model(), bad[1]) == KodairaType{KodairaType::Tag::In, 2});
        CHECK(fiber_at(legendre_model(), bad[2]) == KodairaType{KodairaType::Tag::Instar, 2});
    }
    SUBCASE("rank one family") {
        auto tab = fiber_table(rank1_model());
        REQUIRE(tab.size() == 2);
        CHECK(tab[0].place == Place::finite(Poly(std::vector<Rat>{Rat(27, 4), Rat(0), Rat(0), Rat(1)})));
        CHECK(tab[0].type == KodairaType{KodairaType::Tag::In, 1});
        CHECK(tab[1].place == Place::infinity());
        CHECK(tab[1].type == KodairaType{KodairaType::Tag::IIIstar, 0});
    }
    SUBCASE("K3 family") {
        auto tab = fiber_table(k3_model());
        long e = 0;
        for (const auto& d : tab) e += d.place.degree() * d.e_loc;
        CHECK(e == 24);
        CHECK(tab.back().place == Place::infinity());
        CHECK(tab.back().type.name() == "II*");
        for (size_t i = 0; i + 1 < tab.size(); ++i) CHECK(tab[i].type.name() == "II");
    }
    SUBCASE("level 3 family") {
        auto tab = fiber_table(level3_model());
        REQUIRE(tab.size() == 3);
        CHECK(tab[0].place == Place::rational(Rat(3)));
        CHECK(tab[1].place == Place::finite(P({9, 3, 1})));
        CHECK(tab[2].place == Place::infinity());
        long e = 0;
        for (const auto& d : tab) {
            CHECK(d.type == KodairaType{KodairaType::Tag::In, 3});
            e += d.place.degree() * d.e_loc;
        }
        CHECK(e == 12);
    }
    SUBCASE("euler numbers are multiples of 12") {
        for (const auto& m : {legendre_model(), rank1_model(), k3_model(), level3_model()}) {
            long e = 0;
            for (const auto& d : fiber_table(m)) e += d.place.degree() * d.e_loc;
            CHECK(e % 12 == 0);
        }
    }
}
