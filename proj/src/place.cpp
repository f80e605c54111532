#include "ellsurf/place.hpp"

#include <cassert>

#include "ellsurf/errors.hpp"
#include "ellsurf/factor.hpp"

namespace ellsurf {

Place Place::finite(Poly pi) {
    assert(pi.is_monic() && pi.degree() >= 1);
    Place p;
    p.pi_ = std::move(pi);
    return p;
}

Place Place::rational(const Rat& a) {
    return finite(Poly(std::vector<Rat>{-a, Rat(1)}));
}

bool Place::operator==(const Place& o) const {
    if (is_infinity() != o.is_infinity()) return false;
    return is_infinity() || *pi_ == *o.pi_;
}

bool Place::operator<(const Place& o) const {
    if (is_infinity() != o.is_infinity()) return !is_infinity(); // infinity last
    if (is_infinity()) return false;
    return *pi_ < *o.pi_;
}

std::string Place::to_string(const std::string& var) const {
    return is_infinity() ? "infinity" : pi_->to_string(var);
}

Valuation valuation(const RatFunc& f, const Place& v) {
    if (f.is_zero()) return std::nullopt;
    if (v.is_infinity()) return static_cast<long>(f.den().degree() - f.num().degree());
    return static_cast<long>(f.num().multiplicity(v.pi())) -
           static_cast<long>(f.den().multiplicity(v.pi()));
}

std::vector<Place> support(const RatFunc& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    std::vector<Place> out;
    Poly prod = f.num() * f.den();
    if (prod.degree() >= 1)
        for (const Poly& pi : irreducible_factors(prod)) out.push_back(Place::finite(pi));
    if (f.den().degree() != f.num().degree()) out.push_back(Place::infinity());
    return out;
}

ResidueElem::ResidueElem(Poly rep, ResidueFieldPtr fld) : fld_(std::move(fld)) {
    rep_ = rep.divrem(fld_->modulus).second;
}

ResidueElem ResidueElem::operator-() const { return ResidueElem(-rep_, fld_); }

static void check_same(const ResidueElem& a, const ResidueElem& b) {
    assert(a.field() && b.field());
    assert(a.field() == b.field() || a.field()->modulus == b.field()->modulus);
}

ResidueElem operator+(const ResidueElem& a, const ResidueElem& b) {
    check_same(a, b);
    return ResidueElem(a.rep_ + b.rep_, a.fld_);
}

ResidueElem operator-(const ResidueElem& a, const ResidueElem& b) {
    check_same(a, b);
    return ResidueElem(a.rep_ - b.rep_, a.fld_);
}

ResidueElem operator*(const ResidueElem& a, const ResidueElem& b) {
    check_same(a, b);
    return ResidueElem(a.rep_ * b.rep_, a.fld_);
}

ResidueElem operator/(const ResidueElem& a, const ResidueElem& b) {
    return a * b.inverse();
}

ResidueElem ResidueElem::inverse() const {
    if (is_zero()) throw ZeroDenominator("residue field inverse of zero");
    auto [g, u, v] = poly_xgcd(rep_, fld_->modulus);
    (void)v;
    assert(g.degree() == 0);
    return ResidueElem(u * (Rat(1) / g.coeff(0)), fld_);
}

Rat ResidueElem::trace() const {
    // trace of the multiplication matrix in the basis 1, t, .., t^{d-1}
    int d = fld_->degree();
    Rat tr(0);
    Poly cur = rep_;
    const Poly t = Poly::variable();
    for (int i = 0; i < d; ++i) {
        tr += cur.coeff(i);
        if (i + 1 < d) cur = (cur * t).divrem(fld_->modulus).second;
    }
    return tr;
}

std::vector<Rat> field_coords(const ResidueElem& x) {
    int d = x.field()->degree();
    std::vector<Rat> out(d);
    for (int i = 0; i < d; ++i) out[i] = x.rep().coeff(i);
    return out;
}

} // namespace ellsurf
