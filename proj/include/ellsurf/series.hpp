#ifndef ELLSURF_SERIES_HPP
#define ELLSURF_SERIES_HPP

#include <cassert>
#include <vector>

#include "ellsurf/errors.hpp"
#include "ellsurf/place.hpp"
#include "ellsurf/ratfunc.hpp"

namespace ellsurf {

// Truncated Laurent expansion sum_k coeffs[k] u^(val+k) in the local
// uniformizer u = t - theta, theta a root of the place in its residue field.
template <class F>
struct LocalExpansion {
    long val = 0;
    std::vector<F> coeffs; // leading coefficient nonzero unless the function is zero

    bool is_zero() const { return coeffs.empty(); }
    // coefficient of u^e; e must lie below the truncation horizon
    F at(long e, const F& model_zero) const {
        if (is_zero() || e < val || e >= val + static_cast<long>(coeffs.size()))
            return model_zero;
        return coeffs[e - val];
    }
};

template <class F>
std::vector<F> series_mul(const std::vector<F>& a, const std::vector<F>& b, size_t n,
                          const F& model_zero) {
    std::vector<F> out(n, model_zero);
    for (size_t i = 0; i < a.size() && i < n; ++i)
        for (size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

// 1 / a as a power series; a[0] must be a unit.
template <class F>
std::vector<F> series_inv(const std::vector<F>& a, size_t n, const F& model_zero) {
    assert(!a.empty() && !field_is_zero(a[0]));
    std::vector<F> out(n, model_zero);
    F lead = field_inv(a[0]);
    out[0] = lead;
    for (size_t k = 1; k < n; ++k) {
        F acc = model_zero;
        for (size_t j = 1; j <= k && j < a.size(); ++j) acc = acc + a[j] * out[k - j];
        out[k] = model_zero - lead * acc;
    }
    return out;
}

// Coefficients of p(theta + u): the full finite Taylor shift, done by the
// in-place Horner scheme over the coefficient field.
template <class F>
std::vector<F> poly_taylor_shift(const Poly& p, const F& theta) {
    F z = zero_like(theta);
    if (p.is_zero()) return {};
    int d = p.degree();
    std::vector<F> a(d + 1, z);
    for (int i = 0; i <= d; ++i) a[i] = scalar_mul(p.coeff(i), one_like(theta));
    for (int j = 0; j <= d; ++j)
        for (int i = d - 1; i >= j; --i) a[i] = a[i] + theta * a[i + 1];
    return a;
}

// Expansion of f at the place with root theta, to `terms` coefficients.
template <class F>
LocalExpansion<F> local_expansion(const RatFunc& f, const F& theta, size_t terms) {
    LocalExpansion<F> out;
    if (f.is_zero() || terms == 0) return out;
    F z = zero_like(theta);
    std::vector<F> num = poly_taylor_shift(f.num(), theta);
    std::vector<F> den = poly_taylor_shift(f.den(), theta);
    size_t vn = 0, vd = 0;
    while (vn < num.size() && field_is_zero(num[vn])) ++vn;
    while (vd < den.size() && field_is_zero(den[vd])) ++vd;
    assert(vn < num.size() && vd < den.size());
    num.erase(num.begin(), num.begin() + vn);
    den.erase(den.begin(), den.begin() + vd);
    out.val = static_cast<long>(vn) - static_cast<long>(vd);
    out.coeffs = series_mul(num, series_inv(den, terms, z), terms, z);
    return out;
}

// Root of the place in its residue field: the rational point for degree one,
// the class of t otherwise.
inline Rat place_root_rational(const Place& v) {
    assert(!v.is_infinity() && v.degree() == 1);
    return -v.pi().coeff(0);
}

inline ResidueElem place_root(const Place& v, const ResidueFieldPtr& fld) {
    assert(!v.is_infinity());
    return ResidueElem(Poly::variable(), fld);
}

} // namespace ellsurf

#endif
