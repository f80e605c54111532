#include "ellsurf/gaussmanin.hpp"

#include <array>
#include <cassert>

#include "ellsurf/linalg.hpp"
#include "ellsurf/localsolve.hpp"

namespace ellsurf {

namespace {

// polynomials in the fiber coordinate x over Q(t)
using XP = std::vector<RatFunc>;

void xnorm(XP& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int xdeg(const XP& a) { return static_cast<int>(a.size()) - 1; }

RatFunc xcoeff(const XP& a, size_t i) { return i < a.size() ? a[i] : RatFunc::zero(); }

XP xadd(const XP& a, const XP& b) {
    XP out(std::max(a.size(), b.size()), RatFunc::zero());
    for (size_t i = 0; i < out.size(); ++i) out[i] = xcoeff(a, i) + xcoeff(b, i);
    xnorm(out);
    return out;
}

XP xsub(const XP& a, const XP& b) {
    XP out(std::max(a.size(), b.size()), RatFunc::zero());
    for (size_t i = 0; i < out.size(); ++i) out[i] = xcoeff(a, i) - xcoeff(b, i);
    xnorm(out);
    return out;
}

XP xmul(const XP& a, const XP& b) {
    if (a.empty() || b.empty()) return {};
    XP out(a.size() + b.size() - 1, RatFunc::zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    xnorm(out);
    return out;
}

XP xscale(const XP& a, const RatFunc& s) {
    XP out(a.size(), RatFunc::zero());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
    xnorm(out);
    return out;
}

XP xdx(const XP& a) {
    if (a.size() <= 1) return {};
    XP out(a.size() - 1, RatFunc::zero());
    for (size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * RatFunc(Rat(static_cast<long>(i)));
    xnorm(out);
    return out;
}

XP xdt(const XP& a) {
    XP out(a.size(), RatFunc::zero());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i].derivative();
    xnorm(out);
    return out;
}

std::pair<XP, XP> xdivrem(const XP& a, const XP& b) {
    assert(!b.empty());
    XP r = a, q;
    xnorm(r);
    int db = xdeg(b);
    RatFunc lead = b.back().inverse();
    while (xdeg(r) >= db) {
        int k = xdeg(r) - db;
        RatFunc c = r.back() * lead;
        if (static_cast<int>(q.size()) <= k) q.resize(k + 1, RatFunc::zero());
        q[k] = c;
        for (int i = 0; i <= db; ++i) r[i + k] -= c * b[i];
        xnorm(r);
    }
    xnorm(q);
    return {q, r};
}

// extended gcd over Q(t)[x]
std::tuple<XP, XP, XP> xp_xgcd(const XP& a, const XP& b) {
    XP r0 = a, r1 = b;
    XP s0 = {RatFunc::one()}, s1 = {};
    XP t0 = {}, t1 = {RatFunc::one()};
    while (!r1.empty()) {
        auto [q, r] = xdivrem(r0, r1);
        XP s2 = xsub(s0, xmul(q, s1)), t2 = xsub(t0, xmul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    return {r0, s0, t0};
}

RatFunc xeval(const XP& a, const RatFunc& x) {
    RatFunc out;
    for (size_t i = a.size(); i-- > 0;) out = out * x + a[i];
    return out;
}

struct ShortCurve {
    XP f, fx, ft; // y^2 = f(x, t)
};

ShortCurve short_curve(const WeierstrassModel& m) {
    auto iv = invariants(m);
    RatFunc quarter(Rat(1, 4)), half(Rat(1, 2));
    XP f = {iv.b6 * quarter, iv.b4 * half, iv.b2 * quarter, RatFunc::one()};
    return {f, xdx(f), xdt(f)};
}

} // namespace

bool section_on_curve(const WeierstrassModel& m, const Section& s) {
    if (s.at_infinity) return true;
    RatFunc lhs = s.Y * s.Y + m.a1 * s.X * s.Y + m.a3 * s.Y;
    RatFunc rhs = s.X.pow(3) + m.a2 * s.X * s.X + m.a4 * s.X + m.a6;
    return lhs == rhs;
}

Section section_negate(const WeierstrassModel& m, const Section& s) {
    if (s.at_infinity) return s;
    return Section::affine(s.X, -s.Y - m.a1 * s.X - m.a3);
}

Section section_add(const WeierstrassModel& m, const Section& a, const Section& b) {
    assert(m.a1.is_zero() && m.a3.is_zero());
    if (a.at_infinity) return b;
    if (b.at_infinity) return a;
    RatFunc lambda;
    if (a.X == b.X) {
        if (a.Y == -b.Y) return Section::zero();
        // tangent slope
        RatFunc num = RatFunc(Rat(3)) * a.X * a.X + RatFunc(Rat(2)) * m.a2 * a.X + m.a4;
        lambda = num / (RatFunc(Rat(2)) * a.Y);
    } else {
        lambda = (b.Y - a.Y) / (b.X - a.X);
    }
    RatFunc x3 = lambda * lambda - m.a2 - a.X - b.X;
    RatFunc y3 = -(a.Y + lambda * (x3 - a.X));
    return Section::affine(x3, y3);
}

DiffOp2 picard_fuchs(const WeierstrassModel& m) {
    validate(m);
    ShortCurve c = short_curve(m);

    auto [g, u, v] = xp_xgcd(c.f, c.fx);
    if (xdeg(g) != 0)
        throw NonGenericReduction("f and f_x share a root despite nonzero discriminant");
    RatFunc ginv = g[0].inverse();
    XP vv = xscale(v, ginv); // v f_x = 1 mod f

    // class of A dx/y^3 in the basis {dx/y, x dx/y}, exact forms discarded
    auto reduce3 = [&](const XP& A) {
        XP b = xdivrem(xmul(A, vv), c.f).second;
        auto [a, rem] = xdivrem(xsub(A, xmul(b, c.fx)), c.f);
        assert(rem.empty());
        XP res = xadd(a, xscale(xdx(b), RatFunc(Rat(2))));
        assert(xdeg(res) <= 1);
        return res;
    };

    RatFunc mhalf(Rat(-1, 2));
    XP dw = xscale(reduce3(c.ft), mhalf);                        // D[dx/y]
    XP dn = xscale(reduce3(xmul({RatFunc::zero(), RatFunc::one()}, c.ft)), mhalf); // D[x dx/y]
    RatFunc a11 = xcoeff(dw, 0), a12 = xcoeff(dw, 1);
    RatFunc a21 = xcoeff(dn, 0), a22 = xcoeff(dn, 1);

    using Row = std::pair<RatFunc, RatFunc>;
    auto next = [&](const Row& r) {
        return Row{r.first.derivative() + r.first * a11 + r.second * a21,
                   r.second.derivative() + r.first * a12 + r.second * a22};
    };
    const std::array<Row, 3> covectors = {Row{RatFunc::one(), RatFunc::zero()},
                                          Row{RatFunc::one(), RatFunc::one()},
                                          Row{RatFunc::zero(), RatFunc::one()}};
    for (const Row& r0 : covectors) {
        Row r1 = next(r0);
        RatFunc det = r1.first * r0.second - r0.first * r1.second;
        if (det.is_zero()) continue;
        Row r2 = next(r1);
        RatFunc p = (r0.first * r2.second - r2.first * r0.second) / det;
        RatFunc q = (r2.first * r1.second - r1.first * r2.second) / det;
        return {p, q};
    }
    throw NonGenericReduction("no cyclic covector for the Gauss-Manin system");
}

SingPoint classify_singularity(const DiffOp2& op, const Place& v, const WeierstrassModel& m) {
    SingPoint sp{v, local_exponents(op, v)};
    Rat gap = sp.exponents.second - sp.exponents.first;
    int n = 4;
    if (is_integer(gap)) n = std::max<int>(4, static_cast<int>(rat_floor(gap).get_si()) + 2);
    auto basis = frobenius_basis(op, v, n);
    sp.logarithmic = basis.second.log_degree == 1;

    bool good = minimalize_at(m, v).vdelta == 0;
    bool integral = is_integer(sp.exponents.first) && sgn(sp.exponents.first) >= 0 &&
                    is_integer(sp.exponents.second);
    sp.kind = (good && integral && !sp.logarithmic) ? SingKind::Apparent : SingKind::TrueSingular;
    return sp;
}

RatFunc manin_map(const WeierstrassModel& m, const DiffOp2& op, const Section& s) {
    if (!section_on_curve(m, s)) throw SectionNotOnCurve();
    if (s.at_infinity) return RatFunc::zero();

    ShortCurve c = short_curve(m);
    RatFunc X = s.X;
    RatFunc Y = s.Y + (m.a1 * s.X + m.a3) / RatFunc(Rat(2));
    assert(Y * Y == xeval(c.f, X));
    if (Y.is_zero()) return RatFunc::zero(); // half period: op kills it

    RatFunc Xp = X.derivative(), Xpp = Xp.derivative();
    RatFunc half(Rat(1, 2)), two(Rat(2));
    RatFunc endpoint = Xpp / Y -
                       (Xp * Xp * xeval(c.fx, X) + two * Xp * xeval(c.ft, X)) / (two * Y.pow(3)) +
                       op.p * Xp / Y;

    XP ftt = xdt(c.ft);
    XP f2 = xmul(c.f, c.f);
    XP R = xsub(xadd(xscale(f2, op.q), xscale(xmul(c.ft, c.ft), RatFunc(Rat(3, 4)))),
                xscale(xmul(xadd(ftt, xscale(c.ft, op.p)), c.f), half));
    assert(xdeg(R) <= 6);

    // R = S_x f - (3/2) S f_x + T_x f^2 - (1/2) T f_x f, deg S <= 4, deg T <= 1
    XP fxf = xmul(c.fx, c.f);
    Matrix<RatFunc> A(7, std::vector<RatFunc>(7, RatFunc::zero()));
    std::vector<RatFunc> rhs(7, RatFunc::zero());
    for (int i = 0; i < 7; ++i) rhs[i] = xcoeff(R, i);
    for (int k = 0; k <= 4; ++k) { // S = x^k column
        XP mono(k + 1, RatFunc::zero());
        mono[k] = RatFunc::one();
        XP col = xsub(xmul(xdx(mono), c.f), xscale(xmul(mono, c.fx), RatFunc(Rat(3, 2))));
        for (int i = 0; i < 7; ++i) A[i][k] = xcoeff(col, i);
    }
    for (int k = 0; k <= 1; ++k) { // T = x^k column
        XP mono(k + 1, RatFunc::zero());
        mono[k] = RatFunc::one();
        XP col = xsub(xmul(xdx(mono), f2), xscale(xmul(mono, fxf), half));
        for (int i = 0; i < 7; ++i) A[i][5 + k] = xcoeff(col, i);
    }
    auto sol = solve_linear(A, rhs);
    if (!sol)
        throw NonGenericReduction("the inhomogeneous reduction left a nonzero period class");
    XP S(sol->begin(), sol->begin() + 5), T(sol->begin() + 5, sol->end());

    return endpoint + xeval(S, X) / Y.pow(3) + xeval(T, X) / Y;
}

} // namespace ellsurf
