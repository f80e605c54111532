#include "ellsurf/localsolve.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

#include "ellsurf/factor.hpp"
#include "ellsurf/linalg.hpp"

namespace ellsurf {

namespace {

struct FiniteProblem {
    DiffOp2 op;
    RatFunc Z;
    Place v; // always finite
};

FiniteProblem to_finite_chart(const DiffOp2& op, const RatFunc& Z, const Place& v) {
    if (!v.is_infinity()) return {op, Z, v};
    return {infinity_chart(op), infinity_chart_rhs(Z), Place::rational(Rat(0))};
}

ResidueFieldPtr make_field(const Place& v) {
    return std::make_shared<const ResidueField>(ResidueField{v.pi()});
}

std::vector<long> integer_roots_finite(const DiffOp2& op, const Place& v) {
    auto fld = make_field(v);
    ResidueElem theta = place_root(v, fld);
    auto ode = localize<ResidueElem>(op, theta, 1);
    std::set<long> roots;
    if (ode.P[0].is_rational() && ode.Q[0].is_rational()) {
        Rat b = ode.P[0].rational_value() - 1, c = ode.Q[0].rational_value();
        auto s = rat_sqrt(b * b - 4 * c);
        if (s) {
            for (const Rat& r : {Rat((-b - *s) / 2), Rat((-b + *s) / 2)})
                if (is_integer(r)) roots.insert(static_cast<long>(rat_floor(r).get_si()));
        }
    } else {
        // norm of the indicial polynomial down to Q[m], by interpolation
        int d = v.degree();
        std::vector<Rat> xs, ys;
        for (int i = 0; i <= 2 * d; ++i) {
            Rat m(i);
            Poly im = Poly::constant(m * (m - 1)) + ode.P[0].rep() * m + ode.Q[0].rep();
            xs.push_back(m);
            ys.push_back(im.is_zero() ? Rat(0) : resultant(v.pi(), im));
        }
        Poly norm = interpolate(xs, ys);
        assert(!norm.is_zero());
        for (const Poly& f : irreducible_factors(norm)) {
            if (f.degree() != 1) continue;
            Rat r = -f.coeff(0);
            if (!is_integer(r)) continue;
            long k = static_cast<long>(rat_floor(r).get_si());
            // the norm can vanish without the residue-field value vanishing
            ResidueElem ik = ode.indicial(Rat(k), zero_like(theta));
            if (ik.is_zero()) roots.insert(k);
        }
    }
    return std::vector<long>(roots.begin(), roots.end());
}

using AffineVec = std::vector<ResidueElem>; // value = a[0] + sum a[i] alpha_i

} // namespace

std::vector<long> integer_indicial_roots(const DiffOp2& op, const Place& v) {
    if (v.is_infinity()) return integer_roots_finite(infinity_chart(op), Place::rational(Rat(0)));
    return integer_roots_finite(op, v);
}

ExactnessCertificate is_locally_exact(const DiffOp2& op, const RatFunc& Z, const Place& v,
                                      std::optional<long> kmin) {
    ExactnessCertificate cert{v, true, {}};
    FiniteProblem pr = to_finite_chart(op, Z, v);

    std::vector<long> roots = integer_roots_finite(pr.op, pr.v);
    if (roots.empty()) return cert; // unique formal solution, no resonance

    auto fld = make_field(pr.v);
    ResidueElem theta = place_root(pr.v, fld);
    ResidueElem zero = zero_like(theta), one = one_like(theta);

    long vZ = 0;
    bool zhom = pr.Z.is_zero();
    if (!zhom) vZ = *valuation(pr.Z, pr.v);

    long start = roots.front();
    if (!zhom) start = std::min(start, vZ + 2);
    if (kmin) start = std::min(start, *kmin);
    long kmax = roots.back();

    size_t terms = static_cast<size_t>(kmax - start + 1);
    auto ode = localize<ResidueElem>(pr.op, theta, terms);
    LocalExpansion<ResidueElem> ze;
    if (!zhom && kmax - vZ + 1 > 0)
        ze = local_expansion(pr.Z, theta, static_cast<size_t>(kmax - vZ + 1));

    size_t nfree = roots.size(), width = nfree + 1;
    std::vector<AffineVec> c; // c[k - start]
    std::vector<AffineVec> rows;
    size_t next_free = 1;
    for (long k = start; k <= kmax; ++k) {
        AffineVec rhs(width, zero);
        rhs[0] = ze.at(k - 2, zero); // w_k
        for (long j = 1; j <= k - start; ++j) {
            ResidueElem coef = scalar_mul(Rat(k - j), ode.P[j]) + ode.Q[j];
            const AffineVec& prev = c[static_cast<size_t>(k - j - start)];
            for (size_t i = 0; i < width; ++i) rhs[i] = rhs[i] - coef * prev[i];
        }
        ResidueElem ik = ode.indicial(Rat(k), zero);
        AffineVec ck(width, zero);
        if (ik.is_zero()) {
            rows.push_back(rhs); // resonance: rhs must vanish
            ck[next_free++] = one;
        } else {
            ResidueElem inv = ik.inverse();
            for (size_t i = 0; i < width; ++i) ck[i] = inv * rhs[i];
        }
        c.push_back(std::move(ck));
    }
    assert(next_free == width);

    // Eliminate the free parameters; the pivots live in the Z-independent
    // columns, so the leftover residues are linear in Z.
    std::vector<bool> used(rows.size(), false);
    for (size_t col = 1; col < width; ++col) {
        size_t piv = rows.size();
        for (size_t r = 0; r < rows.size(); ++r)
            if (!used[r] && !rows[r][col].is_zero()) { piv = r; break; }
        if (piv == rows.size()) continue;
        used[piv] = true;
        ResidueElem inv = rows[piv][col].inverse();
        for (size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r][col].is_zero()) continue;
            ResidueElem f = rows[r][col] * inv;
            for (size_t i = 0; i < width; ++i) rows[r][i] = rows[r][i] - f * rows[piv][i];
        }
    }
    for (size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        for (const Rat& x : field_coords(rows[r][0])) {
            cert.obstructions.push_back(x);
            if (sgn(x) != 0) cert.locally_exact = false;
        }
    }
    return cert;
}

std::pair<FrobeniusSolution, FrobeniusSolution> frobenius_basis(const DiffOp2& op, const Place& v,
                                                                int N) {
    assert(N >= 1);
    FiniteProblem pr = to_finite_chart(op, RatFunc::zero(), v);
    auto [rho1, rho2] = local_exponents(pr.op, pr.v);
    Rat delta = rho2 - rho1;

    auto fld = make_field(pr.v);
    ResidueElem theta = place_root(pr.v, fld);
    ResidueElem zero = zero_like(theta), one = one_like(theta);
    auto ode = localize<ResidueElem>(pr.op, theta, static_cast<size_t>(N + 1));

    auto indicial = [&](const Rat& rho) { return ode.indicial(rho, zero); };
    auto conv = [&](const std::vector<ResidueElem>& d, const Rat& rho, long k) {
        ResidueElem acc = zero;
        for (long j = 1; j <= k; ++j)
            acc = acc + (scalar_mul(rho + Rat(k - j), ode.P[j]) + ode.Q[j]) * d[k - j];
        return acc;
    };

    FrobeniusSolution y1{v, rho2, 0, zero, fld, {}};
    y1.coeffs.assign(N + 1, zero);
    y1.coeffs[0] = one;
    for (long k = 1; k <= N; ++k)
        y1.coeffs[k] = -(indicial(rho2 + Rat(k)).inverse()) * conv(y1.coeffs, rho2, k);

    // inhomogeneous term produced by log(u) * y1
    auto logterm = [&](long m) {
        ResidueElem h = scalar_mul(2 * (rho2 + Rat(m)) - 1, y1.coeffs[m]);
        for (long j = 0; j <= m; ++j) h = h + ode.P[j] * y1.coeffs[m - j];
        return h;
    };

    FrobeniusSolution y2{v, rho1, 0, zero, fld, {}};
    y2.coeffs.assign(N + 1, zero);
    if (!is_integer(delta)) {
        y2.coeffs[0] = one;
        for (long k = 1; k <= N; ++k)
            y2.coeffs[k] = -(indicial(rho1 + Rat(k)).inverse()) * conv(y2.coeffs, rho1, k);
    } else if (sgn(delta) == 0) {
        y2.log_degree = 1;
        y2.log_multiplier = one;
        for (long k = 1; k <= N; ++k)
            y2.coeffs[k] =
                -(indicial(rho1 + Rat(k)).inverse()) * (conv(y2.coeffs, rho1, k) + logterm(k));
    } else {
        long gap = static_cast<long>(rat_floor(delta).get_si());
        y2.coeffs[0] = one;
        ResidueElem C = zero;
        for (long k = 1; k <= N; ++k) {
            ResidueElem rhs = conv(y2.coeffs, rho1, k);
            if (k > gap) rhs = rhs + C * logterm(k - gap);
            if (k == gap) {
                if (!rhs.is_zero()) {
                    C = -(scalar_mul(Rat(1) / delta, rhs)); // I'(rho2) = delta
                    y2.log_degree = 1;
                    y2.log_multiplier = C;
                }
                y2.coeffs[k] = zero;
            } else {
                y2.coeffs[k] = -(indicial(rho1 + Rat(k)).inverse()) * rhs;
            }
        }
    }
    return {y1, y2};
}

std::optional<RatFunc> rational_solutions(const DiffOp2& op, const RatFunc& Z) {
    if (Z.is_zero()) return RatFunc::zero();

    std::set<Place> places;
    for (const Place& v : singular_support(op))
        if (!v.is_infinity()) places.insert(v);
    for (const Place& v : support(Z))
        if (!v.is_infinity()) places.insert(v);

    auto lower_bound_at = [&](const DiffOp2& o, const RatFunc& z, const Place& v) {
        long l = std::numeric_limits<long>::max();
        for (long r : integer_roots_finite(o, v)) l = std::min(l, r);
        if (!z.is_zero()) {
            Valuation vz = valuation(z, v);
            l = std::min(l, *vz + 2);
        }
        return l == std::numeric_limits<long>::max() ? 0L : std::min(l, 0L);
    };

    Poly B = Poly::one();
    for (const Place& v : places) {
        long l = lower_bound_at(op, Z, v);
        if (l < 0) B *= v.pi().pow(static_cast<unsigned>(-l));
    }

    long linf = lower_bound_at(infinity_chart(op), infinity_chart_rhs(Z), Place::rational(Rat(0)));
    long max_deg = static_cast<long>(B.degree()) - linf;
    if (max_deg < 0) return std::nullopt;

    // op(sum n_i t^i / B) = Z as one exact polynomial identity
    RatFunc rb(Poly::one(), B);
    std::vector<RatFunc> G;
    Poly mono = Poly::one();
    for (long i = 0; i <= max_deg; ++i) {
        G.push_back(op.apply(RatFunc(mono) * rb));
        mono *= Poly::variable();
    }
    Poly den = Z.den();
    for (const RatFunc& g : G)
        if (!g.is_zero()) den = poly_lcm(den, g.den());
    std::vector<Poly> cols;
    size_t nrows = 0;
    for (const RatFunc& g : G) {
        RatFunc h = g * RatFunc(den);
        assert(h.den().degree() == 0 && h.den().coeff(0) == Rat(1));
        cols.push_back(h.num());
        nrows = std::max<size_t>(nrows, h.num().degree() + 1);
    }
    Poly rhs = (Z * RatFunc(den)).num();
    nrows = std::max<size_t>(nrows, rhs.degree() + 1);

    Matrix<Rat> A(nrows, std::vector<Rat>(cols.size(), Rat(0)));
    std::vector<Rat> b(nrows, Rat(0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < nrows; ++i) A[i][j] = cols[j].coeff(static_cast<int>(i));
    for (size_t i = 0; i < nrows; ++i) b[i] = rhs.coeff(static_cast<int>(i));

    auto sol = solve_linear(A, b);
    if (!sol) return std::nullopt;
    std::vector<Rat> nc(max_deg + 1, Rat(0));
    for (long i = 0; i <= max_deg; ++i) nc[i] = (*sol)[i];
    RatFunc f(Poly(std::move(nc)), B);
    assert(op.apply(f) == Z);
    return f;
}

} // namespace ellsurf
