#include "ellsurf/factor.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "ellsurf/errors.hpp"

namespace ellsurf {
namespace {

// ---- polynomial arithmetic modulo an mpz modulus -------------------------
// Coefficients are kept reduced into [0, m). Vectors are trimmed of leading
// zeros; the zero polynomial is the empty vector.

using ZPoly = std::vector<Int>;

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_reduce(const ZPoly& a, const Int& m) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) mpz_mod(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    zp_trim(r);
    return r;
}

int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) {
        r[i] += b[i];
        if (r[i] >= m) r[i] -= m;
    }
    zp_trim(r);
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
    ZPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
        if (r[i] < 0) r[i] += m;
    }
    zp_trim(r);
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    for (auto& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    zp_trim(r);
    return r;
}

ZPoly zp_scale(const ZPoly& a, const Int& s, const Int& m) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] * s;
        mpz_mod(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    }
    zp_trim(r);
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("inv_mod: not invertible");
    return r;
}

// Division a = q*b + r; requires lc(b) invertible mod m.
std::pair<ZPoly, ZPoly> zp_divrem(const ZPoly& a, const ZPoly& b, const Int& m) {
    assert(!b.empty());
    ZPoly r = a;
    if (zp_deg(r) < zp_deg(b)) return {{}, r};
    Int lcinv = inv_mod(b.back(), m);
    ZPoly q(r.size() - b.size() + 1, Int(0));
    for (int k = zp_deg(r) - zp_deg(b); k >= 0; --k) {
        if (zp_deg(r) != k + zp_deg(b)) continue;
        Int f = r.back() * lcinv;
        mpz_mod(f.get_mpz_t(), f.get_mpz_t(), m.get_mpz_t());
        q[k] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            r[k + i] -= f * b[i];
            mpz_mod(r[k + i].get_mpz_t(), r[k + i].get_mpz_t(), m.get_mpz_t());
        }
        zp_trim(r);
    }
    zp_trim(q);
    return {q, r};
}

ZPoly zp_mod(const ZPoly& a, const ZPoly& b, const Int& m) { return zp_divrem(a, b, m).second; }

ZPoly zp_monic(const ZPoly& a, const Int& m) {
    if (a.empty()) return a;
    return zp_scale(a, inv_mod(a.back(), m), m);
}

ZPoly zp_gcd(ZPoly a, ZPoly b, const Int& p) {
    while (!b.empty()) {
        ZPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

// Extended gcd modulo a prime p: returns (g, s, t), g monic.
std::tuple<ZPoly, ZPoly, ZPoly> zp_xgcd(const ZPoly& a, const ZPoly& b, const Int& p) {
    ZPoly r0 = a, r1 = b, s0 = {Int(1)}, s1 = {}, t0 = {}, t1 = {Int(1)};
    while (!r1.empty()) {
        auto [q, r] = zp_divrem(r0, r1, p);
        ZPoly s = zp_sub(s0, zp_mul(q, s1, p), p);
        ZPoly t = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
        t0 = std::move(t1); t1 = std::move(t);
    }
    if (r0.empty()) return {r0, s0, t0};
    Int inv = inv_mod(r0.back(), p);
    return {zp_scale(r0, inv, p), zp_scale(s0, inv, p), zp_scale(t0, inv, p)};
}

ZPoly zp_powmod(const ZPoly& base, Int e, const ZPoly& f, const Int& p) {
    ZPoly acc = {Int(1)}, b = zp_mod(base, f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = zp_mod(zp_mul(acc, b, p), f, p);
        b = zp_mod(zp_mul(b, b, p), f, p);
        e >>= 1;
    }
    return acc;
}

ZPoly zp_derivative(const ZPoly& a, const Int& m) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) {
        r[i - 1] = a[i] * static_cast<long>(i);
        mpz_mod(r[i - 1].get_mpz_t(), r[i - 1].get_mpz_t(), m.get_mpz_t());
    }
    zp_trim(r);
    return r;
}

// ---- Cantor-Zassenhaus factorization over GF(p), p odd -------------------

std::mt19937_64 czrng(0x5eed1234abcdULL);

ZPoly random_poly(int deg_below, const Int& p) {
    std::uniform_int_distribution<unsigned long> d(0, p.get_ui() - 1);
    ZPoly r(deg_below);
    for (auto& c : r) c = static_cast<long>(d(czrng));
    zp_trim(r);
    return r;
}

void equal_degree_split(const ZPoly& f, int d, const Int& p, std::vector<ZPoly>& out) {
    if (zp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    Int e = 1;
    for (int i = 0; i < d; ++i) e *= p;
    e = (e - 1) / 2;
    for (;;) {
        ZPoly r = random_poly(zp_deg(f), p);
        if (zp_deg(r) < 1) continue;
        ZPoly s = zp_powmod(r, e, f, p);
        s = zp_sub(s, {Int(1)}, p);
        ZPoly g = zp_gcd(s, f, p);
        if (zp_deg(g) > 0 && zp_deg(g) < zp_deg(f)) {
            equal_degree_split(g, d, p, out);
            equal_degree_split(zp_divrem(f, g, p).first, d, p, out);
            return;
        }
    }
}

std::vector<ZPoly> factor_mod_p(const ZPoly& fin, const Int& p) {
    std::vector<ZPoly> out;
    ZPoly f = zp_monic(fin, p);
    // distinct-degree decomposition
    ZPoly x = {Int(0), Int(1)};
    ZPoly h = x;
    int d = 0;
    while (zp_deg(f) > 0) {
        ++d;
        if (2 * d > zp_deg(f)) break;
        h = zp_powmod(h, p, f, p);
        ZPoly g = zp_gcd(zp_sub(h, x, p), f, p);
        if (zp_deg(g) > 0) {
            equal_degree_split(g, d, p, out);
            f = zp_divrem(f, g, p).first;
            h = zp_mod(h, f, p);
        }
    }
    if (zp_deg(f) > 0) out.push_back(f);
    return out;
}

// ---- Hensel lifting -------------------------------------------------------

struct LiftPair {
    ZPoly g, h, s, t; // f = g h (mod m), s g + t h = 1 (mod m)
};

// One quadratic step: from modulus m to m^2 (Modern Computer Algebra, 15.10).
void hensel_step(const ZPoly& f, LiftPair& lp, const Int& m) {
    Int m2 = m * m;
    ZPoly e = zp_reduce(zp_sub(f, zp_mul(lp.g, lp.h, m2), m2), m2);
    auto [q, r] = zp_divrem(zp_mul(lp.s, e, m2), lp.h, m2);
    ZPoly g1 = zp_add(zp_add(lp.g, zp_mul(lp.t, e, m2), m2), zp_mul(q, lp.g, m2), m2);
    ZPoly h1 = zp_add(lp.h, r, m2);
    ZPoly b = zp_sub(zp_add(zp_mul(lp.s, g1, m2), zp_mul(lp.t, h1, m2), m2), {Int(1)}, m2);
    auto [c, dd] = zp_divrem(zp_mul(lp.s, b, m2), h1, m2);
    ZPoly s1 = zp_sub(lp.s, dd, m2);
    ZPoly t1 = zp_sub(zp_sub(lp.t, zp_mul(lp.t, b, m2), m2), zp_mul(c, g1, m2), m2);
    lp = {g1, h1, s1, t1};
}

// Lift the factorization f = lc * prod(monic factors) from mod p to mod >= target.
// Returns monic factors mod the final modulus mfinal.
void lift_tree(const ZPoly& f, const std::vector<ZPoly>& fs, size_t lo, size_t hi,
               const Int& p, const Int& target, const Int& mfinal,
               std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(zp_monic(zp_reduce(f, mfinal), mfinal));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    ZPoly g = {f.back() % p};             // carries the leading coefficient
    for (size_t i = lo; i < mid; ++i) g = zp_mul(g, fs[i], p);
    ZPoly h = {Int(1)};
    for (size_t i = mid; i < hi; ++i) h = zp_mul(h, fs[i], p);
    auto [one, s, t] = zp_xgcd(g, h, p);
    assert(zp_deg(one) == 0);
    LiftPair lp{g, h, s, t};
    Int m = p;
    while (m < target) {
        hensel_step(zp_reduce(f, m * m), lp, m);
        m *= m;
    }
    lift_tree(zp_reduce(lp.g, m), fs, lo, mid, p, target, m, out);
    lift_tree(zp_reduce(lp.h, m), fs, mid, hi, p, target, m, out);
}

// ---- integer polynomial helpers -------------------------------------------

struct IPoly {
    std::vector<Int> c;
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

IPoly to_primitive_int(const Poly& q, Int* denom_out = nullptr) {
    Int den(1);
    for (const auto& co : q.coeffs()) den = den / gcd(den, Int(co.get_den())) * Int(co.get_den());
    IPoly r;
    r.c.resize(q.coeffs().size());
    Int cont(0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        Rat v = q.coeffs()[i] * Rat(den);
        assert(v.get_den() == 1);
        r.c[i] = v.get_num();
        cont = gcd(cont, r.c[i]);
    }
    if (cont == 0) cont = 1;
    if (!r.c.empty() && sgn(r.c.back()) < 0) cont = -cont;
    for (auto& x : r.c) x /= cont;
    if (denom_out) *denom_out = den;
    return r;
}

Poly to_poly(const IPoly& p) {
    std::vector<Rat> c(p.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.c[i]);
    return Poly(std::move(c));
}

IPoly symmetric_rep(const ZPoly& a, const Int& m) {
    IPoly r;
    r.c.resize(a.size());
    Int half = m / 2;
    for (size_t i = 0; i < a.size(); ++i) r.c[i] = a[i] > half ? Int(a[i] - m) : a[i];
    while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    return r;
}

IPoly ip_primitive(IPoly p) {
    Int cont(0);
    for (const auto& x : p.c) cont = gcd(cont, x);
    if (cont == 0) return p;
    if (sgn(p.c.back()) < 0) cont = -cont;
    for (auto& x : p.c) x /= cont;
    return p;
}

bool ip_divides(const IPoly& d, const IPoly& f) {
    // exact division test over Q via Poly
    auto [q, r] = to_poly(f).divrem(to_poly(d));
    (void)q;
    return r.is_zero();
}

IPoly ip_div(const IPoly& f, const IPoly& d) {
    Poly q = to_poly(f).div_exact(to_poly(d));
    return to_primitive_int(q);
}

// ---- Zassenhaus on a primitive squarefree integer polynomial --------------

std::vector<Poly> zassenhaus(const IPoly& P) {
    int n = P.deg();
    if (n <= 0) return {};
    if (n == 1) return {to_poly(P).monic()};

    const Int& lc = P.c.back();
    // pick a prime
    Int p(3);
    ZPoly fp;
    for (;;) {
        if (lc % p != 0) {
            fp.assign(P.c.begin(), P.c.end());
            fp = zp_reduce(fp, p);
            if (zp_deg(fp) == n) {
                ZPoly g = zp_gcd(fp, zp_derivative(fp, p), p);
                if (zp_deg(g) == 0) break;
            }
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }

    std::vector<ZPoly> modular = factor_mod_p(fp, p);
    std::sort(modular.begin(), modular.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    if (modular.size() == 1) return {to_poly(P).monic()};

    // Landau-Mignotte style bound on factor coefficients.
    Int maxc(0);
    for (const auto& x : P.c) if (abs(x) > maxc) maxc = abs(x);
    Int bound = abs(lc) * maxc;
    for (int i = 0; i < n + 2; ++i) bound *= 2;
    Int target = 2 * bound + 1;

    std::vector<ZPoly> lifted;
    ZPoly f_int(P.c.begin(), P.c.end());
    Int m = p;
    while (m < target) m *= m;
    lift_tree(zp_reduce(f_int, m), modular, 0, modular.size(), p, target, m, lifted);

    // Recombination.
    std::vector<Poly> result;
    IPoly rem = P;
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);

    size_t subset_size = 1;
    while (2 * subset_size <= live.size()) {
        bool found_any = false;
        std::vector<int> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = static_cast<int>(i);
        for (;;) {
            // candidate = lc(rem) * prod lifted[live[idx]]  (symmetric rep, primitive part)
            ZPoly cand = {Int(rem.c.back() % m)};
            if (cand[0] < 0) cand[0] += m;
            zp_trim(cand);
            for (size_t i = 0; i < subset_size; ++i) cand = zp_mul(cand, lifted[live[idx[i]]], m);
            IPoly c = ip_primitive(symmetric_rep(cand, m));
            if (c.deg() >= 1 && ip_divides(c, rem)) {
                result.push_back(to_poly(c).monic());
                rem = ip_div(rem, c);
                std::vector<int> nl;
                for (size_t i = 0, k = 0; i < live.size(); ++i) {
                    if (k < subset_size && static_cast<int>(i) == idx[k]) { ++k; continue; }
                    nl.push_back(live[i]);
                }
                live = std::move(nl);
                found_any = true;
                break;
            }
            // next subset
            int pos = static_cast<int>(subset_size) - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(live.size() - subset_size + pos)) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t i = pos + 1; i < subset_size; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!found_any) ++subset_size;
    }
    if (rem.deg() >= 1) result.push_back(to_poly(rem).monic());
    return result;
}

// Yun's squarefree decomposition of a monic polynomial over Q.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    Poly g = poly_gcd(f, f.derivative());
    Poly w = f.div_exact(g).monic();
    Poly y = f.derivative().div_exact(g);
    Poly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        Poly gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        w = w.div_exact(gi).monic();
        y = z.div_exact(gi);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

} // namespace

Factorization factor(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    Factorization out;
    out.content = p.leading();
    if (p.degree() == 0) return out;
    Poly f = p.monic();
    for (const auto& [sqf, mult] : squarefree_decompose(f)) {
        IPoly ip = to_primitive_int(sqf);
        for (const Poly& irr : zassenhaus(ip)) out.factors.emplace_back(irr, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<Poly> irreducible_factors(const Poly& p) {
    std::vector<Poly> out;
    for (const auto& [f, m] : factor(p).factors) out.push_back(f);
    return out;
}

bool is_irreducible(const Poly& p) {
    if (p.degree() < 1) return false;
    auto f = factor(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

} // namespace ellsurf
