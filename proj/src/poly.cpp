#include "ellsurf/poly.hpp"

#include <cassert>
#include <sstream>
#include <tuple>

#include "ellsurf/errors.hpp"

namespace ellsurf {

std::optional<Rat> rat_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    Int n = r.get_num(), d = r.get_den();
    Int sn, sd;
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rat s(sn, sd);
    s.canonicalize();
    return s;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

void Poly::normalize() {
    while (!coef_.empty() && sgn(coef_.back()) == 0) coef_.pop_back();
}

Poly Poly::variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::monomial(int deg, const Rat& c) {
    if (ellsurf::is_zero(c)) return Poly();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return Poly(std::move(v));
}

const Rat& Poly::leading() const {
    assert(!coef_.empty());
    return coef_.back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coef_.size())) return Rat(0);
    return coef_[i];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rat(0));
    for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rat(0));
    for (size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> r(a.coef_.size() + b.coef_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coef_.size(); ++i)
        for (size_t j = 0; j < b.coef_.size(); ++j)
            r[i + j] += a.coef_[i] * b.coef_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    if (ellsurf::is_zero(s)) return Poly();
    Poly r = *this;
    for (auto& c : r.coef_) c *= s;
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw ZeroPolynomial();
    Poly r = *this;
    if (r.degree() < d.degree()) return {Poly(), r};
    std::vector<Rat> q(r.degree() - d.degree() + 1, Rat(0));
    const Rat& lc = d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rat f = r.leading() / lc;
        q[k] = f;
        for (int i = 0; i <= d.degree(); ++i) r.coef_[k + i] -= f * d.coef_[i];
        r.normalize();
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::div_exact(const Poly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) throw Error("div_exact: division not exact");
    return q;
}

Poly Poly::derivative() const {
    if (coef_.size() <= 1) return Poly();
    std::vector<Rat> r(coef_.size() - 1);
    for (size_t i = 1; i < coef_.size(); ++i) r[i - 1] = coef_[i] * Rat(static_cast<long>(i));
    return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it)
        acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

Poly Poly::pow(unsigned n) const {
    Poly acc = Poly::one(), base = *this;
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

int Poly::multiplicity(const Poly& pi) const {
    assert(!is_zero());
    int m = 0;
    Poly cur = *this;
    for (;;) {
        auto [q, r] = cur.divrem(pi);
        if (!r.is_zero()) return m;
        ++m;
        cur = q;
    }
}

bool Poly::operator<(const Poly& o) const {
    if (coef_.size() != o.coef_.size()) return coef_.size() < o.coef_.size();
    for (size_t i = coef_.size(); i-- > 0;) {
        int c = cmp(coef_[i], o.coef_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat c = coeff(i);
        if (sgn(c) == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0 || !unit) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divrem(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(), s1 = Poly::zero();
    Poly t0 = Poly::zero(), t1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = r0.divrem(r1);
        Poly s = s0 - q * s1, t = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s);
        t0 = std::move(t1); t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rat inv = Rat(1) / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return (a * b).div_exact(poly_gcd(a, b)).monic();
}

Rat resultant(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    // Euclidean remainder sequence with the standard degree bookkeeping.
    Poly f = a, g = b;
    Rat res(1);
    while (g.degree() > 0) {
        Poly r = f.divrem(g).second;
        int df = f.degree(), dg = g.degree(), dr = r.is_zero() ? -1 : r.degree();
        if (r.is_zero()) return Rat(0);
        // res(f,g) = (-1)^{df*dg} lc(g)^{df-dr} res(g,r)
        Rat lcpow(1);
        for (int i = 0; i < df - dr; ++i) lcpow *= g.leading();
        if ((df * dg) % 2 == 1) lcpow = -lcpow;
        res *= lcpow;
        f = std::move(g);
        g = std::move(r);
    }
    // g constant
    Rat lcpow(1);
    for (int i = 0; i < f.degree(); ++i) lcpow *= g.leading();
    return res * lcpow;
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    assert(xs.size() == ys.size());
    Poly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly li = Poly::one();
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li *= Poly(std::vector<Rat>{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        acc += li * (ys[i] / denom);
    }
    return acc;
}

} // namespace ellsurf
