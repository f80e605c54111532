#ifndef ELLSURF_POLY_HPP
#define ELLSURF_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ellsurf/rat.hpp"

namespace ellsurf {

// Dense univariate polynomial over Q. Coefficient i is the coefficient of t^i.
// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat c) { if (!ellsurf::is_zero(c)) coef_.push_back(std::move(c)); }
    explicit Poly(std::vector<Rat> coef) : coef_(std::move(coef)) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rat(1)); }
    static Poly constant(const Rat& c) { return Poly(c); }
    static Poly variable();                   // t
    static Poly monomial(int deg, const Rat& c);

    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return coef_.size() <= 1; }
    bool is_monic() const { return !coef_.empty() && coef_.back() == 1; }

    const Rat& leading() const;
    Rat coeff(int i) const;                   // 0 outside range
    const std::vector<Rat>& coeffs() const { return coef_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return coef_ == o.coef_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Euclidean division: *this = q*d + r with deg r < deg d. Requires d != 0.
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly div_exact(const Poly& d) const;      // throws if remainder nonzero

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Poly compose(const Poly& inner) const;    // this(inner(t))
    Poly monic() const;                       // divide by leading coefficient
    Poly pow(unsigned n) const;

    // Multiplicity of the monic irreducible pi in *this (0 for the zero poly
    // callers must avoid; asserts *this != 0).
    int multiplicity(const Poly& pi) const;

    std::string to_string(const std::string& var = "t") const;

    // Deterministic total order, used as a map key.
    bool operator<(const Poly& o) const;

private:
    void normalize();
    std::vector<Rat> coef_;
};

Poly poly_gcd(const Poly& a, const Poly& b);  // monic gcd; gcd(0,0) = 0
// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or 0).
std::tuple<Poly, Poly, Poly> poly_xgcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

Rat resultant(const Poly& a, const Poly& b);

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

} // namespace ellsurf

#endif
